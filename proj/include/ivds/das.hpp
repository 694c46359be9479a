#pragma once

#include "ivds/subgraph.hpp"

namespace ivds {

/// The +1 distance-approximating subgraph with at most 3k branching
/// vertices: shortest-path tree from the first terminal plus every edge
/// joining one of its vertices to an interior terminal.
struct DasResult {
    Subgraph subgraph;
    Path spine;                                     // greedy path t_1 -> t_k
    std::vector<std::pair<int, int>> attachment_edges;
    bool spine_form_equal = true;  // tree form vs spine form edge sets agree
};

/// Union of greedy paths from terminal i (0-based position among the
/// terminals in prec order) to every later terminal.
Subgraph build_tree(const Instance &G, int terminal_pos);

DasResult build_das(const Instance &G);

}  // namespace ivds
