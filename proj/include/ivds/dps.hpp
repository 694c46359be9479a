#pragma once

#include "ivds/subgraph.hpp"

namespace ivds {

/// Terminals are points, non-terminals unit intervals.
bool is_unit_point(const Instance &G);

struct H0Result {
    Subgraph h;
    std::vector<Path> paths;  // paths[i] = greedy path from terminal i to
                              // the last terminal (trivial for the last one)
};

/// H_0: union of greedy paths from every terminal to the rightmost one.
H0Result build_h0(const Instance &G);

/// Add greedy paths between all terminal pairs at distance <= 4.
void augment_near_pairs(const Instance &G, Subgraph &h);

/// Largest cut x among {b-1} and the window's terminal coordinates with
/// b-x >= 1 and at least ceil(T/2) terminals in [x,b].
Rat choose_cut(const Instance &G, const Rat &a, const Rat &b,
               bool right_open = false);

struct LevelStats {
    int depth = 0;
    int window_terminals = 0;
    int added_va = 0;  // non-terminals added by H_A
    int added_hb = 0;  // non-terminal endpoints added by H_B
};

struct DpsStats {
    std::vector<LevelStats> levels;
    int h0_branching = 0;
    int augment_edges = 0;
    int star_nonterminals = 0;  // total non-terminal additions of H_A u H_B
};

/// Divide-and-conquer star subgraph H* for the window [a,b] (or [a,b)).
Subgraph build_dps_recursive(const Instance &G, const H0Result &h0,
                             const Rat &a, const Rat &b,
                             DpsStats *stats = nullptr, int depth = 0,
                             bool right_open = false);

struct DpsResult {
    Subgraph h;
    DpsStats stats;
};

DpsResult build_dps_unit_point(const Instance &G);

/// How each vertex of the normalized instance relates to the host graph.
struct NormalizationMap {
    enum class Role { nonterminal, t_left, t_right };
    struct Origin {
        int host;  // host canonical vertex id
        Role role;
    };
    std::vector<Origin> origin;     // by normalized canonical vertex id
    std::vector<int> deleted;       // host ids of dominated non-terminals
    std::vector<Interval> rerep;    // unit/point coordinates, canonical order
};

struct Normalized {
    Instance inst;
    NormalizationMap map;
};

/// Split terminals into point pairs, delete dominated non-terminals, and
/// re-represent the remainder with unit intervals (adjacency-preserving).
Normalized normalize(const Instance &G);

/// Map a subgraph of the normalized instance back onto the host graph.
Subgraph lift(const Subgraph &h_prime, const Normalized &norm,
              const Instance &G);

/// Full pipeline: normalize if needed, build, lift.
DpsResult build_dps(const Instance &G);

}  // namespace ivds
