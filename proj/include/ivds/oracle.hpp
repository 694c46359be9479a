#pragma once

#include <stdexcept>

#include "ivds/instances.hpp"

namespace ivds {

struct SearchBudget {
    int max_candidate_edges = 22;
    long long max_states = 1LL << 22;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edges lying on some terminal-pair path of length <= d + slack; no other
/// edge can appear in a feasible subgraph.
std::vector<std::pair<int, int>> candidate_edges(const Graph &g, int slack);

struct OracleResult {
    int min = 0;
    Subgraph witness;
};

/// Exact minimum branching-vertex count over all distance-preserving
/// subgraphs (branch-and-bound over shortest-path unions).
OracleResult min_branching_dps(const Graph &g, bool count_terminal_branching,
                               const SearchBudget &budget = {});

/// Same search with the +slack approximation predicate.
OracleResult min_branching_das(const Instance &G, int slack,
                               const SearchBudget &budget = {});

/// Plain enumeration over subsets of ALL host edges (tiny instances only);
/// cross-check for the candidate-edge restriction.
OracleResult min_branching_exhaustive(const Graph &g, int slack,
                                      bool count_terminal_branching,
                                      const SearchBudget &budget = {});

/// Exact minimum cover size, kUnreachable when no cover exists.
int min_set_cover(const SetCoverInstance &sc);

/// 0-1 breadth-first search over the given arcs; -1 where unreachable.
std::vector<long long> weighted_dist_all(int nverts,
                                         const std::vector<WeightedDigraph::Arc> &arcs,
                                         int src);
long long weighted_distance(const WeightedDigraph &d, int u, int v);
long long weighted_distance_arcs(int nverts,
                                 const std::vector<WeightedDigraph::Arc> &arcs,
                                 int u, int v);

/// One minimum-weight path (deterministic parent choice), empty if none.
std::vector<int> weighted_path(int nverts,
                               const std::vector<WeightedDigraph::Arc> &arcs,
                               int u, int v);

struct BipartiteCoverFamily {
    int n = 0;
    // each graph: edge list over vertex set {1..n}
    std::vector<std::vector<std::pair<int, int>>> graphs;
};

struct HanselReport {
    bool covers_kn = false;
    int sum_non_isolated = 0;
    double bound = 0;  // n * log2(n)
};

/// Rejects non-bipartite members; when the family covers K_n, the Hansel
/// inequality sum >= n log2 n is asserted.
HanselReport hansel_verify(const BipartiteCoverFamily &fam);

/// The B_I family of the G_zero proof, read off a subgraph H.
BipartiteCoverFamily extract_hansel_family(const Gzero &gz, const Subgraph &h);

}  // namespace ivds
