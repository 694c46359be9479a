#pragma once

#include <cstdint>

#include "ivds/bitstrings.hpp"
#include "ivds/subgraph.hpp"

namespace ivds {

/// Directed graph with {0,1} arc weights (the Manhattan grid).
struct WeightedDigraph {
    struct Arc {
        int from, to, w;
        bool operator<(const Arc &o) const {
            if (from != o.from) return from < o.from;
            if (to != o.to) return to < o.to;
            return w < o.w;
        }
        bool operator==(const Arc &o) const {
            return from == o.from && to == o.to && w == o.w;
        }
    };
    int nverts = 0;
    std::vector<Arc> arcs;
    std::vector<char> is_terminal;
    std::vector<int> terminals;
};

struct Manhattan {
    WeightedDigraph d;
    int k = 0, gamma = 0;
    std::vector<int> t_left, t_mid, t_right;  // t_mid[i] = (rev(i), i)

    int vid(int i, int j) const { return i * (k + 2) + (j + 1); }
    std::pair<int, int> cell(int v) const {
        return {v / (k + 2), v % (k + 2) - 1};
    }
};

Manhattan gen_manhattan(int k);

/// Interval counterpart of the Manhattan graph: k(k+2) unit intervals at
/// multiples of 1/k, arranged column-major into the grid array.
struct Gint {
    Instance inst;
    int k = 0, gamma = 0;
    std::vector<int> canon_of_cell;            // vid(i,j) -> canonical id
    std::vector<std::pair<int, int>> cell_of;  // canonical id -> (i,j)
    std::vector<int> t_mid;                    // canonical ids, column order

    int vid(int i, int j) const { return i * (k + 2) + (j + 1); }
};

Gint gen_gint(int k);

/// The +1-approximation lower-bound family: 2k-2 long non-terminals
/// overlapping in a chain, k short terminals hanging off the joints.
Instance gen_hard(int k);

struct Gzero {
    Instance inst;
    int k = 0;
    std::vector<int> terminal_at;  // coordinate x in [-k,k] -> canonical id (index x+k)
};

/// k+1 length-k non-terminals and 2k+1 point terminals.
Gzero gen_gzero(int k);

struct SetCoverInstance {
    int n = 0;                           // universe {1..n}
    std::vector<std::vector<int>> sets;  // each subset of {1..n}
};

struct Gset {
    Graph g;
    int n = 0, m = 0;
    int t0 = 0, t1 = 0;
    int u_vertex(int u, int i) const { return i * n + (u - 1); }  // copy i in [0,m]
    int s_vertex(int j) const { return n * (m + 1) + j; }         // j in [0,m)
};

/// The NP-hardness reduction graph (generic, not an interval graph).
Gset gen_gset(const SetCoverInstance &sc);

enum class Flavor { general, unit_point };

/// Deterministic random instance; unit_point emits k point terminals and
/// n-k unit non-terminals, with terminal connectivity guaranteed.
Instance gen_random(int n, int k, uint64_t seed, Flavor flavor);

/// Maps a subgraph of gen_gint(k) containing all horizontal edges onto a
/// subgraph of gen_manhattan(k): vertical edges become upward arcs, slant
/// edges become 0-weight downward arcs.
std::vector<WeightedDigraph::Arc> slant_transform(const Gint &gi,
                                                  const Subgraph &h_int,
                                                  const Manhattan &mh);

}  // namespace ivds
