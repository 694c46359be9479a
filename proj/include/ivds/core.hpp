#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ivds {

// Exact coordinates; all paper instances use small rationals.
// et_off keeps arithmetic results plain Rat (std::min/max friendly).
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

constexpr int kUnreachable = -1;

/// Closed segment [left,right] on the real line.
struct Interval {
    Rat left;
    Rat right;

    Interval() = default;
    Interval(Rat l, Rat r) : left(std::move(l)), right(std::move(r)) {
        if (left > right) throw std::invalid_argument("interval: left > right");
    }

    bool contains(const Rat &a) const { return left <= a && a <= right; }
    bool intersects(const Interval &o) const {
        return left <= o.right && o.left <= right;
    }
    Rat length() const { return right - left; }
    bool is_point() const { return left == right; }
    bool is_unit() const { return right - left == 1; }
    // strict containment on original coordinates
    bool strictly_contains(const Interval &o) const {
        return left < o.left && right > o.right;
    }
    bool operator==(const Interval &o) const {
        return left == o.left && right == o.right;
    }
};

/// Plain adjacency-list graph with a distinguished terminal subset.
/// Interval instances embed one of these; the set-cover reduction emits
/// one directly.
struct Graph {
    std::vector<std::vector<int>> adj;   // sorted neighbor lists
    std::vector<char> is_terminal;
    std::vector<int> terminals;          // ascending vertex ids

    int n() const { return static_cast<int>(adj.size()); }
    int k() const { return static_cast<int>(terminals.size()); }
    bool adjacent(int u, int v) const;
    long long edge_count() const;
    void finalize();                     // sort lists, collect terminals
};

/// Simple path; length is the edge count.
struct Path {
    std::vector<int> verts;
    int length() const { return static_cast<int>(verts.size()) - 1; }
    bool empty() const { return verts.empty(); }
};

/// Interval graph with vertices in canonical (prec) order: sorted by right
/// endpoint, ties broken by input index (symbolic perturbation). Adjacency
/// is computed on the original coordinates, so tied endpoints still touch.
struct Instance {
    std::vector<Interval> ivs;      // canonical order
    Graph g;
    std::vector<int> far_right;     // greedy successor, -1 if none

    int n() const { return g.n(); }
    int k() const { return g.k(); }
    const std::vector<int> &terminals() const { return g.terminals; }
    bool adjacent(int u, int v) const { return g.adjacent(u, v); }
};

struct BuildResult {
    Instance inst;
    std::vector<int> to_canonical;  // input index -> canonical vertex id
};

BuildResult build_instance(const std::vector<Interval> &intervals,
                           const std::vector<char> &terminal_flags);

/// Exact unweighted distance, kUnreachable when disconnected.
int bfs_distance(const Graph &g, int u, int v);

/// Distances from src to every vertex (kUnreachable where disconnected).
std::vector<int> bfs_all(const Graph &g, int src);

/// One canonical shortest path (BFS parent tracking), nullopt if disconnected.
std::optional<Path> bfs_path(const Graph &g, int u, int v);

/// Greedy shortest path P^gr(u,v): step to the neighbor reaching farthest
/// right until the current interval intersects v, then append v.
/// Requires u prec v (canonical ids); nullopt when no path exists.
std::optional<Path> greedy_path(const Instance &G, int u, int v);

/// Frontier sequence of the greedy walk from u: u itself, then repeatedly
/// the farthest-right neighbor, until the walk stops advancing.
std::vector<int> greedy_walk(const Instance &G, int u);

struct WindowResult {
    Instance inst;
    std::vector<int> to_host;       // window vertex id -> host vertex id
};

/// Induced subgraph on intervals meeting [a,b] (or [a,b) when right_open).
WindowResult window(const Instance &G, const Rat &a, const Rat &b,
                    bool right_open = false);

}  // namespace ivds
