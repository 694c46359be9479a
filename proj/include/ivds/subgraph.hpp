#pragma once

#include <set>
#include <utility>
#include <vector>

#include "ivds/core.hpp"

namespace ivds {

/// Vertex/edge subset of a host graph (a subgraph, never a minor).
/// Immutable by convention once built; edges are normalized (u < v).
struct Subgraph {
    const Graph *host = nullptr;
    std::vector<char> vert;
    std::set<std::pair<int, int>> edges;

    Subgraph() = default;
    explicit Subgraph(const Graph &g) : host(&g), vert(g.n(), 0) {}

    void add_vertex(int v);
    void add_edge(int u, int v);          // must be a host edge
    void add_path(const Path &p);
    void merge(const Subgraph &other);
    bool has_edge(int u, int v) const;

    int vertex_count() const;
    int edge_countn() const { return static_cast<int>(edges.size()); }

    /// Adjacency lists over host vertex ids (degree from edge set only).
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;

    /// Distances from src inside the subgraph.
    std::vector<int> bfs_all(int src) const;
};

struct Violation {
    int u, v;
    int d_host;
    int d_sub;  // kUnreachable = infinity
};

struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Vertices of degree >= 3 in H (terminals included, per the definition).
std::pair<int, std::vector<int>> branching_vertices(const Subgraph &H);

/// Edges with at least one endpoint that is a non-terminal of degree >= 3.
int branching_edges(const Subgraph &H);

/// ok iff every terminal pair's distance in H equals its distance in G.
VerificationReport verify_preserving(const Graph &G, const Subgraph &H);

/// ok iff d_G <= d_H <= d_G + slack on every terminal pair.
VerificationReport verify_approx(const Graph &G, const Subgraph &H, int slack);

}  // namespace ivds
