#include "ivds/subgraph.hpp"

#include <algorithm>
#include <queue>

namespace ivds {

void Subgraph::add_vertex(int v) {
    if (v < 0 || v >= host->n())
        throw std::invalid_argument("subgraph: vertex out of range");
    vert[v] = 1;
}

void Subgraph::add_edge(int u, int v) {
    if (!host->adjacent(u, v))
        throw std::invalid_argument("subgraph: not a host edge");
    add_vertex(u);
    add_vertex(v);
    edges.insert({std::min(u, v), std::max(u, v)});
}

void Subgraph::add_path(const Path &p) {
    for (size_t i = 0; i < p.verts.size(); ++i) {
        add_vertex(p.verts[i]);
        if (i > 0) add_edge(p.verts[i - 1], p.verts[i]);
    }
}

void Subgraph::merge(const Subgraph &other) {
    if (host != other.host)
        throw std::invalid_argument("subgraph: merge across hosts");
    for (int v = 0; v < host->n(); ++v)
        if (other.vert[v]) vert[v] = 1;
    edges.insert(other.edges.begin(), other.edges.end());
}

bool Subgraph::has_edge(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

int Subgraph::vertex_count() const {
    return static_cast<int>(std::count(vert.begin(), vert.end(), 1));
}

std::vector<std::vector<int>> Subgraph::adjacency() const {
    std::vector<std::vector<int>> adj(host->n());
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> Subgraph::degrees() const {
    std::vector<int> deg(host->n(), 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<int> Subgraph::bfs_all(int src) const {
    auto adj = adjacency();
    std::vector<int> dist(host->n(), kUnreachable);
    if (!vert[src]) return dist;
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::pair<int, std::vector<int>> branching_vertices(const Subgraph &H) {
    auto deg = H.degrees();
    std::vector<int> verts;
    for (int v = 0; v < H.host->n(); ++v)
        if (deg[v] >= 3) verts.push_back(v);
    return {static_cast<int>(verts.size()), verts};
}

int branching_edges(const Subgraph &H) {
    auto deg = H.degrees();
    int count = 0;
    for (auto [u, v] : H.edges) {
        bool u_nb = !H.host->is_terminal[u] && deg[u] >= 3;
        bool v_nb = !H.host->is_terminal[v] && deg[v] >= 3;
        if (u_nb || v_nb) ++count;
    }
    return count;
}

static VerificationReport verify_impl(const Graph &G, const Subgraph &H,
                                      int slack) {
    VerificationReport rep;
    const auto &ts = G.terminals;
    for (size_t a = 0; a < ts.size(); ++a) {
        int s = ts[a];
        std::vector<int> dg = bfs_all(G, s);
        std::vector<int> dh = H.vert[s] ? H.bfs_all(s)
                                        : std::vector<int>(G.n(), kUnreachable);
        for (size_t b = a + 1; b < ts.size(); ++b) {
            int t = ts[b];
            if (dg[t] == kUnreachable) continue;  // infinity trivially preserved
            int d_sub = dh[t];
            if (d_sub != kUnreachable && d_sub < dg[t])
                throw std::logic_error("subgraph distance below host distance");
            if (d_sub == kUnreachable || d_sub > dg[t] + slack)
                rep.violations.push_back({s, t, dg[t], d_sub});
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

VerificationReport verify_preserving(const Graph &G, const Subgraph &H) {
    return verify_impl(G, H, 0);
}

VerificationReport verify_approx(const Graph &G, const Subgraph &H, int slack) {
    if (slack < 0) throw std::invalid_argument("verify_approx: negative slack");
    return verify_impl(G, H, slack);
}

}  // namespace ivds
