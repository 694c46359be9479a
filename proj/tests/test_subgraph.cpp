#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ivds/das.hpp"
#include "ivds/instances.hpp"
#include "ivds/subgraph.hpp"

using namespace ivds;

namespace {

Graph path_graph(int n, std::vector<int> term) {
    Graph g;
    g.adj.resize(n);
    g.is_terminal.assign(n, 0);
    for (int v = 0; v + 1 < n; ++v) {
        g.adj[v].push_back(v + 1);
        g.adj[v + 1].push_back(v);
    }
    for (int t : term) g.is_terminal[t] = 1;
    g.finalize();
    return g;
}

Graph star_graph(int leaves) {
    Graph g;
    g.adj.resize(leaves + 1);
    g.is_terminal.assign(leaves + 1, 0);
    for (int v = 1; v <= leaves; ++v) {
        g.adj[0].push_back(v);
        g.adj[v].push_back(0);
        g.is_terminal[v] = 1;
    }
    g.finalize();
    return g;
}

Subgraph full(const Graph &g) {
    Subgraph h(g);
    for (int v = 0; v < g.n(); ++v) {
        h.add_vertex(v);
        for (int u : g.adj[v])
            if (v < u) h.add_edge(v, u);
    }
    return h;
}

}  // namespace

TEST_CASE("subgraph bookkeeping") {
    Graph g = path_graph(4, {0, 3});
    Subgraph h(g);
    CHECK(h.vertex_count() == 0);
    h.add_edge(2, 1);  // normalizes and inserts endpoints
    CHECK(h.vertex_count() == 2);
    CHECK(h.has_edge(1, 2));
    CHECK(h.has_edge(2, 1));
    CHECK_FALSE(h.has_edge(0, 1));
    CHECK_THROWS(h.add_edge(0, 2));  // not a host edge
    auto deg = h.degrees();
    CHECK(deg[1] == 1);
    CHECK(deg[0] == 0);
}

TEST_CASE("add_path and merge") {
    Graph g = path_graph(5, {0, 4});
    Subgraph a(g), b(g);
    a.add_path(Path{{0, 1, 2}});
    b.add_path(Path{{2, 3, 4}});
    a.merge(b);
    CHECK(a.vertex_count() == 5);
    CHECK(a.edge_countn() == 4);
    CHECK(a.bfs_all(0)[4] == 4);
}

TEST_CASE("branching on a path: none") {
    Graph g = path_graph(6, {0, 5});
    Subgraph h = full(g);
    CHECK(branching_vertices(h).first == 0);
    CHECK(branching_edges(h) == 0);
}

TEST_CASE("branching on a star") {
    Graph g = star_graph(4);
    Subgraph h = full(g);
    auto [cnt, verts] = branching_vertices(h);
    CHECK(cnt == 1);
    CHECK(verts == std::vector<int>{0});
    // centre is a non-terminal of degree 4: every edge is branching
    CHECK(branching_edges(h) == 4);
}

TEST_CASE("branching edges ignore high-degree terminals") {
    Graph g = star_graph(4);
    g.is_terminal[0] = 1;
    g.finalize();
    Subgraph h = full(g);
    CHECK(branching_vertices(h).first == 1);  // vertex count still includes it
    CHECK(branching_edges(h) == 0);
}

TEST_CASE("verify_preserving: identity subgraph passes") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Instance G = gen_random(30, 5, 400 + seed, Flavor::general);
        CHECK(verify_preserving(G.g, full(G.g)).ok);
    }
}

TEST_CASE("verify_preserving: detached terminal reported") {
    Graph g = path_graph(3, {0, 2});
    Subgraph h(g);
    h.add_vertex(0);
    h.add_vertex(2);
    auto rep = verify_preserving(g, h);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].d_sub == kUnreachable);
    CHECK(rep.violations[0].d_host == 2);
}

TEST_CASE("verify_approx: slack semantics") {
    // terminals joined by a short and a long route
    Graph g;
    g.adj.resize(5);
    g.is_terminal.assign(5, 0);
    auto link = [&](int u, int v) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    };
    link(0, 1);                       // direct edge, d = 1
    link(0, 2), link(2, 3), link(3, 4), link(4, 1);  // detour, d = 4
    g.is_terminal[0] = g.is_terminal[1] = 1;
    g.finalize();

    Subgraph detour(g);
    detour.add_path(Path{{0, 2, 3, 4, 1}});
    CHECK_FALSE(verify_approx(g, detour, 2).ok);
    CHECK(verify_approx(g, detour, 3).ok);
    CHECK_FALSE(verify_preserving(g, detour).ok);

    Subgraph direct(g);
    direct.add_edge(0, 1);
    CHECK(verify_preserving(g, direct).ok);
}

TEST_CASE("slack 0 approx agrees with preserving") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Instance G = gen_random(25, 4, 800 + seed, Flavor::unit_point);
        DasResult das = build_das(G);
        CHECK(verify_approx(G.g, das.subgraph, 0).ok ==
              verify_preserving(G.g, das.subgraph).ok);
    }
}

TEST_CASE("adding edges never increases subgraph distances") {
    Instance G = gen_random(30, 6, 99, Flavor::unit_point);
    DasResult das = build_das(G);
    Subgraph more = das.subgraph;
    more.merge(full(G.g));
    auto a = das.subgraph.bfs_all(G.terminals()[0]);
    auto b = more.bfs_all(G.terminals()[0]);
    for (int v = 0; v < G.n(); ++v)
        if (a[v] != kUnreachable) {
            REQUIRE(b[v] != kUnreachable);
            CHECK(b[v] <= a[v]);
        }
}
