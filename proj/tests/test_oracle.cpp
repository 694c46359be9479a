#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ivds/das.hpp"
#include "ivds/oracle.hpp"

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

}  // namespace

TEST_CASE("candidate_edges on a path keeps every edge") {
    Graph g = path_graph(5, {0, 4});
    CHECK(candidate_edges(g, 0).size() == 4);
}

TEST_CASE("candidate_edges drops dead-end branches") {
    Graph g = path_graph(5, {0, 4});
    // hang an extra vertex off the middle
    g.adj.push_back({2});
    g.adj[2].push_back(5);
    g.is_terminal.push_back(0);
    g.finalize();
    auto ce = candidate_edges(g, 0);
    CHECK(ce.size() == 4);
    for (auto [u, v] : ce) CHECK(v != 5);
}

TEST_CASE("oracle on a path: zero branching") {
    Graph g = path_graph(6, {0, 5});
    OracleResult r = min_branching_dps(g, true);
    CHECK(r.min == 0);
    CHECK(verify_preserving(g, r.witness).ok);
}

TEST_CASE("oracle forced branching: spider with three terminal legs") {
    Graph g;
    g.adj.resize(7);
    g.is_terminal.assign(7, 0);
    auto link = [&](int u, int v) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    };
    // legs 0-1-c, 2-3-c, 4-5-c with c=6
    link(0, 1), link(1, 6), link(2, 3), link(3, 6), link(4, 5), link(5, 6);
    g.is_terminal[0] = g.is_terminal[2] = g.is_terminal[4] = 1;
    g.finalize();
    OracleResult r = min_branching_dps(g, true);
    CHECK(r.min == 1);
    CHECK(verify_preserving(g, r.witness).ok);
    CHECK(branching_vertices(r.witness).first == 1);
}

TEST_CASE("oracle matches exhaustive enumeration on small instances") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Instance G = gen_random(9, 3, 1500 + seed, Flavor::general);
        if (G.g.edge_count() > 16) continue;
        OracleResult fast = min_branching_dps(G.g, true);
        OracleResult slow = min_branching_exhaustive(G.g, 0, true);
        CHECK(fast.min == slow.min);
        CHECK(verify_preserving(G.g, fast.witness).ok);
    }
}

TEST_CASE("das oracle slack semantics") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        Instance G = gen_random(9, 3, 2500 + seed, Flavor::unit_point);
        SearchBudget big{30, 1LL << 24};
        OracleResult r1 = min_branching_das(G, 1, big);
        OracleResult r0 = min_branching_das(G, 0, big);
        CHECK(r1.min <= r0.min);
        CHECK(verify_approx(G.g, r1.witness, 1).ok);
        CHECK(verify_preserving(G.g, r0.witness).ok);
    }
}

TEST_CASE("hard family needs a branching vertex even with slack 1") {
    Instance G = gen_hard(4);
    SearchBudget big{40, 1LL << 24};
    OracleResult r = min_branching_das(G, 1, big);
    CHECK(r.min >= 1);  // k - 3
    CHECK(verify_approx(G.g, r.witness, 1).ok);
}

TEST_CASE("budget violations raise") {
    Gzero gz = gen_gzero(4);
    CHECK_THROWS_AS(min_branching_dps(gz.inst.g, false, SearchBudget{5, 100}),
                    BudgetExceeded);
}

TEST_CASE("min_set_cover") {
    CHECK(min_set_cover({3, {{1, 2}, {2, 3}, {3}}}) == 2);
    CHECK(min_set_cover({3, {{1, 2, 3}}}) == 1);
    CHECK(min_set_cover({2, {{1}}}) == kUnreachable);
    CHECK(min_set_cover({1, {}}) == kUnreachable);
    CHECK(min_set_cover({2, {{1}, {2}, {1, 2}}}) == 1);
}

TEST_CASE("weighted distances and paths") {
    // 0 -1-> 1 -0-> 2, 0 -1-> 2
    std::vector<WeightedDigraph::Arc> arcs{{0, 1, 1}, {1, 2, 0}, {0, 2, 1}};
    auto d = weighted_dist_all(3, arcs, 0);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == 1);
    CHECK(weighted_distance_arcs(3, arcs, 2, 0) == -1);
    auto p = weighted_path(3, arcs, 0, 2);
    REQUIRE(!p.empty());
    CHECK(p.front() == 0);
    CHECK(p.back() == 2);
    long long w = 0;
    for (size_t q = 0; q + 1 < p.size(); ++q) {
        bool found = false;
        for (const auto &a : arcs)
            if (a.from == p[q] && a.to == p[q + 1]) {
                w += a.w;
                found = true;
                break;
            }
        CHECK(found);
    }
    CHECK(w == 1);
    CHECK(weighted_path(3, arcs, 2, 0).empty());
}

TEST_CASE("weighted distances agree in the manhattan grid") {
    Manhattan mh = gen_manhattan(4);
    auto d = weighted_dist_all(mh.d.nverts, mh.d.arcs, mh.t_left[0]);
    CHECK(d[mh.t_right[0]] == weighted_distance(mh.d, mh.t_left[0], mh.t_right[0]));
}

TEST_CASE("hansel verifier") {
    SUBCASE("two stars on K_4 cover and meet the bound") {
        // bipartitions {1,2}|{3,4} and {1,3}|{2,4}
        BipartiteCoverFamily fam;
        fam.n = 4;
        fam.graphs.push_back({{1, 3}, {1, 4}, {2, 3}, {2, 4}});
        fam.graphs.push_back({{1, 2}, {1, 4}, {3, 2}, {3, 4}});
        HanselReport rep = hansel_verify(fam);
        CHECK(rep.covers_kn);
        CHECK(rep.sum_non_isolated == 8);
        CHECK(rep.bound == doctest::Approx(8.0));
    }
    SUBCASE("n=2 single edge") {
        BipartiteCoverFamily fam{2, {{{1, 2}}}};
        HanselReport rep = hansel_verify(fam);
        CHECK(rep.covers_kn);
        CHECK(rep.sum_non_isolated == 2);
    }
    SUBCASE("non-covering family reported") {
        BipartiteCoverFamily fam{3, {{{1, 2}}}};
        HanselReport rep = hansel_verify(fam);
        CHECK_FALSE(rep.covers_kn);
    }
    SUBCASE("odd cycle rejected") {
        BipartiteCoverFamily fam{3, {{{1, 2}, {2, 3}, {3, 1}}}};
        CHECK_THROWS_AS(hansel_verify(fam), std::invalid_argument);
    }
}

TEST_CASE("hansel family extracted from a gzero witness") {
    Gzero gz = gen_gzero(2);
    SearchBudget big{40, 1LL << 24};
    OracleResult r = min_branching_dps(gz.inst.g, false, big);
    REQUIRE(verify_preserving(gz.inst.g, r.witness).ok);
    BipartiteCoverFamily fam = extract_hansel_family(gz, r.witness);
    CHECK(fam.n == 2);
    HanselReport rep = hansel_verify(fam);
    CHECK(rep.covers_kn);
    CHECK(rep.sum_non_isolated >= 2);
}
