#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ivds/oracle.hpp"

using namespace ivds;

TEST_CASE("gen_hard structure") {
    for (int k = 2; k <= 6; ++k) {
        Instance G = gen_hard(k);
        CHECK(G.n() == 3 * k - 2);
        CHECK(G.k() == k);
        // terminals are pairwise far apart
        const auto &ts = G.terminals();
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j)
                CHECK_FALSE(G.adjacent(ts[i], ts[j]));
        // adjacency is exactly interval intersection
        for (int u = 0; u < G.n(); ++u)
            for (int v = u + 1; v < G.n(); ++v)
                CHECK(G.adjacent(u, v) == G.ivs[u].intersects(G.ivs[v]));
        // consecutive long intervals overlap (the chain is connected)
        auto d = bfs_all(G.g, ts.front());
        for (int t : ts) CHECK(d[t] != kUnreachable);
    }
}

TEST_CASE("gen_hard rejects k < 2") { CHECK_THROWS(gen_hard(1)); }

TEST_CASE("manhattan structure at k=4") {
    Manhattan mh = gen_manhattan(4);
    CHECK(mh.gamma == 2);
    CHECK(mh.d.nverts == 4 * 6);
    CHECK(mh.d.arcs.size() == 20 + 72);  // horizontal + both vertical arcs
    CHECK(mh.d.terminals.size() == 12);
    CHECK(std::is_sorted(mh.d.arcs.begin(), mh.d.arcs.end()));
    // terminal placement
    for (int i = 0; i < 4; ++i) {
        CHECK(mh.cell(mh.t_left[i]) == std::pair<int, int>{i, -1});
        CHECK(mh.cell(mh.t_right[i]) == std::pair<int, int>{i, 4});
        int r = static_cast<int>(rev(2, BitString(2, i)).value);
        CHECK(mh.cell(mh.t_mid[i]) == std::pair<int, int>{r, i});
    }
    // arc shape: horizontal w1 to next column, vertical pairs both ways
    for (const auto &a : mh.d.arcs) {
        auto [i1, j1] = mh.cell(a.from);
        auto [i2, j2] = mh.cell(a.to);
        if (i1 == i2) {
            CHECK(j2 == j1 + 1);
            CHECK(a.w == 1);
        } else {
            CHECK(j1 == j2);
            CHECK(a.w == (i2 < i1 ? 1 : 0));
        }
    }
}

TEST_CASE("manhattan distances") {
    for (int k : {2, 4, 8}) {
        Manhattan mh = gen_manhattan(k);
        int gamma = mh.gamma;
        for (int i = 0; i < k; ++i)
            CHECK(weighted_distance(mh.d, mh.t_left[i], mh.t_right[i]) == k + 1);
        for (auto &[x, y] : hypercube_edges(gamma)) {
            int i = static_cast<int>(x.value), j = static_cast<int>(y.value);
            CHECK(weighted_distance(mh.d, mh.t_mid[i], mh.t_mid[j]) == j - i);
        }
    }
}

TEST_CASE("manhattan rejects non powers of two") {
    CHECK_THROWS(gen_manhattan(3));
    CHECK_THROWS(gen_manhattan(0));
}

TEST_CASE("gint matches the displayed interval family") {
    for (int k : {2, 4}) {
        Gint gi = gen_gint(k);
        CHECK(gi.inst.n() == k * (k + 2));
        CHECK(gi.inst.k() == 3 * k);
        // a_{0,0} = [(k-1)/k, 1+(k-1)/k]
        Interval a00 = gi.inst.ivs[gi.canon_of_cell[gi.vid(0, 0)]];
        CHECK(a00.left == Rat(k - 1) / k);
        CHECK(a00.right == Rat(k - 1) / k + 1);
        for (int u = 0; u < gi.inst.n(); ++u) {
            auto [iu, ju] = gi.cell_of[u];
            CHECK(gi.canon_of_cell[gi.vid(iu, ju)] == u);
            CHECK(gi.inst.ivs[u].is_unit());
            for (int v = u + 1; v < gi.inst.n(); ++v) {
                auto [iv, jv] = gi.cell_of[v];
                bool hor = iu == iv && std::abs(ju - jv) == 1;
                bool up = ju == jv && iu != iv;
                int dj = jv - ju;
                bool slant = (dj == 1 && iu < iv) || (dj == -1 && iv < iu);
                CHECK(gi.inst.adjacent(u, v) == (hor || up || slant));
            }
        }
        // mid terminals sit at (rev(i), i)
        for (int i = 0; i < k; ++i) {
            auto [r, c] = gi.cell_of[gi.t_mid[i]];
            CHECK(c == i);
            CHECK(r == static_cast<int>(rev(gi.gamma, BitString(gi.gamma, i)).value));
            CHECK(gi.inst.g.is_terminal[gi.t_mid[i]]);
        }
    }
}

TEST_CASE("gzero structure") {
    for (int k = 2; k <= 6; ++k) {
        Gzero gz = gen_gzero(k);
        CHECK(gz.inst.n() == 3 * k + 2);
        CHECK(gz.inst.k() == 2 * k + 1);
        for (int x = -k; x <= k; ++x) {
            const Interval &iv = gz.inst.ivs[gz.terminal_at[x + k]];
            CHECK(iv.is_point());
            CHECK(iv.left == Rat(x));
        }
        // distance 2 exactly when one long interval spans both points
        for (int x = -k; x <= k; ++x)
            for (int y = x + 1; y <= k; ++y) {
                int d = bfs_distance(gz.inst.g, gz.terminal_at[x + k],
                                     gz.terminal_at[y + k]);
                if (y - x <= k)
                    CHECK(d == 2);
                else
                    CHECK(d > 2);
            }
    }
}

TEST_CASE("gset structure") {
    SetCoverInstance sc{3, {{1, 2}, {2, 3}, {3}}};
    Gset gs = gen_gset(sc);
    int n = 3, m = 3;
    CHECK(gs.g.n() == n * (m + 1) + m + 2);
    CHECK(gs.n == n);
    CHECK(gs.m == m);
    CHECK(gs.g.k() == n * (m + 1) + 2);
    CHECK(gs.g.is_terminal[gs.t0]);
    CHECK(gs.g.is_terminal[gs.t1]);
    for (int j = 0; j < m; ++j) CHECK_FALSE(gs.g.is_terminal[gs.s_vertex(j)]);
    for (int u = 1; u <= n; ++u)
        for (int i = 0; i <= m; ++i) {
            int uv = gs.u_vertex(u, i);
            CHECK(gs.g.is_terminal[uv]);
            CHECK(gs.g.adjacent(gs.t0, uv));
            CHECK_FALSE(gs.g.adjacent(gs.t1, uv));
            for (int j = 0; j < m; ++j) {
                bool member = std::find(sc.sets[j].begin(), sc.sets[j].end(), u) !=
                              sc.sets[j].end();
                CHECK(gs.g.adjacent(uv, gs.s_vertex(j)) == member);
            }
        }
    for (int j = 0; j < m; ++j) CHECK(gs.g.adjacent(gs.s_vertex(j), gs.t1));
    CHECK_FALSE(gs.g.adjacent(gs.t0, gs.t1));
    long long expect_edges = static_cast<long long>(n) * (m + 1) + m;
    for (const auto &s : sc.sets) expect_edges += static_cast<long long>(s.size()) * (m + 1);
    CHECK(gs.g.edge_count() == expect_edges);
}

TEST_CASE("gen_random determinism and flavors") {
    Instance a = gen_random(30, 5, 42, Flavor::unit_point);
    Instance b = gen_random(30, 5, 42, Flavor::unit_point);
    CHECK(a.ivs == b.ivs);
    CHECK(a.g.terminals == b.g.terminals);
    Instance c = gen_random(30, 5, 43, Flavor::unit_point);
    CHECK(a.ivs != c.ivs);

    for (uint64_t seed = 0; seed < 30; ++seed) {
        Instance up = gen_random(20 + seed, 4, seed, Flavor::unit_point);
        for (int v = 0; v < up.n(); ++v) {
            if (up.g.is_terminal[v])
                CHECK(up.ivs[v].is_point());
            else
                CHECK(up.ivs[v].is_unit());
        }
        // terminals mutually reachable
        auto d = bfs_all(up.g, up.terminals().front());
        for (int t : up.terminals()) CHECK(d[t] != kUnreachable);
        Instance gen = gen_random(20 + seed, 4, seed, Flavor::general);
        auto dg = bfs_all(gen.g, gen.terminals().front());
        for (int t : gen.terminals()) CHECK(dg[t] != kUnreachable);
    }
}

TEST_CASE("gen_random edge cases") {
    Instance all_t = gen_random(4, 4, 7, Flavor::unit_point);
    CHECK(all_t.n() == 4);
    CHECK(all_t.k() == 4);
    CHECK_THROWS(gen_random(3, 5, 0, Flavor::general));
    CHECK_THROWS(gen_random(0, 0, 0, Flavor::general));
}

TEST_CASE("slant_transform classifies edges") {
    Gint gi = gen_gint(2);
    Manhattan mh = gen_manhattan(2);
    auto add_horizontals = [&](Subgraph &h) {
        for (int i = 0; i < 2; ++i)
            for (int j = -1; j < 2; ++j)
                h.add_edge(gi.canon_of_cell[gi.vid(i, j)],
                           gi.canon_of_cell[gi.vid(i, j + 1)]);
    };

    SUBCASE("horizontals only") {
        Subgraph h(gi.inst.g);
        add_horizontals(h);
        auto arcs = slant_transform(gi, h, mh);
        CHECK(arcs.size() == 6);
        for (const auto &a : arcs) CHECK(a.w == 1);
        CHECK(std::is_sorted(arcs.begin(), arcs.end()));
    }
    SUBCASE("one slant becomes a 0-weight down arc") {
        Subgraph h(gi.inst.g);
        add_horizontals(h);
        h.add_edge(gi.canon_of_cell[gi.vid(0, 0)], gi.canon_of_cell[gi.vid(1, 1)]);
        auto arcs = slant_transform(gi, h, mh);
        WeightedDigraph::Arc want{mh.vid(0, 0), mh.vid(1, 0), 0};
        CHECK(std::count(arcs.begin(), arcs.end(), want) == 1);
        CHECK(arcs.size() == 7);
    }
    SUBCASE("one vertical becomes an up arc") {
        Subgraph h(gi.inst.g);
        add_horizontals(h);
        h.add_edge(gi.canon_of_cell[gi.vid(1, 0)], gi.canon_of_cell[gi.vid(0, 0)]);
        auto arcs = slant_transform(gi, h, mh);
        WeightedDigraph::Arc want{mh.vid(1, 0), mh.vid(0, 0), 1};
        CHECK(std::count(arcs.begin(), arcs.end(), want) == 1);
    }
    SUBCASE("missing horizontal edge rejected") {
        Subgraph h(gi.inst.g);
        CHECK_THROWS_AS(slant_transform(gi, h, mh), std::invalid_argument);
    }
}
