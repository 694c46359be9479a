#include "ivds/instances.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace ivds {

namespace {

int log2_exact(int k) {
    int gamma = 0;
    while ((1 << gamma) < k) ++gamma;
    if ((1 << gamma) != k || k < 2)
        throw std::invalid_argument("k must be a power of two >= 2");
    return gamma;
}

}  // namespace

Manhattan gen_manhattan(int k) {
    Manhattan m;
    m.k = k;
    m.gamma = log2_exact(k);
    m.d.nverts = k * (k + 2);
    m.d.is_terminal.assign(m.d.nverts, 0);

    for (int i = 0; i < k; ++i) {
        for (int j = -1; j < k; ++j)
            m.d.arcs.push_back({m.vid(i, j), m.vid(i, j + 1), 1});
    }
    for (int j = -1; j <= k; ++j)
        for (int i1 = 0; i1 < k; ++i1)
            for (int i2 = 0; i2 < k; ++i2) {
                if (i2 < i1) m.d.arcs.push_back({m.vid(i1, j), m.vid(i2, j), 1});
                if (i1 < i2) m.d.arcs.push_back({m.vid(i1, j), m.vid(i2, j), 0});
            }

    for (int i = 0; i < k; ++i) {
        m.t_left.push_back(m.vid(i, -1));
        m.t_right.push_back(m.vid(i, k));
        int row = static_cast<int>(rev(m.gamma, BitString(m.gamma, i)).value);
        m.t_mid.push_back(m.vid(row, i));
    }
    for (int v : m.t_left) m.d.is_terminal[v] = 1;
    for (int v : m.t_mid) m.d.is_terminal[v] = 1;
    for (int v : m.t_right) m.d.is_terminal[v] = 1;
    for (int v = 0; v < m.d.nverts; ++v)
        if (m.d.is_terminal[v]) m.d.terminals.push_back(v);
    std::sort(m.d.arcs.begin(), m.d.arcs.end());
    return m;
}

Gint gen_gint(int k) {
    Gint gi;
    gi.k = k;
    gi.gamma = log2_exact(k);
    const int n = k * (k + 2);

    std::vector<Interval> ivs(n);
    std::vector<char> flags(n, 0);
    for (int i = 0; i < k; ++i)
        for (int j = -1; j <= k; ++j) {
            Rat left = Rat(j) + Rat(k - 1 - i, k);
            ivs[gi.vid(i, j)] = Interval(left, left + 1);
        }
    for (int i = 0; i < k; ++i) {
        flags[gi.vid(i, -1)] = 1;
        flags[gi.vid(i, k)] = 1;
        int row = static_cast<int>(rev(gi.gamma, BitString(gi.gamma, i)).value);
        flags[gi.vid(row, i)] = 1;
    }

    auto built = build_instance(ivs, flags);
    gi.inst = std::move(built.inst);
    gi.canon_of_cell = built.to_canonical;
    gi.cell_of.resize(n);
    for (int i = 0; i < k; ++i)
        for (int j = -1; j <= k; ++j)
            gi.cell_of[gi.canon_of_cell[gi.vid(i, j)]] = {i, j};
    for (int i = 0; i < k; ++i) {
        int row = static_cast<int>(rev(gi.gamma, BitString(gi.gamma, i)).value);
        gi.t_mid.push_back(gi.canon_of_cell[gi.vid(row, i)]);
    }
    return gi;
}

Instance gen_hard(int k) {
    if (k < 2) throw std::invalid_argument("gen_hard: k < 2");
    const Rat eps(1, 100);
    std::vector<Interval> ivs;
    std::vector<char> flags;
    for (int i = 1; i <= 2 * k - 2; ++i) {
        ivs.emplace_back(Rat(i) - eps, Rat(i + 1) + eps);
        flags.push_back(0);
    }
    for (int j = 1; j <= k; ++j) {
        ivs.emplace_back(Rat(2 * j) - Rat(3, 2), Rat(2 * j) - Rat(1, 2));
        flags.push_back(1);
    }
    return build_instance(ivs, flags).inst;
}

Gzero gen_gzero(int k) {
    if (k < 1) throw std::invalid_argument("gen_gzero: k < 1");
    Gzero gz;
    gz.k = k;
    std::vector<Interval> ivs;
    std::vector<char> flags;
    for (int x = -k; x <= 0; ++x) {
        ivs.emplace_back(Rat(x), Rat(x + k));
        flags.push_back(0);
    }
    std::vector<int> term_input;  // input index of terminal at coordinate x
    for (int x = -k; x <= k; ++x) {
        term_input.push_back(static_cast<int>(ivs.size()));
        ivs.emplace_back(Rat(x), Rat(x));
        flags.push_back(1);
    }
    auto built = build_instance(ivs, flags);
    gz.inst = std::move(built.inst);
    for (int idx : term_input) gz.terminal_at.push_back(built.to_canonical[idx]);
    return gz;
}

Gset gen_gset(const SetCoverInstance &sc) {
    for (const auto &s : sc.sets)
        for (int u : s)
            if (u < 1 || u > sc.n)
                throw std::invalid_argument("gen_gset: element outside universe");
    Gset gs;
    gs.n = sc.n;
    gs.m = static_cast<int>(sc.sets.size());
    const int nv = gs.n * (gs.m + 1) + gs.m + 2;
    gs.t0 = gs.n * (gs.m + 1) + gs.m;
    gs.t1 = gs.t0 + 1;
    gs.g.adj.assign(nv, {});
    gs.g.is_terminal.assign(nv, 0);

    auto link = [&](int a, int b) {
        gs.g.adj[a].push_back(b);
        gs.g.adj[b].push_back(a);
    };
    for (int i = 0; i <= gs.m; ++i)
        for (int u = 1; u <= gs.n; ++u) {
            int uv = gs.u_vertex(u, i);
            gs.g.is_terminal[uv] = 1;
            link(gs.t0, uv);
            for (int j = 0; j < gs.m; ++j)
                if (std::find(sc.sets[j].begin(), sc.sets[j].end(), u) !=
                    sc.sets[j].end())
                    link(uv, gs.s_vertex(j));
        }
    for (int j = 0; j < gs.m; ++j) link(gs.s_vertex(j), gs.t1);
    gs.g.is_terminal[gs.t0] = 1;
    gs.g.is_terminal[gs.t1] = 1;
    gs.g.finalize();
    return gs;
}

namespace {

bool terminals_connected(const Instance &inst) {
    const auto &ts = inst.terminals();
    if (ts.size() <= 1) return true;
    auto dist = bfs_all(inst.g, ts[0]);
    for (int t : ts)
        if (dist[t] == kUnreachable) return false;
    return true;
}

Instance random_unit_point(int n, int k, std::mt19937_64 &rng) {
    // span chosen so a bridging chain always fits in the non-terminal budget
    const int m = n - k;
    const int span100 = std::max(100, m * 100 / 3);
    std::uniform_int_distribution<int> coord(0, span100);

    for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<Interval> ivs;
        std::vector<char> flags;
        std::vector<Rat> tcoords;
        if (m == 0) {
            // no non-terminals available: a common point keeps terminals connected
            Rat c = Rat(coord(rng), 100);
            for (int i = 0; i < k; ++i) tcoords.push_back(c);
        } else {
            for (int i = 0; i < k; ++i) tcoords.push_back(Rat(coord(rng), 100));
        }
        for (const Rat &c : tcoords) {
            ivs.emplace_back(c, c);
            flags.push_back(1);
        }
        for (int i = 0; i < m; ++i) {
            Rat l = Rat(coord(rng) - 100, 100);
            ivs.emplace_back(l, l + 1);
            flags.push_back(0);
        }
        if (attempt == 59 && m > 0) {
            // bridge: overwrite trailing non-terminals with a covering chain
            Rat lo = *std::min_element(tcoords.begin(), tcoords.end());
            Rat hi = *std::max_element(tcoords.begin(), tcoords.end());
            int idx = k + m - 1;
            for (Rat pos = lo; pos <= hi && idx >= k; pos += Rat(1, 2), --idx)
                ivs[idx] = Interval(pos - Rat(1, 2), pos + Rat(1, 2));
        }
        Instance inst = build_instance(ivs, flags).inst;
        if (terminals_connected(inst)) return inst;
    }
    throw std::logic_error("random_unit_point: bridging failed");
}

Instance random_general(int n, int k, std::mt19937_64 &rng) {
    const int span100 = std::max(100, n * 50);
    std::uniform_int_distribution<int> coord(0, span100);
    std::uniform_int_distribution<int> len(0, 300);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;

    for (int attempt = 0; attempt < 60; ++attempt) {
        std::vector<Interval> ivs;
        std::vector<char> flags(n, 0);
        for (int i = 0; i < n; ++i) {
            Rat l = Rat(coord(rng), 100);
            ivs.emplace_back(l, l + Rat(len(rng), 100));
        }
        std::shuffle(ids.begin(), ids.end(), rng);
        for (int i = 0; i < k; ++i) flags[ids[i]] = 1;
        if (attempt == 59) {
            // hull interval bridges everything (replace a non-terminal if any)
            Rat lo = ivs[0].left, hi = ivs[0].right;
            for (const auto &iv : ivs) {
                lo = std::min(lo, iv.left);
                hi = std::max(hi, iv.right);
            }
            int target = (k < n) ? ids[n - 1] : ids[0];
            ivs[target] = Interval(lo, hi);
        }
        Instance inst = build_instance(ivs, flags).inst;
        if (terminals_connected(inst)) return inst;
    }
    throw std::logic_error("random_general: bridging failed");
}

}  // namespace

Instance gen_random(int n, int k, uint64_t seed, Flavor flavor) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("gen_random: need 1 <= k <= n");
    std::mt19937_64 rng(seed);
    return flavor == Flavor::unit_point ? random_unit_point(n, k, rng)
                                        : random_general(n, k, rng);
}

std::vector<WeightedDigraph::Arc> slant_transform(const Gint &gi,
                                                  const Subgraph &h_int,
                                                  const Manhattan &mh) {
    if (mh.k != gi.k) throw std::invalid_argument("slant_transform: k mismatch");
    const int k = gi.k;
    for (int i = 0; i < k; ++i)
        for (int j = -1; j < k; ++j)
            if (!h_int.has_edge(gi.canon_of_cell[gi.vid(i, j)],
                                gi.canon_of_cell[gi.vid(i, j + 1)]))
                throw std::invalid_argument(
                    "slant_transform: missing horizontal edge");

    std::set<WeightedDigraph::Arc> out;
    for (auto [a, b] : h_int.edges) {
        auto [ia, ja] = gi.cell_of[a];
        auto [ib, jb] = gi.cell_of[b];
        if (ja > jb || (ja == jb && ia < ib)) {
            std::swap(ia, ib);
            std::swap(ja, jb);
        }
        // now (ia,ja) is the earlier interval (larger row index in-column,
        // or smaller column)
        if (ja == jb) {
            out.insert({mh.vid(ia, ja), mh.vid(ib, jb), 1});  // upward
        } else if (ia == ib) {
            out.insert({mh.vid(ia, ja), mh.vid(ib, jb), 1});  // horizontal
        } else {
            // slant (a_{i,j}, a_{i',j+1}), i < i': becomes 0-weight down edge
            out.insert({mh.vid(ia, ja), mh.vid(ib, ja), 0});
        }
    }
    return std::vector<WeightedDigraph::Arc>(out.begin(), out.end());
}

}  // namespace ivds
