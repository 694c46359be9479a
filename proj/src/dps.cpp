#include "ivds/dps.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ivds {

bool is_unit_point(const Instance &G) {
    for (int v = 0; v < G.n(); ++v) {
        if (G.g.is_terminal[v] ? !G.ivs[v].is_point() : !G.ivs[v].is_unit())
            return false;
    }
    return true;
}

H0Result build_h0(const Instance &G) {
    H0Result r;
    r.h = Subgraph(G.g);
    const auto &ts = G.terminals();
    const int k = G.k();
    r.paths.resize(k);
    if (k == 0) return r;
    const int tlast = ts[k - 1];
    r.h.add_vertex(tlast);
    r.paths[k - 1].verts = {tlast};
    for (int i = 0; i < k - 1; ++i) {
        auto p = greedy_path(G, ts[i], tlast);
        if (!p) throw std::runtime_error("build_h0: disconnected terminal pair");
        r.h.add_path(*p);
        r.paths[i] = std::move(*p);
    }
    return r;
}

void augment_near_pairs(const Instance &G, Subgraph &h) {
    const auto &ts = G.terminals();
    for (size_t i = 0; i < ts.size(); ++i) {
        auto dist = bfs_all(G.g, ts[i]);
        for (size_t j = i + 1; j < ts.size(); ++j) {
            int d = dist[ts[j]];
            if (d == kUnreachable || d > 4) continue;
            auto p = greedy_path(G, ts[i], ts[j]);
            if (p) h.add_path(*p);
        }
    }
}

namespace {

bool in_window(const Rat &c, const Rat &a, const Rat &b, bool right_open) {
    return a <= c && (right_open ? c < b : c <= b);
}

std::vector<int> window_terminals(const Instance &G, const Rat &a, const Rat &b,
                                  bool right_open) {
    std::vector<int> out;
    for (int t : G.terminals())
        if (in_window(G.ivs[t].left, a, b, right_open)) out.push_back(t);
    return out;
}

}  // namespace

Rat choose_cut(const Instance &G, const Rat &a, const Rat &b, bool right_open) {
    auto terms = window_terminals(G, a, b, right_open);
    const int T = static_cast<int>(terms.size());
    if (T < 2 || b - a <= 1)
        throw std::invalid_argument("choose_cut: window too small");
    const int ell = (T + 1) / 2;

    std::vector<Rat> cands{b - 1};
    for (int t : terms) cands.push_back(G.ivs[t].left);
    std::optional<Rat> best;
    for (const Rat &x : cands) {
        if (x < a || b - x < 1) continue;
        int right = 0;
        for (int t : terms)
            if (G.ivs[t].left >= x) ++right;
        if (right < ell) continue;
        if (!best || x > *best) best = x;
    }
    if (!best) throw std::logic_error("choose_cut: no feasible cut");
    return *best;
}

Subgraph build_dps_recursive(const Instance &G, const H0Result &h0,
                             const Rat &a, const Rat &b, DpsStats *stats,
                             int depth, bool right_open) {
    Subgraph res(G.g);
    auto terms = window_terminals(G, a, b, right_open);
    const int T = static_cast<int>(terms.size());
    if (T <= 1 || b - a <= 1) return res;

    auto coord = [&](int t) { return G.ivs[t].left; };
    bool all_same = true;
    for (int t : terms)
        if (coord(t) != coord(terms[0])) all_same = false;
    if (all_same) return res;  // pairwise distance 1: the augmentation covers it

    Rat x = choose_cut(G, a, b, right_open);
    if (x == a) {
        // no terminal falls left of the cut; force progress past the block at a
        std::optional<Rat> nxt;
        for (int t : terms)
            if (coord(t) > a && (!nxt || coord(t) < *nxt)) nxt = coord(t);
        x = std::min(b - 1, *nxt);
    }

    res.merge(build_dps_recursive(G, h0, a, x, stats, depth + 1, true));
    if (b - x > 1)
        res.merge(build_dps_recursive(G, h0, x, b, stats, depth + 1, right_open));

    // P_left: the H_0 greedy paths of the left-window terminals
    const auto &ts = G.terminals();
    std::vector<const Path *> p_left;
    for (size_t i = 0; i < ts.size(); ++i)
        if (in_window(coord(ts[i]), a, x, true))
            p_left.push_back(&h0.paths[i]);

    // H_A: induced on the P_left non-terminals meeting [x,x+1] plus the
    // terminals there
    const Interval band(x, x + 1);
    std::set<int> va;
    for (const Path *p : p_left)
        for (int v : p->verts)
            if (!G.g.is_terminal[v] && G.ivs[v].intersects(band)) va.insert(v);
    std::vector<int> ha(va.begin(), va.end());
    for (int t : terms)
        if (coord(t) >= x && coord(t) <= x + 1) ha.push_back(t);
    for (size_t i = 0; i < ha.size(); ++i) {
        res.add_vertex(ha[i]);
        for (size_t j = i + 1; j < ha.size(); ++j)
            if (G.adjacent(ha[i], ha[j])) res.add_edge(ha[i], ha[j]);
    }

    // H_B: one hop from the earliest P_left interval covering each far terminal
    int hb = 0;
    for (int tj : terms) {
        if (coord(tj) < x + 1) continue;
        int best = -1;
        for (const Path *p : p_left)
            for (int v : p->verts)
                if (v != tj && G.ivs[v].contains(coord(tj)) &&
                    (best == -1 || v < best))
                    best = v;
        if (best != -1) {
            res.add_edge(best, tj);
            ++hb;
        }
    }

    if (stats) {
        stats->levels.push_back({depth, T, static_cast<int>(va.size()), hb});
        stats->star_nonterminals += static_cast<int>(va.size()) + hb;
    }
    return res;
}

DpsResult build_dps_unit_point(const Instance &G) {
    if (!is_unit_point(G))
        throw std::invalid_argument("build_dps_unit_point: not unit/point form");
    DpsResult r;
    H0Result h0 = build_h0(G);
    r.h = h0.h;
    r.stats.h0_branching = branching_vertices(r.h).first;
    if (G.k() == 0) return r;
    if (G.k() == 1) {
        r.h.add_vertex(G.terminals()[0]);
        return r;
    }

    size_t before = r.h.edges.size();
    augment_near_pairs(G, r.h);
    r.stats.augment_edges = static_cast<int>(r.h.edges.size() - before);

    Rat a = G.ivs[G.terminals().front()].left;
    Rat b = a;
    for (int t : G.terminals()) {
        a = std::min(a, G.ivs[t].left);
        b = std::max(b, G.ivs[t].left);
    }
    r.h.merge(build_dps_recursive(G, h0, a, b, &r.stats));
    return r;
}

namespace {

struct PrimeVert {
    Interval orig;  // original-coordinate interval in G'
    char terminal;
    int host;
    NormalizationMap::Role role;
};

}  // namespace

Normalized normalize(const Instance &G) {
    using Role = NormalizationMap::Role;
    std::vector<PrimeVert> pv;
    for (int v = 0; v < G.n(); ++v) {
        const Interval &iv = G.ivs[v];
        if (G.g.is_terminal[v]) {
            pv.push_back({Interval(iv.left, iv.left), 1, v, Role::t_left});
            pv.push_back({Interval(iv.right, iv.right), 1, v, Role::t_right});
        }
        pv.push_back({iv, 0, v, Role::nonterminal});  // terminals are demoted
    }

    // delete dominated non-terminals (witnesses taken pre-deletion; safe by
    // transitivity of strict containment)
    const int np = static_cast<int>(pv.size());
    std::vector<char> keep(np, 1);
    std::vector<int> deleted;
    for (int i = 0; i < np; ++i) {
        if (pv[i].terminal) continue;
        for (int j = 0; j < np; ++j)
            if (j != i && pv[j].orig.strictly_contains(pv[i].orig)) {
                keep[i] = 0;
                deleted.push_back(pv[i].host);
                break;
            }
    }

    std::vector<int> nts;  // indices into pv, surviving non-terminals
    for (int i = 0; i < np; ++i)
        if (keep[i] && !pv[i].terminal) nts.push_back(i);
    std::sort(nts.begin(), nts.end(), [&](int i, int j) {
        if (pv[i].orig.left != pv[j].orig.left)
            return pv[i].orig.left < pv[j].orig.left;
        return pv[i].orig.right < pv[j].orig.right;
    });
    const int m = static_cast<int>(nts.size());
    for (int i = 1; i < m; ++i)
        if (pv[nts[i]].orig.right < pv[nts[i - 1]].orig.right)
            throw std::logic_error("normalize: representation is not proper");

    // left-to-right sweep assigning unit-interval left endpoints; strictly
    // interior (midpoint) choices keep every inequality strict
    std::vector<Rat> nl(m);
    for (int i = 1; i < m; ++i) {
        if (pv[nts[i]].orig == pv[nts[i - 1]].orig) {
            nl[i] = nl[i - 1];
            continue;
        }
        int s = i;
        while (s - 1 >= 0 && pv[nts[s - 1]].orig.intersects(pv[nts[i]].orig))
            --s;
        if (s == i) {
            nl[i] = nl[i - 1] + 2;
        } else {
            Rat lo = nl[i - 1];
            if (s > 0) lo = std::max(lo, nl[s - 1] + 1);
            Rat hi = nl[s] + 1;
            if (!(lo < hi)) throw std::logic_error("normalize: sweep infeasible");
            nl[i] = (lo + hi) / 2;
        }
    }

    // place point terminals group by group in coordinate order
    std::map<Rat, std::vector<int>> groups;  // original coordinate -> pv ids
    for (int i = 0; i < np; ++i)
        if (pv[i].terminal) groups[pv[i].orig.left].push_back(i);
    std::map<Rat, Rat> group_pos;
    std::optional<Rat> prev;
    for (auto &[c, members] : groups) {
        int s = m, e = -1;
        for (int j = 0; j < m; ++j)
            if (pv[nts[j]].orig.contains(c)) {
                s = std::min(s, j);
                e = std::max(e, j);
            }
        std::optional<Rat> lo, hi;
        if (e >= 0) {  // neighbors form the block [s,e]
            lo = nl[e];
            if (s > 0) lo = std::max(*lo, nl[s - 1] + 1);
            hi = nl[s] + 1;
            if (e + 1 < m) hi = std::min(*hi, nl[e + 1]);
        } else {  // between the last interval ending before c and the next
            int jstar = -1;
            for (int j = 0; j < m; ++j)
                if (pv[nts[j]].orig.right < c) jstar = j;
            if (jstar >= 0) lo = nl[jstar] + 1;
            if (jstar + 1 < m) hi = nl[jstar + 1];
        }
        if (prev) lo = lo ? std::max(*lo, *prev) : *prev;
        Rat pos;
        if (lo && hi) {
            if (!(*lo < *hi))
                throw std::logic_error("normalize: terminal placement infeasible");
            pos = (*lo + *hi) / 2;
        } else if (lo) {
            pos = *lo + 1;
        } else if (hi) {
            pos = *hi - 1;
        } else {
            pos = 0;
        }
        group_pos[c] = pos;
        prev = pos;
    }

    // assemble G' in input order: non-terminals (sorted), then terminals
    std::vector<Interval> ivs2;
    std::vector<char> flags2;
    std::vector<int> pvid;  // G' input index -> pv index
    for (int j = 0; j < m; ++j) {
        ivs2.emplace_back(nl[j], nl[j] + 1);
        flags2.push_back(0);
        pvid.push_back(nts[j]);
    }
    for (int i = 0; i < np; ++i)
        if (pv[i].terminal) {
            Rat pos = group_pos.at(pv[i].orig.left);
            ivs2.emplace_back(pos, pos);
            flags2.push_back(1);
            pvid.push_back(i);
        }

    auto built = build_instance(ivs2, flags2);
    const int n2 = built.inst.n();
    // postcondition: re-representation reproduces the original adjacency
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
            bool want = pv[pvid[i]].orig.intersects(pv[pvid[j]].orig);
            bool got = built.inst.adjacent(built.to_canonical[i],
                                          built.to_canonical[j]);
            if (want != got)
                throw std::logic_error("normalize: adjacency not preserved");
        }

    Normalized out;
    out.inst = std::move(built.inst);
    out.map.origin.resize(n2);
    out.map.rerep.resize(n2);
    for (int i = 0; i < n2; ++i) {
        int c = built.to_canonical[i];
        out.map.origin[c] = {pv[pvid[i]].host, pv[pvid[i]].role};
        out.map.rerep[c] = out.inst.ivs[c];
    }
    out.map.deleted = std::move(deleted);
    return out;
}

Subgraph lift(const Subgraph &h_prime, const Normalized &norm,
              const Instance &G) {
    Subgraph h(G.g);
    const auto &org = norm.map.origin;
    for (int v = 0; v < static_cast<int>(h_prime.vert.size()); ++v)
        if (h_prime.vert[v]) h.add_vertex(org[v].host);
    for (auto [u, v] : h_prime.edges) {
        int hu = org[u].host, hv = org[v].host;
        if (hu != hv) h.add_edge(hu, hv);
    }
    const auto &ts = G.terminals();
    for (int t : ts) h.add_vertex(t);
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (G.adjacent(ts[i], ts[j])) h.add_edge(ts[i], ts[j]);
    return h;
}

DpsResult build_dps(const Instance &G) {
    if (is_unit_point(G)) return build_dps_unit_point(G);
    Normalized nz = normalize(G);
    DpsResult inner = build_dps_unit_point(nz.inst);
    DpsResult out;
    out.h = lift(inner.h, nz, G);
    out.stats = std::move(inner.stats);
    return out;
}

}  // namespace ivds
