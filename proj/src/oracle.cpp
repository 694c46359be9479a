#include "ivds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace ivds {

std::vector<std::pair<int, int>> candidate_edges(const Graph &g, int slack) {
    const auto &ts = g.terminals;
    std::vector<std::vector<int>> td;
    td.reserve(ts.size());
    for (int t : ts) td.push_back(bfs_all(g, t));

    std::set<std::pair<int, int>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u]) {
            if (v <= u) continue;
            bool keep = false;
            for (size_t i = 0; i < ts.size() && !keep; ++i)
                for (size_t j = i + 1; j < ts.size() && !keep; ++j) {
                    int d = td[i][ts[j]];
                    if (d == kUnreachable) continue;
                    int du = td[i][u], dv = td[j][v];
                    if (du != kUnreachable && dv != kUnreachable &&
                        du + 1 + dv <= d + slack)
                        keep = true;
                    du = td[i][v], dv = td[j][u];
                    if (du != kUnreachable && dv != kUnreachable &&
                        du + 1 + dv <= d + slack)
                        keep = true;
                }
            if (keep) out.insert({u, v});
        }
    return {out.begin(), out.end()};
}

namespace {

int branching_count(const Graph &g, const std::vector<int> &deg,
                    bool count_terminals) {
    int c = 0;
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] >= 3 && (count_terminals || !g.is_terminal[v])) ++c;
    return c;
}

Subgraph make_witness(const Graph &g,
                      const std::vector<std::pair<int, int>> &edges) {
    Subgraph h(g);
    for (int t : g.terminals) h.add_vertex(t);
    for (auto [u, v] : edges) h.add_edge(u, v);
    return h;
}

/// Branch-and-bound over unions of admissible terminal-pair paths.  Every
/// feasible edge set contains, per pair, one path of length <= d + slack,
/// and the branching count is monotone in the edge set, so the optimum is
/// attained at such a union.
struct PathSearch {
    const Graph &g;
    int slack;
    bool count_terminals;
    SearchBudget budget;

    std::vector<std::pair<int, int>> cand;
    std::map<std::pair<int, int>, int> cid;
    std::vector<std::vector<int>> cadj;           // candidate adjacency
    std::vector<std::pair<int, int>> pairs;       // terminal index pairs
    std::vector<int> target;                      // d + slack per pair
    std::vector<std::vector<int>> td;             // per-terminal distances
    std::vector<char> in_set;
    std::vector<int> deg;
    long long states = 0;
    int best = -1;
    std::vector<std::pair<int, int>> best_edges;

    PathSearch(const Graph &g_, int slack_, bool ct, const SearchBudget &b)
        : g(g_), slack(slack_), count_terminals(ct), budget(b) {
        cand = candidate_edges(g, slack);
        if (static_cast<int>(cand.size()) > budget.max_candidate_edges)
            throw BudgetExceeded("candidate edge count exceeds budget");
        cadj.assign(g.n(), {});
        for (int e = 0; e < static_cast<int>(cand.size()); ++e) {
            auto [u, v] = cand[e];
            cid[{u, v}] = e;
            cadj[u].push_back(v);
            cadj[v].push_back(u);
        }
        const auto &ts = g.terminals;
        for (int t : ts) td.push_back(bfs_all(g, t));
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j) {
                int d = td[i][ts[j]];
                if (d == kUnreachable) continue;  // nothing to preserve
                pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
                target.push_back(d + slack);
            }
        in_set.assign(cand.size(), 0);
        deg.assign(g.n(), 0);
    }

    std::vector<int> sub_dist(int src) const {
        std::vector<int> dist(g.n(), kUnreachable);
        dist[src] = 0;
        std::deque<int> q{src};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : cadj[u]) {
                int a = std::min(u, v), b = std::max(u, v);
                if (!in_set[cid.at({a, b})]) continue;
                if (dist[v] != kUnreachable) continue;
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
        }
        return dist;
    }

    int unsatisfied() const {
        for (size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            auto dist = sub_dist(g.terminals[i]);
            int d = dist[g.terminals[j]];
            if (d == kUnreachable || d > target[p]) return static_cast<int>(p);
        }
        return -1;
    }

    // all simple paths s -> t of length <= r over candidate edges
    void enum_paths(int u, int t, int r, std::vector<int> &path,
                    std::vector<char> &used,
                    std::vector<std::vector<int>> &out) {
        if (u == t) {
            out.push_back(path);
            return;
        }
        if (r == 0) return;
        for (int v : cadj[u]) {
            if (used[v]) continue;
            used[v] = 1;
            path.push_back(v);
            enum_paths(v, t, r - 1, path, used, out);
            path.pop_back();
            used[v] = 0;
        }
    }

    void dfs() {
        if (++states > budget.max_states)
            throw BudgetExceeded("state budget exceeded");
        int lower = branching_count(g, deg, count_terminals);
        if (best != -1 && lower >= best) return;
        int p = unsatisfied();
        if (p == -1) {
            if (best == -1 || lower < best) {
                best = lower;
                best_edges.clear();
                for (size_t e = 0; e < cand.size(); ++e)
                    if (in_set[e]) best_edges.push_back(cand[e]);
            }
            return;
        }
        auto [i, j] = pairs[p];
        int s = g.terminals[i], t = g.terminals[j];
        std::vector<std::vector<int>> paths;
        std::vector<int> path{s};
        std::vector<char> used(g.n(), 0);
        used[s] = 1;
        enum_paths(s, t, target[p], path, used, paths);
        for (const auto &pp : paths) {
            std::vector<int> added;
            for (size_t q = 0; q + 1 < pp.size(); ++q) {
                int a = std::min(pp[q], pp[q + 1]);
                int b = std::max(pp[q], pp[q + 1]);
                int e = cid.at({a, b});
                if (!in_set[e]) {
                    in_set[e] = 1;
                    ++deg[a];
                    ++deg[b];
                    added.push_back(e);
                }
            }
            dfs();
            for (int e : added) {
                in_set[e] = 0;
                --deg[cand[e].first];
                --deg[cand[e].second];
            }
        }
    }

    OracleResult run() {
        // feasibility and an initial incumbent: the full candidate set
        for (size_t e = 0; e < cand.size(); ++e) {
            in_set[e] = 1;
            ++deg[cand[e].first];
            ++deg[cand[e].second];
        }
        if (unsatisfied() != -1)
            throw std::runtime_error("oracle: no feasible subgraph exists");
        best = branching_count(g, deg, count_terminals);
        best_edges = cand;
        std::fill(deg.begin(), deg.end(), 0);
        std::fill(in_set.begin(), in_set.end(), 0);
        dfs();
        return {best, make_witness(g, best_edges)};
    }
};

}  // namespace

OracleResult min_branching_dps(const Graph &g, bool count_terminal_branching,
                               const SearchBudget &budget) {
    return PathSearch(g, 0, count_terminal_branching, budget).run();
}

OracleResult min_branching_das(const Instance &G, int slack,
                               const SearchBudget &budget) {
    return PathSearch(G.g, slack, true, budget).run();
}

OracleResult min_branching_exhaustive(const Graph &g, int slack,
                                      bool count_terminal_branching,
                                      const SearchBudget &budget) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.adj[u])
            if (u < v) edges.push_back({u, v});
    const int m = static_cast<int>(edges.size());
    if (m > budget.max_candidate_edges)
        throw BudgetExceeded("edge count exceeds budget");

    const auto &ts = g.terminals;
    std::vector<std::vector<int>> td;
    for (int t : ts) td.push_back(bfs_all(g, t));

    long long states = 0;
    int best = -1;
    uint64_t best_mask = 0;
    for (uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (++states > budget.max_states)
            throw BudgetExceeded("state budget exceeded");
        std::vector<std::vector<int>> adj(g.n());
        std::vector<int> deg(g.n(), 0);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                adj[edges[e].first].push_back(edges[e].second);
                adj[edges[e].second].push_back(edges[e].first);
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        int obj = 0;
        for (int v = 0; v < g.n(); ++v)
            if (deg[v] >= 3 && (count_terminal_branching || !g.is_terminal[v]))
                ++obj;
        if (best != -1 && obj >= best) continue;
        bool ok = true;
        for (size_t i = 0; i < ts.size() && ok; ++i) {
            std::vector<int> dist(g.n(), kUnreachable);
            dist[ts[i]] = 0;
            std::deque<int> q{ts[i]};
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : adj[u])
                    if (dist[v] == kUnreachable) {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
            }
            for (size_t j = i + 1; j < ts.size(); ++j) {
                int d = td[i][ts[j]];
                if (d == kUnreachable) continue;
                int dh = dist[ts[j]];
                if (dh == kUnreachable || dh > d + slack) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            best = obj;
            best_mask = mask;
        }
    }
    if (best == -1) throw std::runtime_error("oracle: no feasible subgraph");
    std::vector<std::pair<int, int>> chosen;
    for (int e = 0; e < m; ++e)
        if (best_mask >> e & 1) chosen.push_back(edges[e]);
    return {best, make_witness(g, chosen)};
}

int min_set_cover(const SetCoverInstance &sc) {
    const int m = static_cast<int>(sc.sets.size());
    int best = kUnreachable;
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<char> hit(sc.n + 1, 0);
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1)
                for (int u : sc.sets[j]) hit[u] = 1;
        bool all = true;
        for (int u = 1; u <= sc.n; ++u)
            if (!hit[u]) all = false;
        if (!all) continue;
        int sz = __builtin_popcount(mask);
        if (best == kUnreachable || sz < best) best = sz;
    }
    return best;
}

std::vector<long long> weighted_dist_all(
    int nverts, const std::vector<WeightedDigraph::Arc> &arcs, int src) {
    std::vector<std::vector<std::pair<int, int>>> adj(nverts);
    for (const auto &a : arcs) adj[a.from].push_back({a.to, a.w});
    std::vector<long long> dist(nverts, -1);
    std::deque<int> q;
    dist[src] = 0;
    q.push_back(src);
    std::vector<char> done(nverts, 0);
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        if (done[u]) continue;
        done[u] = 1;
        for (auto [v, w] : adj[u]) {
            long long nd = dist[u] + w;
            if (dist[v] == -1 || nd < dist[v]) {
                dist[v] = nd;
                if (w == 0)
                    q.push_front(v);
                else
                    q.push_back(v);
            }
        }
    }
    return dist;
}

long long weighted_distance(const WeightedDigraph &d, int u, int v) {
    return weighted_dist_all(d.nverts, d.arcs, u)[v];
}

long long weighted_distance_arcs(int nverts,
                                 const std::vector<WeightedDigraph::Arc> &arcs,
                                 int u, int v) {
    return weighted_dist_all(nverts, arcs, u)[v];
}

std::vector<int> weighted_path(int nverts,
                               const std::vector<WeightedDigraph::Arc> &arcs,
                               int u, int v) {
    std::vector<std::vector<std::pair<int, int>>> adj(nverts);
    for (const auto &a : arcs) adj[a.from].push_back({a.to, a.w});
    for (auto &l : adj) std::sort(l.begin(), l.end());
    std::vector<long long> dist(nverts, -1);
    std::vector<int> par(nverts, -1);
    std::deque<int> q;
    dist[u] = 0;
    q.push_back(u);
    std::vector<char> done(nverts, 0);
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (done[x]) continue;
        done[x] = 1;
        for (auto [y, w] : adj[x]) {
            long long nd = dist[x] + w;
            if (dist[y] == -1 || nd < dist[y]) {
                dist[y] = nd;
                par[y] = x;
                if (w == 0)
                    q.push_front(y);
                else
                    q.push_back(y);
            }
        }
    }
    if (dist[v] == -1) return {};
    std::vector<int> path;
    for (int x = v; x != -1; x = par[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

HanselReport hansel_verify(const BipartiteCoverFamily &fam) {
    const int n = fam.n;
    HanselReport rep;
    std::set<std::pair<int, int>> covered;
    for (const auto &edges : fam.graphs) {
        std::vector<std::vector<int>> adj(n + 1);
        std::set<int> active;
        for (auto [a, b] : edges) {
            if (a < 1 || a > n || b < 1 || b > n || a == b)
                throw std::invalid_argument("hansel_verify: bad edge");
            adj[a].push_back(b);
            adj[b].push_back(a);
            active.insert(a);
            active.insert(b);
            covered.insert({std::min(a, b), std::max(a, b)});
        }
        // two-colorability check
        std::vector<int> color(n + 1, -1);
        for (int s = 1; s <= n; ++s) {
            if (color[s] != -1 || adj[s].empty()) continue;
            color[s] = 0;
            std::deque<int> q{s};
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y : adj[x]) {
                    if (color[y] == -1) {
                        color[y] = 1 - color[x];
                        q.push_back(y);
                    } else if (color[y] == color[x]) {
                        throw std::invalid_argument(
                            "hansel_verify: member not bipartite");
                    }
                }
            }
        }
        rep.sum_non_isolated += static_cast<int>(active.size());
    }
    rep.covers_kn =
        static_cast<long long>(covered.size()) == 1LL * n * (n - 1) / 2;
    rep.bound = n * std::log2(static_cast<double>(n));
    if (rep.covers_kn && rep.sum_non_isolated + 1e-9 < rep.bound)
        throw std::logic_error("hansel_verify: Hansel bound violated");
    return rep;
}

BipartiteCoverFamily extract_hansel_family(const Gzero &gz, const Subgraph &h) {
    const int k = gz.k;
    BipartiteCoverFamily fam;
    fam.n = k;
    for (int v = 0; v < gz.inst.n(); ++v) {
        if (gz.inst.g.is_terminal[v]) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                int t_neg = gz.terminal_at[(j - k - 1) + k];  // coord j-k-1
                int t_pos = gz.terminal_at[i + k];            // coord i
                if (h.has_edge(t_neg, v) && h.has_edge(t_pos, v))
                    edges.push_back({i, j});
            }
        fam.graphs.push_back(std::move(edges));
    }
    return fam;
}

}  // namespace ivds
