#include "ivds/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ivds {

bool Graph::adjacent(int u, int v) const {
    const auto &a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_count() const {
    long long deg = 0;
    for (const auto &a : adj) deg += static_cast<long long>(a.size());
    return deg / 2;
}

void Graph::finalize() {
    for (auto &a : adj) std::sort(a.begin(), a.end());
    terminals.clear();
    for (int v = 0; v < n(); ++v)
        if (is_terminal[v]) terminals.push_back(v);
}

BuildResult build_instance(const std::vector<Interval> &intervals,
                           const std::vector<char> &terminal_flags) {
    if (intervals.empty()) throw std::invalid_argument("build_instance: empty input");
    if (intervals.size() != terminal_flags.size())
        throw std::invalid_argument("build_instance: flag count mismatch");

    const int n = static_cast<int>(intervals.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return intervals[a].right < intervals[b].right;
    });

    BuildResult res;
    Instance &inst = res.inst;
    inst.ivs.resize(n);
    inst.g.adj.assign(n, {});
    inst.g.is_terminal.assign(n, 0);
    res.to_canonical.assign(n, -1);
    for (int c = 0; c < n; ++c) {
        inst.ivs[c] = intervals[order[c]];
        inst.g.is_terminal[c] = terminal_flags[order[c]];
        res.to_canonical[order[c]] = c;
    }

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (inst.ivs[u].intersects(inst.ivs[v])) {
                inst.g.adj[u].push_back(v);
                inst.g.adj[v].push_back(u);
            }
    inst.g.finalize();

    // Greedy successor: neighbor with the largest true right endpoint,
    // ties resolved to the lowest canonical index.
    inst.far_right.assign(n, -1);
    for (int u = 0; u < n; ++u) {
        int best = -1;
        for (int v : inst.g.adj[u])
            if (best == -1 || inst.ivs[v].right > inst.ivs[best].right) best = v;
        inst.far_right[u] = best;
    }
    return res;
}

std::vector<int> bfs_all(const Graph &g, int src) {
    std::vector<int> dist(g.n(), kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

int bfs_distance(const Graph &g, int u, int v) {
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw std::invalid_argument("bfs_distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.n(), kUnreachable);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.adj[x]) {
            if (dist[y] != kUnreachable) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            q.push(y);
        }
    }
    return kUnreachable;
}

std::optional<Path> bfs_path(const Graph &g, int u, int v) {
    if (u == v) return Path{{u}};
    std::vector<int> parent(g.n(), -2);
    std::queue<int> q;
    parent[u] = -1;
    q.push(u);
    while (!q.empty() && parent[v] == -2) {
        int x = q.front();
        q.pop();
        for (int y : g.adj[x])
            if (parent[y] == -2) {
                parent[y] = x;
                q.push(y);
            }
    }
    if (parent[v] == -2) return std::nullopt;
    Path p;
    for (int x = v; x != -1; x = parent[x]) p.verts.push_back(x);
    std::reverse(p.verts.begin(), p.verts.end());
    return p;
}

std::optional<Path> greedy_path(const Instance &G, int u, int v) {
    if (u < 0 || u >= G.n() || v < 0 || v >= G.n())
        throw std::invalid_argument("greedy_path: vertex out of range");
    if (!(u < v))
        throw std::invalid_argument("greedy_path: requires u prec v");
    Path p;
    int cur = u;
    p.verts.push_back(u);
    while (!G.adjacent(cur, v)) {
        int nxt = G.far_right[cur];
        if (nxt == -1 || G.ivs[nxt].right <= G.ivs[cur].right)
            return std::nullopt;  // stuck before reaching v
        p.verts.push_back(nxt);
        cur = nxt;
    }
    p.verts.push_back(v);
    return p;
}

std::vector<int> greedy_walk(const Instance &G, int u) {
    std::vector<int> walk{u};
    int cur = u;
    for (;;) {
        int nxt = G.far_right[cur];
        if (nxt == -1 || G.ivs[nxt].right <= G.ivs[cur].right) break;
        walk.push_back(nxt);
        cur = nxt;
    }
    return walk;
}

WindowResult window(const Instance &G, const Rat &a, const Rat &b,
                    bool right_open) {
    if (a > b) throw std::invalid_argument("window: a > b");
    WindowResult res;
    std::vector<int> host_to_sub(G.n(), -1);
    for (int v = 0; v < G.n(); ++v) {
        const Interval &iv = G.ivs[v];
        bool meets = right_open ? (iv.right >= a && iv.left < b)
                                : (iv.right >= a && iv.left <= b);
        if (meets) {
            host_to_sub[v] = static_cast<int>(res.to_host.size());
            res.to_host.push_back(v);
        }
    }
    Instance &w = res.inst;
    const int m = static_cast<int>(res.to_host.size());
    w.ivs.resize(m);
    w.g.adj.assign(m, {});
    w.g.is_terminal.assign(m, 0);
    for (int s = 0; s < m; ++s) {
        int v = res.to_host[s];
        w.ivs[s] = G.ivs[v];
        w.g.is_terminal[s] = G.g.is_terminal[v];
        for (int x : G.g.adj[v])
            if (host_to_sub[x] != -1) w.g.adj[s].push_back(host_to_sub[x]);
    }
    w.g.finalize();
    w.far_right.assign(m, -1);
    for (int s = 0; s < m; ++s) {
        int best = -1;
        for (int t : w.g.adj[s])
            if (best == -1 || w.ivs[t].right > w.ivs[best].right) best = t;
        w.far_right[s] = best;
    }
    return res;
}

}  // namespace ivds
