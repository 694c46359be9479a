#include "ivds/das.hpp"

#include <string>

namespace ivds {

Subgraph build_tree(const Instance &G, int terminal_pos) {
    const auto &ts = G.terminals();
    const int k = static_cast<int>(ts.size());
    if (terminal_pos < 0 || terminal_pos >= k)
        throw std::invalid_argument("build_tree: terminal index out of range");
    Subgraph T(G.g);
    T.add_vertex(ts[terminal_pos]);
    for (int j = terminal_pos + 1; j < k; ++j) {
        auto p = greedy_path(G, ts[terminal_pos], ts[j]);
        if (!p)
            throw std::runtime_error("build_tree: terminals disconnected (" +
                                     std::to_string(terminal_pos) + "," +
                                     std::to_string(j) + ")");
        T.add_path(*p);
    }
    return T;
}

DasResult build_das(const Instance &G) {
    const auto &ts = G.terminals();
    const int k = static_cast<int>(ts.size());
    if (k < 2) throw std::invalid_argument("build_das: needs >= 2 terminals");

    DasResult res;
    Subgraph T1 = build_tree(G, 0);
    res.subgraph = T1;

    // attach every interior terminal to each tree vertex it touches
    for (int i = 1; i + 1 < k; ++i) {
        int t = ts[i];
        for (int v : G.g.adj[t])
            if (T1.vert[v]) {
                res.subgraph.add_edge(v, t);
                res.attachment_edges.push_back({t, v});
            }
    }

    auto spine = greedy_path(G, ts[0], ts[k - 1]);
    if (!spine) throw std::runtime_error("build_das: terminals disconnected");
    res.spine = *spine;

    // alternative definition via the spine; equal whenever every greedy
    // path from t_1 stays on the spine until its final hop
    Subgraph alt(G.g);
    alt.add_path(res.spine);
    for (auto [t, v] : res.attachment_edges) alt.add_edge(v, t);
    res.spine_form_equal = (alt.edges == res.subgraph.edges);

    return res;
}

}  // namespace ivds
