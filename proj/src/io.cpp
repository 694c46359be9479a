#include "ivds/io.hpp"

#include <json.hpp>

#include "ivds/subgraph.hpp"

namespace ivds {

using nlohmann::json;

namespace {

json rat_to_json(const Rat &r) {
    return json::array({boost::multiprecision::numerator(r).convert_to<long long>(),
                        boost::multiprecision::denominator(r).convert_to<long long>()});
}

Rat rat_from_json(const json &j) {
    long long num = j.at(0).get<long long>();
    long long den = j.at(1).get<long long>();
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(num) / den;
}

}  // namespace

std::string instance_to_json(const Instance &G, const std::string &name,
                             uint64_t seed) {
    json j;
    j["version"] = 1;
    j["kind"] = "interval_instance";
    json ivs = json::array();
    for (const auto &iv : G.ivs)
        ivs.push_back(json::array({rat_to_json(iv.left), rat_to_json(iv.right)}));
    j["intervals"] = std::move(ivs);
    json flags = json::array();
    for (int v = 0; v < G.n(); ++v) flags.push_back(G.g.is_terminal[v] != 0);
    j["terminals"] = std::move(flags);
    j["meta"] = {{"name", name}, {"seed", seed}};
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string &text) {
    json j = json::parse(text);
    if (j.value("kind", "interval_instance") != "interval_instance")
        throw std::invalid_argument("not an interval instance file");
    std::vector<Interval> ivs;
    std::vector<char> flags;
    for (const auto &e : j.at("intervals"))
        ivs.emplace_back(rat_from_json(e.at(0)), rat_from_json(e.at(1)));
    for (const auto &f : j.at("terminals")) flags.push_back(f.get<bool>() ? 1 : 0);
    if (ivs.size() != flags.size())
        throw std::invalid_argument("intervals/terminals length mismatch");
    return build_instance(ivs, flags).inst;
}

std::string digraph_to_json(const WeightedDigraph &d, const std::string &name) {
    json j;
    j["version"] = 1;
    j["kind"] = "weighted_digraph";
    j["nverts"] = d.nverts;
    json arcs = json::array();
    for (const auto &a : d.arcs)
        arcs.push_back(json::array({a.from, a.to, a.w}));
    j["arcs"] = std::move(arcs);
    json flags = json::array();
    for (int v = 0; v < d.nverts; ++v)
        flags.push_back(v < static_cast<int>(d.is_terminal.size()) &&
                        d.is_terminal[v] != 0);
    j["terminals"] = std::move(flags);
    j["meta"] = {{"name", name}};
    return j.dump(2) + "\n";
}

WeightedDigraph digraph_from_json(const std::string &text) {
    json j = json::parse(text);
    if (j.value("kind", "") != "weighted_digraph")
        throw std::invalid_argument("not a weighted digraph file");
    WeightedDigraph d;
    d.nverts = j.at("nverts").get<int>();
    for (const auto &a : j.at("arcs"))
        d.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>(),
                          a.at(2).get<int>()});
    d.is_terminal.assign(d.nverts, 0);
    int v = 0;
    for (const auto &f : j.at("terminals")) d.is_terminal[v++] = f.get<bool>();
    for (int u = 0; u < d.nverts; ++u)
        if (d.is_terminal[u]) d.terminals.push_back(u);
    return d;
}

std::string subgraph_to_json(const Subgraph &h) {
    json j;
    j["version"] = 1;
    j["kind"] = "subgraph";
    json verts = json::array();
    for (int v = 0; v < static_cast<int>(h.vert.size()); ++v)
        if (h.vert[v]) verts.push_back(v);
    j["vertices"] = std::move(verts);
    json edges = json::array();
    for (auto [u, v] : h.edges) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

Subgraph subgraph_from_json(const std::string &text, const Graph &host) {
    json j = json::parse(text);
    if (j.value("kind", "") != "subgraph")
        throw std::invalid_argument("not a subgraph file");
    Subgraph h(host);
    for (const auto &v : j.at("vertices")) h.add_vertex(v.get<int>());
    for (const auto &e : j.at("edges"))
        h.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return h;
}

namespace {

std::string rat_label(const Rat &r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1)
        s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

std::string vertex_label(const Instance &G, int v) {
    return "v" + std::to_string(v) + " [" + rat_label(G.ivs[v].left) + "," +
           rat_label(G.ivs[v].right) + "]";
}

}  // namespace

std::string instance_to_dot(const Instance &G) {
    std::string out = "graph instance {\n";
    for (int v = 0; v < G.n(); ++v) {
        out += "  v" + std::to_string(v) + " [label=\"" + vertex_label(G, v) +
               "\"" + (G.g.is_terminal[v] ? ", shape=box, style=bold" : "") +
               "];\n";
    }
    for (int u = 0; u < G.n(); ++u)
        for (int v : G.g.adj[u])
            if (u < v)
                out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) +
                       ";\n";
    out += "}\n";
    return out;
}

std::string subgraph_to_dot(const Instance &G, const Subgraph &h) {
    auto deg = h.degrees();
    std::string out = "graph subgraph {\n";
    for (int v = 0; v < G.n(); ++v) {
        if (!h.vert[v]) continue;
        std::string attrs;
        if (G.g.is_terminal[v]) attrs += ", shape=box, style=bold";
        if (deg[v] >= 3) attrs += ", color=red";  // branching vertex
        out += "  v" + std::to_string(v) + " [label=\"" + vertex_label(G, v) +
               "\"" + attrs + "];\n";
    }
    for (auto [u, v] : h.edges)
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace ivds
