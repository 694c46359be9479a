#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "ivds/das.hpp"
#include "ivds/dps.hpp"
#include "ivds/io.hpp"
#include "ivds/oracle.hpp"

using namespace ivds;

namespace {

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

SetCoverInstance parse_sets(int n, const std::string &spec) {
    SetCoverInstance sc;
    sc.n = n;
    std::vector<int> cur;
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty()) {
            cur.push_back(std::stoi(tok));
            tok.clear();
        }
    };
    for (char c : spec) {
        if (c == ',') {
            flush_tok();
        } else if (c == ';') {
            flush_tok();
            sc.sets.push_back(cur);
            cur.clear();
        } else {
            tok += c;
        }
    }
    flush_tok();
    if (!cur.empty()) sc.sets.push_back(cur);
    return sc;
}

int subgraph_report(const Instance &G, const Subgraph &h, int slack) {
    auto [bv, _] = branching_vertices(h);
    std::cout << "branching_vertices: " << bv << "\n";
    std::cout << "branching_edges: " << branching_edges(h) << "\n";
    auto rep = slack == 0 ? verify_preserving(G.g, h)
                          : verify_approx(G.g, h, slack);
    std::cout << (slack == 0 ? "preserving: " : "approx(+" +
                  std::to_string(slack) + "): ")
              << (rep.ok ? "ok" : "FAILED") << "\n";
    for (const auto &v : rep.violations)
        std::cout << "  violation: terminals " << v.u << "," << v.v
                  << " d_G=" << v.d_host << " d_H=" << v.d_sub << "\n";
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"distance-preserving subgraphs of interval graphs"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto *gen = app.add_subcommand("gen", "generate a named instance");
    std::string family, out_path, sets_spec = "";
    int k = 4, n = 20;
    uint64_t seed = 1;
    std::string flavor = "unit_point";
    gen->add_option("family", family,
                    "hard|manhattan|gint|gzero|gset|random")
        ->required();
    gen->add_option("--k", k);
    gen->add_option("--n", n);
    gen->add_option("--seed", seed);
    gen->add_option("--flavor", flavor)->check(CLI::IsMember({"general", "unit_point"}));
    gen->add_option("--sets", sets_spec, "e.g. \"1,2;2,3\" (gset)");
    gen->add_option("--out", out_path);

    // ---- build --------------------------------------------------------
    auto *build = app.add_subcommand("build", "build a das/dps subgraph");
    std::string mode = "dps", in_path, sub_out;
    build->add_option("mode", mode)->check(CLI::IsMember({"das", "dps"}));
    build->add_option("--in", in_path)->required();
    build->add_option("--out", sub_out);

    // ---- verify -------------------------------------------------------
    auto *verify = app.add_subcommand("verify", "verify a subgraph file");
    std::string v_in, v_sub;
    int slack = 0;
    verify->add_option("--in", v_in)->required();
    verify->add_option("--sub", v_sub)->required();
    verify->add_option("--slack", slack);

    // ---- oracle -------------------------------------------------------
    auto *oracle = app.add_subcommand("oracle", "brute-force minimum search");
    std::string o_in, o_mode = "dps";
    int o_slack = 1, budget_edges = 22;
    bool nonterminal_only = false;
    oracle->add_option("--in", o_in)->required();
    oracle->add_option("--mode", o_mode)->check(CLI::IsMember({"dps", "das"}));
    oracle->add_option("--slack", o_slack);
    oracle->add_option("--budget-edges", budget_edges);
    oracle->add_flag("--nonterminal-only", nonterminal_only,
                     "count only non-terminal branching vertices");

    // ---- experiment ---------------------------------------------------
    auto *exp = app.add_subcommand("experiment", "branching growth sweep");
    std::vector<int> klist{4, 8, 16, 32};
    int trials = 5;
    uint64_t exp_seed = 1;
    std::string exp_out;
    exp->add_option("--k", klist, "k values");
    exp->add_option("--trials", trials);
    exp->add_option("--seed", exp_seed);
    exp->add_option("--out", exp_out);

    // ---- export -------------------------------------------------------
    auto *exp2 = app.add_subcommand("export", "convert to dot/json");
    std::string e_in, e_sub, e_format = "dot", e_out;
    exp2->add_option("--in", e_in)->required();
    exp2->add_option("--sub", e_sub, "optional subgraph file");
    exp2->add_option("--format", e_format)->check(CLI::IsMember({"dot", "json"}));
    exp2->add_option("--out", e_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (family == "manhattan") {
                Manhattan m = gen_manhattan(k);
                spit(out_path, digraph_to_json(m.d, "manhattan_k" + std::to_string(k)));
                std::cerr << "vertices: " << m.d.nverts
                          << " arcs: " << m.d.arcs.size()
                          << " terminals: " << m.d.terminals.size() << "\n";
                return 0;
            }
            if (family == "gset") {
                SetCoverInstance sc = parse_sets(n, sets_spec);
                Gset gs = gen_gset(sc);
                nlohmann::json j;
                j["version"] = 1;
                j["kind"] = "graph";
                j["n"] = gs.g.n();
                nlohmann::json edges = nlohmann::json::array();
                for (int u = 0; u < gs.g.n(); ++u)
                    for (int v : gs.g.adj[u])
                        if (u < v) edges.push_back({u, v});
                j["edges"] = std::move(edges);
                nlohmann::json flags = nlohmann::json::array();
                for (int u = 0; u < gs.g.n(); ++u)
                    flags.push_back(gs.g.is_terminal[u] != 0);
                j["terminals"] = std::move(flags);
                spit(out_path, j.dump(2) + "\n");
                std::cerr << "vertices: " << gs.g.n()
                          << " edges: " << gs.g.edge_count()
                          << " terminals: " << gs.g.k() << "\n";
                return 0;
            }
            Instance G;
            std::string name = family + "_k" + std::to_string(k);
            if (family == "hard") {
                G = gen_hard(k);
            } else if (family == "gint") {
                G = gen_gint(k).inst;
            } else if (family == "gzero") {
                G = gen_gzero(k).inst;
            } else if (family == "random") {
                G = gen_random(n, k, seed,
                               flavor == "general" ? Flavor::general
                                                   : Flavor::unit_point);
                name = "random_n" + std::to_string(n) + "_k" + std::to_string(k);
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return 2;
            }
            spit(out_path, instance_to_json(G, name, seed));
            int nt = G.n() - G.k();
            std::cerr << "vertices: " << G.n() << " (" << nt
                      << " non-terminals, " << G.k() << " terminals) edges: "
                      << G.g.edge_count() << "\n";
            return 0;
        }

        if (*build) {
            Instance G = instance_from_json(slurp(in_path));
            Subgraph h;
            int slack_used = 0;
            if (mode == "das") {
                h = build_das(G).subgraph;
                slack_used = 1;
            } else {
                h = build_dps(G).h;
            }
            if (!sub_out.empty()) spit(sub_out, subgraph_to_json(h));
            return subgraph_report(G, h, slack_used);
        }

        if (*verify) {
            Instance G = instance_from_json(slurp(v_in));
            Subgraph h = subgraph_from_json(slurp(v_sub), G.g);
            return subgraph_report(G, h, slack);
        }

        if (*oracle) {
            Instance G = instance_from_json(slurp(o_in));
            SearchBudget budget;
            budget.max_candidate_edges = budget_edges;
            OracleResult r = o_mode == "das"
                                 ? min_branching_das(G, o_slack, budget)
                                 : min_branching_dps(G.g, !nonterminal_only,
                                                     budget);
            std::cout << "minimum: " << r.min << "\n";
            std::cout << "witness_edges: " << r.witness.edge_countn() << "\n";
            return 0;
        }

        if (*exp) {
            std::string csv = "k,das_mean,das_max,dps_mean,dps_max,dps_ratio\n";
            double cmax = 0;
            for (int kk : klist) {
                long long das_sum = 0, das_max = 0, dps_sum = 0, dps_max = 0;
                for (int t = 0; t < trials; ++t) {
                    Instance G = gen_random(8 * kk, kk,
                                            exp_seed + 1000 * kk + t,
                                            Flavor::unit_point);
                    int bd = branching_vertices(build_das(G).subgraph).first;
                    int bp = branching_vertices(build_dps_unit_point(G).h).first;
                    das_sum += bd;
                    das_max = std::max<long long>(das_max, bd);
                    dps_sum += bp;
                    dps_max = std::max<long long>(dps_max, bp);
                }
                double ratio = dps_max / (kk * std::log2(double(kk)));
                cmax = std::max(cmax, ratio);
                csv += std::to_string(kk) + "," +
                       std::to_string(double(das_sum) / trials) + "," +
                       std::to_string(das_max) + "," +
                       std::to_string(double(dps_sum) / trials) + "," +
                       std::to_string(dps_max) + "," + std::to_string(ratio) +
                       "\n";
            }
            csv += "# fitted c (max dps_branching / (k log2 k)): " +
                   std::to_string(cmax) + "\n";
            spit(exp_out, csv);
            return 0;
        }

        if (*exp2) {
            Instance G = instance_from_json(slurp(e_in));
            if (e_format == "json") {
                if (!e_sub.empty()) {
                    Subgraph h = subgraph_from_json(slurp(e_sub), G.g);
                    spit(e_out, subgraph_to_json(h));
                } else {
                    spit(e_out, instance_to_json(G));
                }
            } else {
                if (!e_sub.empty()) {
                    Subgraph h = subgraph_from_json(slurp(e_sub), G.g);
                    spit(e_out, subgraph_to_dot(G, h));
                } else {
                    spit(e_out, instance_to_dot(G));
                }
            }
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
