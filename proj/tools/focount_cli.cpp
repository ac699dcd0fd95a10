// focount: counting first-order evaluation on sparse graphs.
//
// Subcommands: eval-exact, eval-approx, oracle, wcol, decompose, gen,
// gadget, pds, distance, bench.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "focount/approx.hpp"
#include "focount/io.hpp"
#include "focount/oracle.hpp"
#include "focount/problems.hpp"
#include "focount/report.hpp"

using namespace focount;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct CommonArgs {
    std::string graph_path;
    std::string formula_text;
    std::string formula_file;
    bool as_json = false;
    int rounds = -1;
    int cap_k = 3;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_formula) {
    cmd->add_option("--graph", args.graph_path, "graph file")->required();
    if (needs_formula) {
        cmd->add_option("--formula", args.formula_text, "sentence text");
        cmd->add_option("--formula-file", args.formula_file, "file holding the sentence");
    }
    cmd->add_flag("--json", args.as_json, "emit a JSON report");
    cmd->add_option("--rounds", args.rounds, "splitter round budget (default: n + 2)");
    cmd->add_option("--cap-k", args.cap_k, "largest accepted number of existential variables");
}

CountingSentence read_sentence(const CommonArgs& args) {
    std::string text = args.formula_text;
    if (text.empty() && !args.formula_file.empty()) {
        std::ifstream in(args.formula_file);
        if (!in) throw InputError("cannot open formula file: " + args.formula_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw InputError("no formula given (use --formula or --formula-file)");
    return parse_sentence(text);
}

void print_eval(const RunReport& rep, bool as_json, bool epsilon_report) {
    if (as_json) {
        std::cout << rep.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "value    " << rep.value.to_string() << "\n";
    std::cout << "witness ";
    for (int v : rep.witness) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "decision " << rep.decision << "\n";
    if (rep.mode == "approx" || epsilon_report)
        std::cout << "delta    " << rep.delta.to_string() << "\n";
    if (epsilon_report) {
        std::cout << "wcol1    " << rep.wcol1 << "\n";
        std::cout << "wcol2    " << rep.wcol2 << "\n";
    }
}

int run_eval(const CommonArgs& args, const std::string& mode, bool epsilon_report) {
    auto g = load_graph(args.graph_path);
    auto s = read_sentence(args);
    auto t0 = Clock::now();
    RunReport rep;
    rep.input = args.graph_path;
    rep.sentence = args.formula_text.empty() ? args.formula_file : args.formula_text;
    if (mode == "exact") {
        ExactOptions opts;
        opts.cap_k = args.cap_k;
        opts.rounds = args.rounds;
        rep = report_from_eval(maximize_exact(g, s, opts));
    } else if (mode == "approx") {
        ApproxOptions opts;
        opts.cap_k = std::min(args.cap_k, 2);
        rep = report_from_eval(maximize_approx(g, s, opts));
    } else {
        auto om = oracle_max(g, s);
        rep.mode = "oracle";
        rep.value = om.value;
        rep.witness = om.witness;
        rep.decision = om.value > s.threshold ? "yes" : "no";
    }
    rep.input = args.graph_path;
    rep.sentence = args.formula_text.empty() ? args.formula_file : args.formula_text;
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    print_eval(rep, args.as_json, epsilon_report);
    return 0;
}

GeneratorSpec parse_gen_spec(const json& j) {
    GeneratorSpec spec;
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("n")) spec.n = j["n"].get<int>();
    if (j.contains("w")) spec.w = j["w"].get<int>();
    if (j.contains("h")) spec.h = j["h"].get<int>();
    if (j.contains("d")) spec.d = j["d"].get<int>();
    if (j.contains("m")) spec.m = j["m"].get<int>();
    if (j.contains("r")) spec.r = j["r"].get<int>();
    if (j.contains("extra")) spec.extra = j["extra"].get<int>();
    if (j.contains("seed")) spec.seed = j["seed"].get<uint64_t>();
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"counting first-order evaluation on sparse graphs"};
    app.require_subcommand(1);

    CommonArgs exact_args, approx_args, oracle_args;
    bool epsilon_report = false;

    auto* cmd_exact = app.add_subcommand("eval-exact", "exact optimum of a counting sentence");
    add_common(cmd_exact, exact_args, true);

    auto* cmd_approx = app.add_subcommand("eval-approx", "approximate optimum with an additive bound");
    add_common(cmd_approx, approx_args, true);
    cmd_approx->add_flag("--epsilon-report", epsilon_report,
                         "print the additive error certificate and wcol diagnostics");

    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force reference evaluation");
    add_common(cmd_oracle, oracle_args, true);

    // wcol
    std::string wcol_graph;
    int wcol_r = 2;
    std::vector<double> wcol_eps;
    bool wcol_json = false, wcol_exact = false;
    auto* cmd_wcol = app.add_subcommand("wcol", "weak/strong coloring numbers of a graph");
    cmd_wcol->add_option("--graph", wcol_graph)->required();
    cmd_wcol->add_option("--r", wcol_r, "radius");
    cmd_wcol->add_option("--eps", wcol_eps, "epsilon values for the n^eps ratio");
    cmd_wcol->add_flag("--json", wcol_json);
    cmd_wcol->add_flag("--exact", wcol_exact, "also run the exhaustive ordering oracle (n <= 9)");

    // decompose
    std::string dec_graph;
    int dec_r = 2, dec_rounds = -1;
    bool dec_json = false;
    auto* cmd_dec = app.add_subcommand("decompose", "build a decomposition tree, emit statistics");
    cmd_dec->add_option("--graph", dec_graph)->required();
    cmd_dec->add_option("--r", dec_r, "radius");
    cmd_dec->add_option("--rounds", dec_rounds, "round budget (default: n + 2)");
    cmd_dec->add_flag("--json", dec_json);

    // gen
    std::string gen_out;
    GeneratorSpec gen_spec;
    auto* cmd_gen = app.add_subcommand("gen", "generate a graph");
    cmd_gen->add_option("--kind", gen_spec.kind,
                        "path|cycle|grid|tree|bdrandom|subdivided-clique|union-isolated")
        ->required();
    cmd_gen->add_option("--n", gen_spec.n);
    cmd_gen->add_option("--width", gen_spec.w);
    cmd_gen->add_option("--height", gen_spec.h);
    cmd_gen->add_option("--d", gen_spec.d);
    cmd_gen->add_option("--m", gen_spec.m);
    cmd_gen->add_option("--r", gen_spec.r);
    cmd_gen->add_option("--extra", gen_spec.extra);
    cmd_gen->add_option("--seed", gen_spec.seed);
    std::string gen_base;
    cmd_gen->add_option("--base", gen_base,
                        "base graph file for union-isolated (default: a bounded-degree graph)");
    cmd_gen->add_option("--out", gen_out, "output file (default: stdout)");

    // gadget
    std::string gadget_graph, gadget_emit;
    int gadget_k = 3;
    bool gadget_verify = false;
    auto* cmd_gadget = app.add_subcommand("gadget",
                                          "build the dominating-set hardness gadget from a "
                                          "k-partite graph (parts = labels 1..k)");
    cmd_gadget->add_option("--graph", gadget_graph)->required();
    cmd_gadget->add_option("--k", gadget_k, "number of parts");
    cmd_gadget->add_option("--emit", gadget_emit, "write <prefix>.graph and <prefix>.json");
    cmd_gadget->add_flag("--verify", gadget_verify, "brute-force the equivalence check");

    // pds
    std::string pds_graph;
    int pds_k = 1;
    std::string pds_t = "0";
    bool pds_json = false, pds_approx = false;
    int pds_rounds = -1;
    auto* cmd_pds = app.add_subcommand("pds", "partial dominating set via the engines");
    cmd_pds->add_option("--graph", pds_graph)->required();
    cmd_pds->add_option("--k", pds_k, "number of dominators");
    cmd_pds->add_option("--t", pds_t, "domination target");
    cmd_pds->add_option("--rounds", pds_rounds);
    cmd_pds->add_flag("--approx", pds_approx, "use the approximate engine");
    cmd_pds->add_flag("--json", pds_json);

    // distance
    std::string dist_graph, dist_mode = "clique";
    int dist_k = 2, dist_r = 2;
    bool dist_json = false;
    auto* cmd_dist = app.add_subcommand("distance", "distance-r clique / independent set");
    cmd_dist->add_option("--graph", dist_graph)->required();
    cmd_dist->add_option("--mode", dist_mode, "clique|indset");
    cmd_dist->add_option("--k", dist_k);
    cmd_dist->add_option("--r", dist_r);
    cmd_dist->add_flag("--json", dist_json);

    // bench
    std::string bench_config;
    bool bench_json = true;
    auto* cmd_bench = app.add_subcommand("bench", "run a suite of (generator, sentence, mode) triples");
    cmd_bench->add_option("--config", bench_config, "JSON config file")->required();
    cmd_bench->add_flag("--json", bench_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_exact->parsed()) return run_eval(exact_args, "exact", false);
        if (cmd_approx->parsed()) return run_eval(approx_args, "approx", epsilon_report);
        if (cmd_oracle->parsed()) return run_eval(oracle_args, "oracle", false);

        if (cmd_wcol->parsed()) {
            auto g = load_graph(wcol_graph);
            if (wcol_eps.empty()) wcol_eps = {0.5};
            auto reports = anwd_profile({g}, wcol_r, wcol_eps);
            const auto& rep = reports[0];
            json j;
            j["schema"] = 1;
            j["n"] = rep.n;
            j["r"] = rep.r;
            j["wcol"] = rep.wcol;
            j["col"] = rep.col;
            j["ratios"] = json::array();
            for (auto [eps, ratio] : rep.ratios)
                j["ratios"].push_back({{"eps", eps}, {"ratio", ratio}});
            if (wcol_exact) {
                auto [ord, value] = exact_min_wcol(g, wcol_r);
                j["exact_min_wcol"] = value;
            }
            if (wcol_json) std::cout << j.dump(2) << "\n";
            else {
                std::cout << "n " << rep.n << "  wcol_" << rep.r << " " << rep.wcol
                          << "  col_" << rep.r << " " << rep.col << "\n";
                for (auto [eps, ratio] : rep.ratios)
                    std::cout << "wcol / n^" << eps << " = " << ratio << "\n";
                if (j.contains("exact_min_wcol"))
                    std::cout << "exact wcol_" << rep.r << " " << j["exact_min_wcol"] << "\n";
            }
            return 0;
        }

        if (cmd_dec->parsed()) {
            auto g = load_graph(dec_graph);
            auto pi = heuristic_ordering(g, std::max(1, 2 * dec_r));
            int rounds = dec_rounds > 0 ? dec_rounds : g.n() + 2;
            auto tree = build_decomposition_tree(g, pi, dec_r, rounds);
            json j;
            j["schema"] = 1;
            j["n"] = g.n();
            j["r"] = dec_r;
            j["rounds"] = rounds;
            j["nodes"] = tree.size();
            j["depth"] = tree.depth();
            j["wcol_2r"] = wcol_of_ordering(g, pi, 2 * dec_r);
            j["size_bound_holds"] = check_tree_size_bound(tree, g, pi);
            if (dec_json) std::cout << j.dump(2) << "\n";
            else
                std::cout << "nodes " << tree.size() << "  depth " << tree.depth()
                          << "  wcol_2r " << j["wcol_2r"] << "\n";
            return 0;
        }

        if (cmd_gen->parsed()) {
            LabeledGraph g;
            if (gen_spec.kind == "union-isolated" && !gen_base.empty())
                g = gen_union_with_isolated(load_graph(gen_base), gen_spec.extra);
            else
                g = generate(gen_spec);
            if (gen_out.empty()) write_graph(std::cout, g);
            else save_graph(g, gen_out);
            return 0;
        }

        if (cmd_gadget->parsed()) {
            auto g = load_graph(gadget_graph);
            auto cg = ColorfulGraph::from_labeled(g, gadget_k);
            auto inst = build_domset_gadget(cg);
            json j;
            j["schema"] = 1;
            j["k"] = inst.k;
            j["n"] = inst.n;
            j["left"] = inst.left.size();
            j["right"] = inst.right.size();
            j["budget"] = inst.budget;
            j["cell_size"] = inst.cell_size;
            j["structure_ok"] = check_gadget_structure(cg, inst);
            if (gadget_verify) j["equivalence_ok"] = verify_gadget_equivalence(cg, inst);
            if (!gadget_emit.empty()) {
                save_graph(inst.graph, gadget_emit + ".graph");
                json prov;
                prov["schema"] = 1;
                prov["right_vertices"] = json::array();
                for (size_t i = 0; i < inst.right.size(); ++i)
                    prov["right_vertices"].push_back({{"vertex", inst.right[i]},
                                                      {"u", inst.provenance[i].first},
                                                      {"v", inst.provenance[i].second}});
                std::ofstream out(gadget_emit + ".json");
                out << prov.dump(2) << "\n";
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (cmd_pds->parsed()) {
            auto g = load_graph(pds_graph);
            auto s = pds_sentence(pds_k, BigInt::parse(pds_t));
            EvalResult r;
            if (pds_approx) {
                ApproxOptions opts;
                r = maximize_approx(g, s, opts);
            } else {
                ExactOptions opts;
                opts.rounds = pds_rounds;
                opts.cap_k = std::max(3, pds_k);
                r = maximize_exact(g, s, opts);
            }
            auto rep = report_from_eval(r);
            rep.input = pds_graph;
            rep.sentence = "pds k=" + std::to_string(pds_k) + " t=" + pds_t;
            if (pds_json) std::cout << rep.to_json().dump(2) << "\n";
            else {
                std::cout << "dominated " << r.value.to_string() << "\n";
                std::cout << "centers  ";
                for (int v : r.witness) std::cout << " " << v;
                std::cout << "\ndecision " << decision_name(r.decision) << "\n";
            }
            return 0;
        }

        if (cmd_dist->parsed()) {
            auto g = load_graph(dist_graph);
            DistanceWitness w;
            if (dist_mode == "clique") w = distance_clique(g, dist_k, dist_r);
            else if (dist_mode == "indset") w = distance_independent_set(g, dist_k, dist_r);
            else throw InputError("unknown mode: " + dist_mode);
            json j;
            j["schema"] = 1;
            j["mode"] = dist_mode;
            j["k"] = dist_k;
            j["r"] = dist_r;
            j["found"] = w.found;
            j["vertices"] = w.vertices;
            if (dist_json) std::cout << j.dump(2) << "\n";
            else if (w.found) {
                std::cout << "found:";
                for (int v : w.vertices) std::cout << " " << v;
                std::cout << "\n";
            } else
                std::cout << "none\n";
            return 0;
        }

        if (cmd_bench->parsed()) {
            std::ifstream in(bench_config);
            if (!in) throw InputError("cannot open bench config: " + bench_config);
            json cfg = json::parse(in);
            json out = json::array();
            for (const auto& item : cfg) {
                RunReport rep;
                rep.mode = item.value("mode", std::string("exact"));
                rep.sentence = item.at("formula").get<std::string>();
                auto t0 = Clock::now();
                try {
                    auto spec = parse_gen_spec(item.at("gen"));
                    auto g = generate(spec);
                    rep.input = spec.kind + " n=" + std::to_string(g.n());
                    auto s = parse_sentence(rep.sentence);
                    if (rep.mode == "exact") {
                        ExactOptions opts;
                        if (item.contains("rounds")) opts.rounds = item["rounds"].get<int>();
                        auto r = maximize_exact(g, s, opts);
                        rep = report_from_eval(r);
                    } else if (rep.mode == "approx") {
                        auto r = maximize_approx(g, s);
                        rep = report_from_eval(r);
                    } else {
                        auto om = oracle_max(g, s);
                        rep.mode = "oracle";
                        rep.value = om.value;
                        rep.witness = om.witness;
                        rep.decision = om.value > s.threshold ? "yes" : "no";
                    }
                    rep.input = spec.kind + " n=" + std::to_string(g.n());
                    rep.sentence = item.at("formula").get<std::string>();
                    // oracle cross-check when it fits the budget
                    double tuples = 1;
                    for (int i = 0; i < s.k; ++i) tuples *= g.n();
                    if (rep.mode != "oracle" && tuples * g.n() <= 2e6) {
                        rep.oracle_ran = true;
                        rep.oracle_value = oracle_max(g, s).value;
                    }
                } catch (const std::exception& e) {
                    rep.ok = false;
                    rep.error = e.what();
                }
                rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
                out.push_back(rep.to_json());
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
