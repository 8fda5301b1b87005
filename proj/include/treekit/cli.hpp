#pragma once

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "convex.hpp"
#include "instance_gen.hpp"
#include "io.hpp"
#include "merge_collect.hpp"
#include "oracles.hpp"
#include "plane.hpp"
#include "svg.hpp"

namespace treekit {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// Machine-parseable run record. Only the stable fields are printed: first a
// "cost X" or "diameter X" line, then "edge u v" lines, then "# ratio X"
// when an oracle ran.
struct RunReport {
    std::string solver_tag;
    uint64_t instance_digest = 0;
    int k = 0;
    std::string value_label = "cost";
    double value = 0.0;
    std::optional<double> oracle_value;
    std::optional<double> ratio;
    double wall_seconds = 0.0;
    std::vector<Edge> edges;

    std::string to_text() const {
        std::ostringstream out;
        out << value_label << ' ' << format_report(value) << '\n';
        for (const Edge& e : edges) out << "edge " << e.u << ' ' << e.v << '\n';
        if (ratio) out << "# ratio " << format_report(*ratio) << '\n';
        return out.str();
    }
};

inline uint64_t fnv1a(const std::string& text) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace cli_detail {

struct Options {
    std::string graph_file, points_file, hu_file, parse_file, cnf_file;
    std::string out_file, svg_file;
    std::string terminals, metric, variant = "zero-one-inf", kind = "graph", preset = "uniform-d";
    std::string objective = "comm";
    int k = -1;
    int n = 8;
    int depth = 3;
    double m_budget = 1.0;
    double sigma = 1.0;
    double scale = 1.0;
    double a = 1.0, c = 1.0, dfar = 5.0;
    double edge_prob = 0.35, wlo = 0.0, whi = 10.0;
    uint64_t seed = 0;
    bool oracle = false;
};

inline std::vector<int> parse_id_list(const std::string& text) {
    std::vector<int> ids;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        ids.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            cur += ch;
    }
    flush();
    return ids;
}

inline Metric parse_metric(const std::string& text) {
    if (text == "euclidean") return Metric::euclidean;
    if (text == "rectilinear") return Metric::rectilinear;
    throw ArgumentError("metric must be euclidean or rectilinear");
}

inline void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--graph", o.graph_file);
    cmd->add_option("--points", o.points_file);
    cmd->add_option("--hu", o.hu_file);
    cmd->add_option("--parse", o.parse_file);
    cmd->add_option("--k", o.k);
    cmd->add_option("--metric", o.metric);
    cmd->add_option("--seed", o.seed);
    cmd->add_option("--svg", o.svg_file);
    cmd->add_flag("--oracle", o.oracle);
    cmd->add_option("--out", o.out_file);
}

inline WeightedGraph need_graph(const Options& o, uint64_t* digest = nullptr) {
    if (o.graph_file.empty()) throw ArgumentError("missing --graph FILE");
    std::string text = read_file(o.graph_file);
    if (digest) *digest = fnv1a(text);
    return graph_from_text(text);
}

inline PointSet2D need_points(const Options& o, uint64_t* digest = nullptr) {
    if (o.points_file.empty()) throw ArgumentError("missing --points FILE");
    std::string text = read_file(o.points_file);
    if (digest) *digest = fnv1a(text);
    PointSet2D ps = points_from_text(text);
    if (!o.metric.empty()) ps.metric = parse_metric(o.metric);
    return ps;
}

inline HuInstance need_hu(const Options& o, uint64_t* digest = nullptr) {
    if (o.hu_file.empty()) throw ArgumentError("missing --hu FILE");
    std::string text = read_file(o.hu_file);
    if (digest) *digest = fnv1a(text);
    return hu_from_text(text);
}

inline int need_k(const Options& o) {
    if (o.k < 0) throw ArgumentError("missing --k INT");
    return o.k;
}

inline std::string sp_tree_to_text(const SPParseTree& t) {
    std::ostringstream out;
    std::function<void(const SPParseTree&)> rec = [&](const SPParseTree& n) {
        if (n.kind == SPParseTree::Kind::edge) {
            out << "(e " << n.u << ' ' << n.v << ' ' << format_exact(n.w) << ')';
            return;
        }
        out << (n.kind == SPParseTree::Kind::series ? "(s " : "(p ");
        rec(*n.left);
        out << ' ';
        rec(*n.right);
        out << ')';
    };
    rec(t);
    out << '\n';
    return out.str();
}

}  // namespace cli_detail

inline CliResult run_command(const std::vector<std::string>& args) {
    using namespace cli_detail;
    CliResult result;
    std::ostringstream out;

    CLI::App app{"solvers for trees that are short or small"};
    app.require_subcommand(1);
    Options o;

    auto* kmst = app.add_subcommand("kmst", "k-node minimum spanning trees");
    kmst->require_subcommand(1);
    auto* ktree = app.add_subcommand("ktree", "k-node minimum-diameter trees");
    ktree->require_subcommand(1);
    auto* hu = app.add_subcommand("hu", "communication / diameter cost spanning trees");
    hu->require_subcommand(1);
    auto* oracle = app.add_subcommand("oracle", "brute-force references");
    oracle->require_subcommand(1);
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    std::function<void()> action;
    auto started = std::chrono::steady_clock::now();
    auto finish_solution = [&](const KTreeSolution& sol, const std::string& label, double value,
                               std::optional<double> oracle_value, uint64_t digest,
                               const PointSet2D* ps) {
        RunReport rep;
        rep.solver_tag = sol.solver_tag;
        rep.instance_digest = digest;
        rep.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        rep.k = static_cast<int>(sol.vertices.size());
        rep.value_label = label;
        rep.value = value;
        rep.edges = sol.edges;
        if (oracle_value) {
            rep.oracle_value = oracle_value;
            rep.ratio = *oracle_value == 0.0 ? (value == 0.0 ? 1.0 : kInf) : value / *oracle_value;
        }
        std::string text = rep.to_text();
        out << text;
        if (!o.out_file.empty()) write_file(o.out_file, text);
        if (!o.svg_file.empty()) {
            if (!ps) throw ArgumentError("--svg needs a geometric solution");
            emit_svg(sol, *ps, o.svg_file);
        }
    };

    auto graph_kmst_action = [&](std::function<KTreeSolution(const WeightedGraph&, int)> solve) {
        return [&, solve]() {
            uint64_t digest = 0;
            WeightedGraph g = need_graph(o, &digest);
            int k = need_k(o);
            KTreeSolution sol = solve(g, k);
            std::optional<double> ov;
            if (o.oracle) {
                try {
                    ov = oracle_kmst(g, k).value;
                } catch (const ResourceError&) {
                }
            }
            finish_solution(sol, "cost", sol.cost, ov, digest, nullptr);
        };
    };

    auto points_kmst_action = [&](std::function<KTreeSolution(const PointSet2D&, int)> solve) {
        return [&, solve]() {
            uint64_t digest = 0;
            PointSet2D ps = need_points(o, &digest);
            int k = need_k(o);
            KTreeSolution sol = solve(ps, k);
            std::optional<double> ov;
            if (o.oracle) {
                try {
                    ov = oracle_kmst(complete_graph(ps), k).value;
                } catch (const ResourceError&) {
                }
            }
            finish_solution(sol, "cost", sol.cost, ov, digest, &ps);
        };
    };

    {
        auto* c = kmst->add_subcommand("approx", "cluster-merge approximation, general graphs");
        add_common(c, o);
        c->callback([&]() { action = graph_kmst_action(
            [](const WeightedGraph& g, int k) { return merge_collect(g, k); }); });
    }
    {
        auto* c = kmst->add_subcommand("plane", "window heuristic for planar points");
        add_common(c, o);
        c->callback([&]() { action = points_kmst_action(
            [](const PointSet2D& ps, int k) { return plane_kmst(ps, k); }); });
    }
    {
        auto* c = kmst->add_subcommand("steiner", "k-Steiner via metric closure");
        add_common(c, o);
        c->add_option("--terminals", o.terminals);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                WeightedGraph g = need_graph(o, &digest);
                int k = need_k(o);
                if (o.terminals.empty()) throw ArgumentError("missing --terminals LIST");
                std::vector<int> terms = parse_id_list(o.terminals);
                KTreeSolution sol = k_steiner(g, terms, k);
                std::optional<double> ov;
                if (o.oracle) {
                    try {
                        ov = oracle_kmst_terminals(g, terms, k).value;
                    } catch (const ResourceError&) {
                    }
                }
                finish_solution(sol, "cost", sol.cost, ov, digest, nullptr);
            };
        });
    }
    {
        auto* c = kmst->add_subcommand("two-weight", "exact solver for two distinct weights");
        add_common(c, o);
        c->callback([&]() { action = graph_kmst_action(
            [](const WeightedGraph& g, int k) { return two_weight_kmst(g, k); }); });
    }
    {
        auto* c = kmst->add_subcommand("sp", "exact solver for series-parallel parse trees");
        add_common(c, o);
        c->callback([&]() {
            action = [&]() {
                if (o.parse_file.empty()) throw ArgumentError("missing --parse FILE");
                std::string text = read_file(o.parse_file);
                auto tree = parse_sp_tree(text);
                KTreeSolution sol = sp_kmst(*tree, need_k(o));
                finish_solution(sol, "cost", sol.cost, std::nullopt, fnv1a(text), nullptr);
            };
        });
    }
    {
        auto* c = kmst->add_subcommand("tree", "exact solver for tree graphs");
        add_common(c, o);
        c->callback([&]() { action = graph_kmst_action(
            [](const WeightedGraph& g, int k) { return tree_kmst(g, k); }); });
    }
    {
        auto* c = kmst->add_subcommand("convex", "exact solver for convex position points");
        add_common(c, o);
        c->callback([&]() { action = points_kmst_action(
            [](const PointSet2D& ps, int k) { return convex_kmst(ps, k); }); });
    }
    {
        auto* c = kmst->add_subcommand("circle", "exact solver for concyclic points");
        add_common(c, o);
        c->callback([&]() { action = points_kmst_action(
            [](const PointSet2D& ps, int k) { return circle_kmst(ps, k); }); });
    }
    {
        auto* c = ktree->add_subcommand("diam", "minimum-diameter k-tree");
        add_common(c, o);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                WeightedGraph g = need_graph(o, &digest);
                int k = need_k(o);
                MinDiamKTree res = min_diameter_ktree(g, k);
                std::optional<double> ov;
                if (o.oracle) {
                    try {
                        ov = oracle_min_diam_ktree(g, k).value;
                    } catch (const ResourceError&) {
                    }
                }
                finish_solution(res.tree, "diameter", res.diameter, ov, digest, nullptr);
            };
        });
    }
    {
        auto* c = hu->add_subcommand("comm", "minimum-communication spanning tree, d in {0,c}, r in {a,b}");
        add_common(c, o);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                HuInstance inst = need_hu(o, &digest);
                KTreeSolution sol = min_comm_tree_two_r_zero_c(inst);
                double value = evaluate_hu(sol, inst).communication;
                std::optional<double> ov;
                if (o.oracle) {
                    try {
                        ov = oracle_hu_tree(inst, HuObjective::communication).value;
                    } catch (const ResourceError&) {
                    }
                }
                finish_solution(sol, "cost", value, ov, digest, nullptr);
            };
        });
    }
    {
        auto* c = hu->add_subcommand("diamcost", "minimum-diameter-cost spanning tree, uniform d, r in {a,b}");
        add_common(c, o);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                HuInstance inst = need_hu(o, &digest);
                KTreeSolution sol = min_diamcost_tree_uniform_d_two_r(inst);
                double value = evaluate_hu(sol, inst).diameter;
                std::optional<double> ov;
                if (o.oracle) {
                    try {
                        ov = oracle_hu_tree(inst, HuObjective::diameter_cost).value;
                    } catch (const ResourceError&) {
                    }
                }
                finish_solution(sol, "cost", value, ov, digest, nullptr);
            };
        });
    }
    {
        auto* c = oracle->add_subcommand("kmst", "exhaustive kMST reference");
        add_common(c, o);
        c->add_option("--terminals", o.terminals);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                WeightedGraph g = need_graph(o, &digest);
                int k = need_k(o);
                OracleWitness w = o.terminals.empty()
                                      ? oracle_kmst(g, k)
                                      : oracle_kmst_terminals(g, parse_id_list(o.terminals), k);
                KTreeSolution sol = make_solution(g, w.vertices, w.edges, "oracle");
                finish_solution(sol, "cost", w.value, std::nullopt, digest, nullptr);
            };
        });
    }
    {
        auto* c = oracle->add_subcommand("diam", "exhaustive minimum-diameter reference");
        add_common(c, o);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                WeightedGraph g = need_graph(o, &digest);
                OracleWitness w = oracle_min_diam_ktree(g, need_k(o));
                KTreeSolution sol = make_solution(g, w.vertices, w.edges, "oracle");
                finish_solution(sol, "diameter", w.value, std::nullopt, digest, nullptr);
            };
        });
    }
    {
        auto* c = oracle->add_subcommand("hu", "exhaustive spanning-tree reference");
        add_common(c, o);
        c->add_option("--objective", o.objective);
        c->callback([&]() {
            action = [&]() {
                uint64_t digest = 0;
                HuInstance inst = need_hu(o, &digest);
                if (o.objective != "comm" && o.objective != "diamcost")
                    throw ArgumentError("--objective must be comm or diamcost");
                HuOracleResult w = oracle_hu_tree(inst, o.objective == "comm"
                                                            ? HuObjective::communication
                                                            : HuObjective::diameter_cost);
                std::vector<int> vs(inst.n);
                std::iota(vs.begin(), vs.end(), 0);
                KTreeSolution sol = make_solution(inst.distance_graph(), vs, w.edges, "oracle");
                finish_solution(sol, "cost", w.value, std::nullopt, digest, nullptr);
            };
        });
    }

    auto emit_instance = [&](const std::string& text, const std::vector<std::string>& meta) {
        if (!o.out_file.empty()) {
            write_file(o.out_file, text);
            for (const auto& line : meta) out << line << '\n';
        } else {
            out << text;
        }
    };
    {
        auto* c = gen->add_subcommand("steiner", "Steiner-tree to kMST gadget");
        add_common(c, o);
        c->add_option("--terminals", o.terminals);
        c->add_option("--budget", o.m_budget);
        c->add_option("--variant", o.variant);
        c->callback([&]() {
            action = [&]() {
                WeightedGraph g = need_graph(o);
                if (o.terminals.empty()) throw ArgumentError("missing --terminals LIST");
                SteinerWeightVariant v;
                if (o.variant == "zero-one-inf")
                    v = SteinerWeightVariant::zero_one_inf;
                else if (o.variant == "one-two-three")
                    v = SteinerWeightVariant::one_two_three;
                else
                    throw ArgumentError("--variant must be zero-one-inf or one-two-three");
                auto red = gen_steiner_to_kmst(g, parse_id_list(o.terminals),
                                               static_cast<int>(o.m_budget), v);
                emit_instance(graph_to_text(red.graph),
                              {"k " + std::to_string(red.k), "budget " + format_report(red.budget)});
            };
        });
    }
    {
        auto* c = gen->add_subcommand("sat3", "3SAT to diameter-cost gadget");
        add_common(c, o);
        c->add_option("--cnf", o.cnf_file);
        c->add_option("--a", o.a);
        c->add_option("--c", o.c);
        c->add_option("--dfar", o.dfar);
        c->callback([&]() {
            action = [&]() {
                if (o.cnf_file.empty()) throw ArgumentError("missing --cnf FILE");
                auto formula = parse_3sat(read_file(o.cnf_file));
                auto red = gen_3sat_diamcost(formula, o.a, o.c, o.dfar);
                emit_instance(hu_to_text(red.instance),
                              {"threshold " + format_report(red.threshold),
                               "nodes " + std::to_string(red.node_count())});
            };
        });
    }
    {
        auto* c = gen->add_subcommand("is", "independent-set to communication k-tree gadget");
        add_common(c, o);
        c->add_option("--budget", o.m_budget);
        c->callback([&]() {
            action = [&]() {
                WeightedGraph g = need_graph(o);
                auto red = gen_is_to_comm_ktree(g, need_k(o), o.m_budget);
                emit_instance(hu_to_text(red.instance),
                              {"threshold " + format_report(red.threshold),
                               "requirement " + format_report(red.edge_requirement)});
            };
        });
    }
    {
        auto* c = gen->add_subcommand("fig2", "worst-case family for the cluster-merge heuristic");
        add_common(c, o);
        c->add_option("--scale", o.scale);
        c->callback([&]() {
            action = [&]() {
                auto inst = gen_fig2(need_k(o), o.scale);
                emit_instance(graph_to_text(inst.graph),
                              {"known_opt " + format_report(inst.known_opt)});
            };
        });
    }
    {
        auto* c = gen->add_subcommand("fig4", "worst-case family for the planar heuristic");
        add_common(c, o);
        c->add_option("--sigma", o.sigma);
        c->callback([&]() {
            action = [&]() {
                auto inst = gen_fig4(need_k(o), o.sigma, o.seed);
                emit_instance(points_to_text(inst.points),
                              {"known_opt_bound " + format_report(inst.known_opt_bound)});
            };
        });
    }
    {
        auto* c = gen->add_subcommand("random", "seeded random instances");
        add_common(c, o);
        c->add_option("--kind", o.kind);
        c->add_option("--n", o.n);
        c->add_option("--edge-prob", o.edge_prob);
        c->add_option("--wlo", o.wlo);
        c->add_option("--whi", o.whi);
        c->add_option("--depth", o.depth);
        c->add_option("--preset", o.preset);
        c->callback([&]() {
            action = [&]() {
                if (o.kind == "graph") {
                    emit_instance(graph_to_text(gen_random_graph(o.n, o.edge_prob, o.wlo, o.whi,
                                                                 o.seed)),
                                  {});
                } else if (o.kind == "points") {
                    Metric m = o.metric.empty() ? Metric::euclidean : parse_metric(o.metric);
                    emit_instance(points_to_text(gen_random_points(o.n, o.seed, m)), {});
                } else if (o.kind == "sp-parse") {
                    emit_instance(sp_tree_to_text(*gen_random_sp_parse(o.depth, o.seed)), {});
                } else if (o.kind == "convex") {
                    emit_instance(points_to_text(gen_random_convex(o.n, o.seed)), {});
                } else if (o.kind == "circle") {
                    emit_instance(points_to_text(gen_random_circle(o.n, o.seed)), {});
                } else if (o.kind == "hu") {
                    HuPreset p;
                    if (o.preset == "uniform-d")
                        p = HuPreset::uniform_d;
                    else if (o.preset == "arbitrary-d")
                        p = HuPreset::arbitrary_d;
                    else if (o.preset == "two-r-zero-c")
                        p = HuPreset::two_r_zero_c;
                    else if (o.preset == "two-r-two-d")
                        p = HuPreset::two_r_two_d;
                    else
                        throw ArgumentError(
                            "--preset must be uniform-d, arbitrary-d, two-r-zero-c or two-r-two-d");
                    emit_instance(hu_to_text(gen_random_hu(o.n, p, o.seed)), {});
                } else {
                    throw ArgumentError("--kind must be graph, points, sp-parse, convex, circle or hu");
                }
            };
        });
    }

    std::vector<const char*> argv;
    argv.push_back("treekit");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (action) action();
        result.exit_code = 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
    } catch (const ArgumentError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const ValidationError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const InfeasibleError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const ApplicabilityError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    } catch (const ResourceError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 2;
    }
    result.out = out.str();
    return result;
}

}  // namespace treekit
