// pfu: command-line front end for the path-factor toolkit.
//
// Exit codes: 0 verdict computed, 1 input error, 2 internal inconsistency
// (two decision routes disagreed), 3 search budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfu/constructions.hpp"
#include "pfu/criteria.hpp"
#include "pfu/harness.hpp"
#include "pfu/io.hpp"
#include "pfu/parameters.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_inconsistent = 2;
constexpr int exit_budget = 3;

struct GraphSource {
    std::string path;
    std::string graph6;
};

void add_graph_source(CLI::App* cmd, GraphSource& src)
{
    cmd->add_option("input", src.path, "graph6 or edge-list file ('-' for stdin)");
    cmd->add_option("--graph6", src.graph6, "graph6 string given inline");
}

std::vector<pfu::Graph> load(const GraphSource& src)
{
    if (!src.graph6.empty()) return {pfu::parse_graph6(src.graph6)};
    if (src.path.empty()) throw pfu::GraphError("no input graph: pass a file or --graph6");
    if (src.path == "-") return pfu::read_graphs(std::cin);
    return pfu::read_graph_file(src.path);
}

void emit(const std::vector<nlohmann::json>& items)
{
    if (items.size() == 1)
        std::cout << items.front().dump(2) << '\n';
    else
        std::cout << nlohmann::json(items).dump(2) << '\n';
}

std::vector<int> parse_orders(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad order list '" + text + "'");
        out.push_back(v);
    }
    return out;
}

pfu::Graph family_graph(const std::vector<std::string>& args)
{
    if (args.empty()) throw std::invalid_argument("gen family needs a kind");
    const std::string& kind = args[0];
    auto num = [&](std::size_t i) {
        if (i >= args.size()) throw std::invalid_argument("gen family " + kind + ": missing parameter");
        return std::stoi(args[i]);
    };
    if (kind == "complete") return pfu::complete_graph(num(1));
    if (kind == "complete_bipartite") return pfu::complete_bipartite(num(1), num(2));
    if (kind == "path") return pfu::path_graph(num(1));
    if (kind == "cycle") return pfu::cycle_graph(num(1));
    if (kind == "copies") {
        if (args.size() < 3) throw std::invalid_argument("gen family copies M GRAPH6");
        return pfu::copies(num(1), pfu::parse_graph6(args[2]));
    }
    if (kind == "join" || kind == "union") {
        if (args.size() < 3) throw std::invalid_argument("gen family " + kind + " GRAPH6 GRAPH6");
        auto a = pfu::parse_graph6(args[1]);
        auto b = pfu::parse_graph6(args[2]);
        return kind == "join" ? pfu::join(a, b) : pfu::disjoint_union(a, b);
    }
    throw std::invalid_argument("unknown family '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Path-factor (P>=3) existence, coveredness and uniformity toolkit"};
    app.require_subcommand(1);

    std::uint64_t budget = 0;
    app.add_option("--budget", budget, "node budget per factor search (0 = unlimited)");

    GraphSource analyze_src;
    auto* analyze = app.add_subcommand("analyze", "all parameters and verdicts for a graph, as JSON");
    add_graph_source(analyze, analyze_src);

    GraphSource check_src;
    std::string check_which;
    int check_k = 1;
    std::string check_gamma = "1/3";
    auto* check = app.add_subcommand("check", "evaluate a sufficient-condition hypothesis");
    check->add_option("theorem", check_which, "thm13 | thm14")->required()->check(CLI::IsMember({"thm13", "thm14"}));
    add_graph_source(check, check_src);
    check->add_option("--k", check_k, "positive integer k (thm14)");
    check->add_option("--gamma", check_gamma, "rational gamma in [1/3, 1] as P/Q (thm14)");

    std::string val_which;
    int val_nmax = 0;
    int val_nmin = 1;
    int val_random = 0;
    std::string val_orders;
    std::uint64_t val_seed = 1;
    std::string val_p = "1/2";
    int val_k = 1;
    std::string val_gamma = "1/3";
    auto* val = app.add_subcommand("validate", "exhaustive / sampled theorem validation");
    val->add_option("theorem", val_which, "thm11 | thm12 | thm13 | thm14")
        ->required()
        ->check(CLI::IsMember({"thm11", "thm12", "thm13", "thm14"}));
    val->add_option("--nmax", val_nmax, "exhaustive over all labeled graphs up to this order (<= 10)");
    val->add_option("--nmin", val_nmin, "smallest order for the exhaustive part");
    val->add_option("--random", val_random, "random graphs per order");
    val->add_option("--orders", val_orders, "comma-separated orders for random graphs (default nmax+1)");
    val->add_option("--seed", val_seed, "random seed");
    val->add_option("--p", val_p, "edge probability P/Q");
    val->add_option("--k", val_k, "k (thm14)");
    val->add_option("--gamma", val_gamma, "gamma P/Q (thm14)");

    std::string demo_which;
    int demo_t = 0;
    int demo_k = 1;
    int demo_b = 1;
    auto* demo = app.add_subcommand("demo", "reproduce a sharpness construction");
    demo->add_option("construction", demo_which, "remark1 | remark2")
        ->required()
        ->check(CLI::IsMember({"remark1", "remark2"}));
    demo->add_option("--t", demo_t, "t >= 0 (remark1)");
    demo->add_option("--k", demo_k, "k >= 1 (remark2)");
    demo->add_option("--b", demo_b, "independent set size b, gamma = b/(2k+1) (remark2)");

    std::vector<std::string> gen_args;
    int gen_t = 0;
    int gen_k = 1;
    auto* gen = app.add_subcommand("gen", "print a graph as graph6");
    gen->add_option("args", gen_args, "remark1 | remark2 | family KIND PARAMS...")->required();
    gen->add_option("--t", gen_t, "t (remark1)");
    gen->add_option("--k", gen_k, "k (remark2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*analyze) {
            std::vector<nlohmann::json> out;
            for (const auto& g : load(analyze_src)) out.push_back(pfu::analyze_graph(g, budget));
            emit(out);
            return exit_ok;
        }
        if (*check) {
            std::vector<nlohmann::json> out;
            for (const auto& g : load(check_src)) {
                if (check_which == "thm13") {
                    auto j = pfu::to_json(pfu::check_thm13_hypothesis(g));
                    j["theorem"] = "thm13";
                    out.push_back(j);
                } else {
                    pfu::Thm14Params p{check_k, pfu::Rational::parse(check_gamma)};
                    auto j = pfu::to_json(pfu::check_thm14_hypothesis(g, p));
                    j["theorem"] = "thm14";
                    j["k"] = p.k;
                    j["gamma"] = p.gamma.to_string();
                    j["b"] = p.b();
                    out.push_back(j);
                }
            }
            emit(out);
            return exit_ok;
        }
        if (*val) {
            pfu::ValidationScope scope;
            scope.exhaustive_min_order = val_nmin;
            scope.exhaustive_max_order = val_nmax;
            scope.node_budget = budget;
            if (val_random > 0) {
                scope.random.count_per_order = val_random;
                scope.random.orders = val_orders.empty() ? std::vector<int>{val_nmax + 1} : parse_orders(val_orders);
                scope.random.seed = val_seed;
                scope.random.edge_prob = pfu::Rational::parse(val_p);
            }
            pfu::Theorem th = pfu::Theorem::thm11;
            if (val_which == "thm12") th = pfu::Theorem::thm12;
            if (val_which == "thm13") th = pfu::Theorem::thm13;
            if (val_which == "thm14") {
                th = pfu::Theorem::thm14;
                scope.thm14 = pfu::Thm14Params{val_k, pfu::Rational::parse(val_gamma)};
            }
            auto report = pfu::validate(th, scope);
            auto j = report.to_json();
            if (scope.thm14) {
                j["k"] = scope.thm14->k;
                j["gamma"] = scope.thm14->gamma.to_string();
            }
            std::cout << j.dump(2) << '\n';
            if (!report.passed()) return exit_inconsistent;
            if (!report.budget_exhausted.empty()) return exit_budget;
            return exit_ok;
        }
        if (*demo) {
            auto r = demo_which == "remark1" ? pfu::remark1_demo(demo_t, budget) : pfu::remark2_demo(demo_k, demo_b, budget);
            std::cout << r.to_json().dump(2) << '\n';
            return exit_ok;
        }
        if (*gen) {
            pfu::Graph g;
            if (gen_args[0] == "remark1")
                g = pfu::remark1_graph(gen_t);
            else if (gen_args[0] == "remark2")
                g = pfu::remark2_graph(gen_k);
            else if (gen_args[0] == "family")
                g = family_graph({gen_args.begin() + 1, gen_args.end()});
            else
                throw std::invalid_argument("gen: unknown target '" + gen_args[0] + "'");
            std::cout << pfu::to_graph6(g) << '\n';
            return exit_ok;
        }
    } catch (const pfu::InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return exit_inconsistent;
    } catch (const pfu::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return exit_budget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_ok;
}
