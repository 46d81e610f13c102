// Command-line front end: solve kernels, evaluate formulas, generate graphs,
// and run the verification suites.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "yablo/digraph.hpp"
#include "yablo/error.hpp"
#include "yablo/eval.hpp"
#include "yablo/kernel.hpp"
#include "yablo/parser.hpp"
#include "yablo/schemes.hpp"
#include "yablo/successor.hpp"
#include "yablo/verify.hpp"

namespace {

yablo::Digraph load_graph(const std::string& path) {
    if (path == "-") return yablo::read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw yablo::Error("cannot open graph file '" + path + "'");
    return yablo::read_edge_list(in);
}

void print_kernel(const yablo::VertexSet& k) {
    std::cout << "KERNEL";
    for (int v : k.members()) std::cout << " " << v;
    std::cout << "\n";
}

int run_solve(const std::string& path, bool enumerate, bool oracle) {
    const yablo::Digraph g = load_graph(path);
    if (enumerate || oracle) {
        const auto kernels = yablo::brute_force_kernels(g);
        if (kernels.empty()) {
            std::cout << "NO-KERNEL\n";
            return 1;
        }
        if (enumerate)
            for (const auto& k : kernels) print_kernel(k);
        else
            print_kernel(kernels.front());
        return 0;
    }
    const yablo::SolveResult res = yablo::solve(g);
    if (!res.found()) {
        std::cout << "NO-KERNEL\n";
        return 1;
    }
    print_kernel(*res.kernel);
    return 0;
}

int run_eval(const std::string& path, const std::string& formula_text,
             const std::string& axiom_name, int theta_level, bool theta_given) {
    const yablo::Digraph g = load_graph(path);
    if (theta_given) {
        std::cout << yablo::format_vertex_set(yablo::theta_set(g, theta_level)) << "\n";
        return 0;
    }
    yablo::FormulaPtr f;
    if (!axiom_name.empty()) {
        f = yablo::axiom(axiom_name);
    } else {
        f = yablo::parse_formula(formula_text);
        if (!yablo::is_sentence(*f)) {
            std::string vars;
            for (const auto& v : yablo::free_variables(*f)) vars += " " + v;
            throw yablo::Error("formula is not a sentence; free variables:" + vars);
        }
    }
    const bool truth = yablo::eval(g, *f);
    std::cout << (truth ? "TRUE" : "FALSE") << "\n";
    return truth ? 0 : 1;
}

struct VerifyOptions {
    std::string suite;
    int max_n = 5;
    int exhaustive_nodes = 3;
    int samples = 200;
    int big_n = 100;
    int max_total = 12;
    std::uint64_t seed = 12345;
    bool json = false;
    std::string out_path;
};

int run_verify(const VerifyOptions& opt) {
    std::vector<yablo::Report> reports;
    if (opt.suite == "fixtures") {
        reports.push_back(yablo::check_fixtures());
    } else if (opt.suite == "thetas") {
        reports.push_back(yablo::check_theorem_thetas(opt.max_n, opt.exhaustive_nodes,
                                                      opt.samples, opt.seed));
    } else if (opt.suite == "lemma") {
        reports.push_back(yablo::check_lemma(opt.max_total));
    } else if (opt.suite == "compactness") {
        reports.push_back(yablo::compactness_sweep(opt.big_n));
    } else if (opt.suite == "y1") {
        reports.push_back(yablo::check_scheme_y1(opt.exhaustive_nodes));
    } else if (opt.suite == "all") {
        reports.push_back(yablo::check_fixtures());
        reports.push_back(yablo::check_theorem_thetas(opt.max_n, opt.exhaustive_nodes,
                                                      opt.samples, opt.seed));
        // deeper sweep of the base level over all 4-node graphs
        reports.push_back(yablo::check_theorem_thetas(1, 4, 0, opt.seed));
        reports.push_back(yablo::check_lemma(opt.max_total));
        reports.push_back(yablo::compactness_sweep(opt.big_n));
        reports.push_back(yablo::check_scheme_y1(3));
    } else {
        throw yablo::Error("unknown suite '" + opt.suite +
                           "' (try fixtures, thetas, lemma, compactness, y1, all)");
    }

    std::string text;
    for (const auto& r : reports) text += opt.json ? r.to_json_string() + "\n" : r.to_text();
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw yablo::Error("cannot write report to '" + opt.out_path + "'");
        out << text;
    }

    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

int run_gen(const CLI::App* cmd, int chain, int cycle, const std::string& successor_text,
            const std::vector<std::string>& random_args) {
    yablo::Digraph g;
    if (cmd->count("--witness-chain")) {
        g = yablo::witness_chain(chain);
    } else if (cmd->count("--cycle")) {
        g = yablo::realize(yablo::SuccessorStructure::make({cycle}));
    } else if (cmd->count("--successor")) {
        g = yablo::realize(yablo::parse_successor(successor_text));
    } else {
        const int n = std::stoi(random_args.at(0));
        const double p = std::stod(random_args.at(1));
        const std::uint64_t seed = std::stoull(random_args.at(2));
        g = yablo::random_digraph(n, p, seed);
    }
    yablo::write_edge_list(g, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph kernels, the theta hierarchy, and successor structures"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "decide kernel existence for a graph");
    std::string solve_path;
    bool enumerate = false, oracle = false;
    solve_cmd->add_option("graph", solve_path, "edge-list file, or - for stdin")->required();
    solve_cmd->add_flag("--enumerate", enumerate, "list every kernel (brute force, n <= 20)");
    solve_cmd->add_flag("--oracle", oracle, "force the brute-force oracle (n <= 20)");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a sentence or a theta level");
    std::string eval_path, formula_text, axiom_name;
    int theta_level = 0;
    eval_cmd->add_option("graph", eval_path, "edge-list file, or - for stdin")->required();
    auto* formula_opt = eval_cmd->add_option("--formula", formula_text, "sentence text");
    auto* theta_opt =
        eval_cmd->add_option("--theta", theta_level, "print the satisfying set of theta(n)");
    auto* axiom_opt =
        eval_cmd->add_option("--axiom", axiom_name, "A1, A2, A, S, or no_odd_cycle(<k>)");
    formula_opt->excludes(theta_opt)->excludes(axiom_opt);
    theta_opt->excludes(axiom_opt);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    VerifyOptions vopt;
    verify_cmd
        ->add_option("--suite", vopt.suite, "fixtures, thetas, lemma, compactness, y1, or all")
        ->required();
    verify_cmd->add_option("--max-n", vopt.max_n, "deepest theta level (<= 5)");
    verify_cmd->add_option("--exhaustive-nodes", vopt.exhaustive_nodes,
                           "exhaustive sweep size (thetas <= 4, y1 <= 3)");
    verify_cmd->add_option("--samples", vopt.samples, "random graphs per theta sweep");
    verify_cmd->add_option("--N", vopt.big_n, "compactness cycle parameter (<= 100)");
    verify_cmd->add_option("--max-total", vopt.max_total, "cycle-multiset budget (<= 12)");
    verify_cmd->add_option("--seed", vopt.seed, "seed for sampled sweeps");
    verify_cmd->add_flag("--json", vopt.json, "emit the report as JSON");
    verify_cmd->add_option("--out", vopt.out_path, "write the report to a file");

    auto* gen_cmd = app.add_subcommand("gen", "write a graph in edge-list form to stdout");
    int chain = 0, cycle = 0;
    std::string successor_text;
    std::vector<std::string> random_args;
    auto* chain_opt = gen_cmd->add_option("--witness-chain", chain,
                                          "chain 0->1->...->2n with a terminal loop");
    auto* cycle_opt = gen_cmd->add_option("--cycle", cycle, "directed cycle of length m");
    auto* succ_opt = gen_cmd->add_option("--successor", successor_text,
                                         "realize \"cycles=[...] n=0 z=0\"");
    auto* random_opt = gen_cmd->add_option("--random", random_args, "n p seed")->expected(3);
    chain_opt->excludes(cycle_opt)->excludes(succ_opt)->excludes(random_opt);
    cycle_opt->excludes(succ_opt)->excludes(random_opt);
    succ_opt->excludes(random_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_path, enumerate, oracle);
        if (eval_cmd->parsed()) {
            if (!formula_opt->count() && !theta_opt->count() && !axiom_opt->count())
                throw yablo::Error("eval needs one of --formula, --theta, --axiom");
            return run_eval(eval_path, formula_text, axiom_name, theta_level,
                            theta_opt->count() > 0);
        }
        if (verify_cmd->parsed()) return run_verify(vopt);
        if (gen_cmd->parsed()) {
            if (!chain_opt->count() && !cycle_opt->count() && !succ_opt->count() &&
                !random_opt->count())
                throw yablo::Error(
                    "gen needs one of --witness-chain, --cycle, --successor, --random");
            return run_gen(gen_cmd, chain, cycle, successor_text, random_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
