#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "localclust/generators.hpp"
#include "localclust/io.hpp"
#include "localclust/oracles.hpp"
#include "localclust/separators.hpp"
#include "localclust/solver_p.hpp"
#include "localclust/solver_q.hpp"

namespace {

using namespace localclust;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSolved = 0;
constexpr int kExitNone = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

struct SolveArgs {
    std::string graph_path;
    std::string mu_name = "size";
    long long p = 0;
    long long q = 0;
    int vertex = 0;  // 1-based on the command line
    std::string algo = "auto";
    std::string mode = "auto";
    uint64_t seed = 0;
    long long trials = SolveOptions{}.max_trials;
    long long budget = kDefaultOracleBudget;
};

void add_problem_flags(CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("--graph", args.graph_path, "graph file (DIMACS-style)")->required();
    cmd->add_option("--mu", args.mu_name, "measure: size, nonedge or nondeg")
        ->check(CLI::IsMember({"size", "nonedge", "nondeg"}));
    cmd->add_option("--p", args.p, "measure bound per cluster")->required();
    cmd->add_option("--q", args.q, "outgoing edge bound per cluster")->required();
}

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
    cmd->add_option("--algo", args.algo, "brute, fptq, fptp or auto")
        ->check(CLI::IsMember({"brute", "fptq", "fptp", "auto"}));
    cmd->add_option("--mode", args.mode, "fptq search mode: rand, derand or derand-grouped")
        ->check(CLI::IsMember({"auto", "rand", "derand", "derand-grouped"}));
    cmd->add_option("--seed", args.seed, "seed for randomized searches");
    cmd->add_option("--trials", args.trials, "randomized trial cap");
    cmd->add_option("--budget", args.budget, "exhaustive enumeration budget");
}

int check_label(const MultiGraph& g, int label, const char* what) {
    if (label < 1 || label > g.n())
        throw std::invalid_argument(std::string(what) + " must be a 1-based vertex id");
    return label - 1;
}

SolveOptions make_options(const SolveArgs& args) {
    SolveOptions opt;
    if (args.mode == "rand")
        opt.mode = SolveOptions::Mode::Randomized;
    else if (args.mode == "derand")
        opt.mode = SolveOptions::Mode::DerandSimple;
    else if (args.mode == "derand-grouped")
        opt.mode = SolveOptions::Mode::DerandGrouped;
    opt.seed = args.seed;
    opt.max_trials = args.trials;
    return opt;
}

std::string pick_algo(const SolveArgs& args, const MultiGraph& g) {
    if (args.algo != "auto") return args.algo;
    if (!g.simple()) return "fptq";
    return args.q <= args.p ? "fptq" : "fptp";
}

int status_exit(const std::string& status) {
    if (status == "none") return kExitNone;
    if (status == "budget-exhausted") return kExitBudget;
    return kExitSolved;
}

int emit(const SolutionFile& sol) {
    std::cout << serialize_solution(sol);
    return status_exit(sol.status);
}

SolutionFile base_solution(const SolveArgs& args, Measure mu, const std::string& algo,
                           bool seed_given) {
    SolutionFile sol;
    sol.mu = mu;
    sol.p = args.p;
    sol.q = args.q;
    sol.algorithm = algo;
    if (seed_given || args.mode == "rand") sol.seed = args.seed;
    return sol;
}

int run_cluster(const SolveArgs& args, bool seed_given) {
    const MultiGraph g = load_graph_file(args.graph_path);
    const Measure mu = measure_from_name(args.mu_name);
    const int v = check_label(g, args.vertex, "--vertex");
    const std::string algo = pick_algo(args, g);
    SolutionFile sol = base_solution(args, mu, algo, seed_given);
    sol.vertex = v;
    const auto record = [&](const VertexSet& cluster, const ClusterStats& stats) {
        sol.status = "cluster";
        sol.clusters = {cluster};
        sol.stats = {stats};
    };
    if (algo == "brute") {
        sol.mode = "exhaustive";
        try {
            if (auto found = oracle_cluster(g, mu, args.p, args.q, v, args.budget)) {
                const long long mv = measure_eval(g, mu, *found);
                const long long cv = boundary(g, *found).size;
                record(*found, ClusterStats{mv, cv});
            } else {
                sol.status = "none";
            }
        } catch (const budget_exceeded&) {
            sol.status = "budget-exhausted";
        }
        return emit(sol);
    }
    ClusterOutcome outcome;
    if (algo == "fptq") {
        outcome = cluster_fpt_q(g, mu, args.p, args.q, v, make_options(args));
    } else {
        outcome = cluster_fpt_p(g, mu, args.p, args.q, v);
    }
    sol.mode = outcome.mode_used;
    sol.trials_used = outcome.trials_used;
    if (outcome.status == SolveStatus::Found)
        record(outcome.cluster, outcome.stats);
    else
        sol.status = outcome.status == SolveStatus::None ? "none" : "budget-exhausted";
    return emit(sol);
}

int run_partition(const SolveArgs& args, bool seed_given) {
    const MultiGraph g = load_graph_file(args.graph_path);
    const Measure mu = measure_from_name(args.mu_name);
    const std::string algo = pick_algo(args, g);
    SolutionFile sol = base_solution(args, mu, algo, seed_given);
    const auto record = [&](const PartitionSolution& parts) {
        sol.status = "partition";
        sol.clusters = parts.clusters;
        sol.stats = parts.stats;
    };
    if (algo == "brute") {
        sol.mode = "exhaustive";
        try {
            if (auto found = oracle_partition(g, mu, args.p, args.q, args.budget)) {
                const VerifyReport report = verify_partition(g, mu, args.p, args.q, *found);
                record(PartitionSolution{*found, report.stats});
            } else {
                sol.status = "none";
            }
        } catch (const budget_exceeded&) {
            sol.status = "budget-exhausted";
        }
        return emit(sol);
    }
    PartitionOutcome outcome;
    if (algo == "fptq") {
        outcome = partition_fpt_q(g, mu, args.p, args.q, make_options(args));
    } else {
        outcome = partition_fpt_p(g, mu, args.p, args.q);
    }
    sol.mode = outcome.mode_used;
    sol.trials_used = outcome.trials_used;
    if (outcome.status == SolveStatus::Found)
        record(outcome.solution);
    else
        sol.status = outcome.status == SolveStatus::None ? "none" : "budget-exhausted";
    return emit(sol);
}

int run_verify(const std::string& graph_path, const std::string& solution_path) {
    const MultiGraph g = load_graph_file(graph_path);
    const SolutionFile sol = parse_solution(read_text_file(solution_path));
    ordered_json report;
    report["format"] = "verify/1";
    const auto reject = [&](const std::string& why) {
        report["ok"] = false;
        report["violation"] = why;
        std::cout << report.dump(2) << '\n';
        return kExitNone;
    };
    for (const VertexSet& cluster : sol.clusters)
        for (int u : cluster)
            if (u < 0 || u >= g.n()) return reject("cluster vertex beyond graph order");
    if (sol.status == "cluster") {
        if (sol.clusters.size() != 1) return reject("cluster solution must have one cluster");
        const VertexSet& cluster = sol.clusters.front();
        if (sol.vertex && !cluster.contains(*sol.vertex))
            return reject("cluster misses its anchor vertex");
        const long long mv = measure_eval(g, sol.mu, cluster);
        const long long cv = boundary(g, cluster).size;
        if (mv != sol.stats.front().mu_value || cv != sol.stats.front().cut_value)
            return reject("recorded cluster values do not match the graph");
        if (mv > sol.p) return reject("measure bound violated");
        if (cv > sol.q) return reject("cut bound violated");
    } else if (sol.status == "partition") {
        const VerifyReport check = verify_partition(g, sol.mu, sol.p, sol.q, sol.clusters);
        if (!check.ok) return reject(check.violation);
        for (size_t i = 0; i < check.stats.size(); ++i)
            if (check.stats[i].mu_value != sol.stats[i].mu_value ||
                check.stats[i].cut_value != sol.stats[i].cut_value)
                return reject("recorded cluster values do not match the graph");
    } else {
        return reject("status '" + sol.status + "' carries nothing to verify");
    }
    report["ok"] = true;
    report["status"] = sol.status;
    report["clusters"] = sol.clusters.size();
    std::cout << report.dump(2) << '\n';
    return kExitSolved;
}

int run_important_seps(const std::string& graph_path, int s_label, int t_label, long long k) {
    const MultiGraph g = load_graph_file(graph_path);
    const int s = check_label(g, s_label, "--s");
    const int t = check_label(g, t_label, "--t");
    const std::vector<ImportantSeparator> seps = enumerate_important_separators(g, s, t, k);
    ordered_json doc;
    doc["format"] = "separators/1";
    doc["s"] = s_label;
    doc["t"] = t_label;
    doc["k"] = k;
    doc["count"] = seps.size();
    ordered_json list = ordered_json::array();
    for (const ImportantSeparator& sep : seps) {
        ordered_json one;
        one["size"] = sep.cut.size;
        std::vector<int> side;
        for (int u : sep.source_side) side.push_back(u + 1);
        one["source_side"] = std::move(side);
        ordered_json edges = ordered_json::array();
        for (const Edge& e : sep.cut.edges) edges.push_back({e.u + 1, e.v + 1, e.mult});
        one["edges"] = std::move(edges);
        list.push_back(std::move(one));
    }
    doc["separators"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
    return kExitSolved;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_text_file(path, text);
}

int run_gen_planted(const std::string& mu_name, int n, int blocks, long long intra,
                    long long inter, uint64_t seed, const std::string& graph_out,
                    const std::string& witness_out) {
    const Measure mu = measure_from_name(mu_name);
    std::mt19937_64 rng(seed);
    const PlantedInstance inst = gen_planted(mu, n, blocks, intra, inter, rng);
    std::string text = "c planted blocks " + std::to_string(blocks) + " p " +
                       std::to_string(inst.p) + " q " + std::to_string(inst.q) + "\n" +
                       serialize_graph(inst.graph);
    write_or_print(graph_out, text);
    if (!witness_out.empty()) {
        SolutionFile sol;
        sol.status = "partition";
        sol.mu = mu;
        sol.p = inst.p;
        sol.q = inst.q;
        sol.clusters = inst.witness.clusters;
        sol.stats = inst.witness.stats;
        sol.algorithm = "planted";
        sol.mode = "generator";
        sol.seed = seed;
        write_text_file(witness_out, serialize_solution(sol));
    }
    return kExitSolved;
}

int run_gen_gadget(const std::string& base_path, int k, const std::string& graph_out) {
    const MultiGraph base = load_graph_file(base_path);
    const GadgetInstance inst = gen_hardness_gadget(base, k);
    const std::string text = "c gadget apex " + std::to_string(inst.apex + 1) + " k " +
                             std::to_string(inst.k) + " q " + std::to_string(inst.q) + "\n" +
                             serialize_graph(inst.graph);
    write_or_print(graph_out, text);
    return kExitSolved;
}

int run_oracle_seps(const std::string& graph_path, int s_label, int t_label, long long k,
                    long long budget) {
    const MultiGraph g = load_graph_file(graph_path);
    const int s = check_label(g, s_label, "--s");
    const int t = check_label(g, t_label, "--t");
    const std::vector<ImportantSeparator> seps = oracle_important_separators(g, s, t, k, budget);
    ordered_json doc;
    doc["format"] = "separators/1";
    doc["s"] = s_label;
    doc["t"] = t_label;
    doc["k"] = k;
    doc["count"] = seps.size();
    ordered_json list = ordered_json::array();
    for (const ImportantSeparator& sep : seps) {
        ordered_json one;
        one["size"] = sep.cut.size;
        std::vector<int> side;
        for (int u : sep.source_side) side.push_back(u + 1);
        one["source_side"] = std::move(side);
        list.push_back(std::move(one));
    }
    doc["separators"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
    return kExitSolved;
}

int run_oracle_sets(const std::string& graph_path, int v_label, long long q, long long budget) {
    const MultiGraph g = load_graph_file(graph_path);
    const int v = check_label(g, v_label, "--vertex");
    const std::vector<VertexSet> sets = oracle_important_sets(g, v, q, budget);
    ordered_json doc;
    doc["format"] = "vertex-sets/1";
    doc["vertex"] = v_label;
    doc["q"] = q;
    ordered_json list = ordered_json::array();
    for (const VertexSet& x : sets) {
        std::vector<int> side;
        for (int u : x) side.push_back(u + 1);
        list.push_back(std::move(side));
    }
    doc["sets"] = std::move(list);
    std::cout << doc.dump(2) << '\n';
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph clustering under local edge and measure bounds"};
    app.require_subcommand(1);

    SolveArgs cluster_args;
    CLI::App* cluster = app.add_subcommand("cluster", "find a valid cluster around one vertex");
    add_problem_flags(cluster, cluster_args);
    cluster->add_option("--vertex", cluster_args.vertex, "1-based anchor vertex")->required();
    add_solver_flags(cluster, cluster_args);

    SolveArgs partition_args;
    CLI::App* partition = app.add_subcommand("partition", "partition the graph into valid clusters");
    add_problem_flags(partition, partition_args);
    add_solver_flags(partition, partition_args);

    std::string verify_graph;
    std::string verify_solution;
    CLI::App* verify = app.add_subcommand("verify", "check a solution file against its graph");
    verify->add_option("--graph", verify_graph, "graph file")->required();
    verify->add_option("--solution", verify_solution, "solution file")->required();

    std::string seps_graph;
    int seps_s = 0;
    int seps_t = 0;
    long long seps_k = 0;
    CLI::App* seps = app.add_subcommand("important-seps", "enumerate important edge separators");
    seps->add_option("--graph", seps_graph, "graph file")->required();
    seps->add_option("--s", seps_s, "1-based source vertex")->required();
    seps->add_option("--t", seps_t, "1-based sink vertex")->required();
    seps->add_option("--k", seps_k, "separator size bound")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate instances");
    gen->require_subcommand(1);
    std::string planted_mu = "nonedge";
    int planted_n = 0;
    int planted_blocks = 1;
    long long planted_intra = 0;
    long long planted_inter = 0;
    uint64_t planted_seed = 0;
    std::string planted_graph_out;
    std::string planted_witness_out;
    CLI::App* planted = gen->add_subcommand("planted", "dense blocks with a known partition");
    planted->add_option("--mu", planted_mu, "measure the witness satisfies")
        ->check(CLI::IsMember({"size", "nonedge", "nondeg"}));
    planted->add_option("--n", planted_n, "vertex count")->required();
    planted->add_option("--blocks", planted_blocks, "cluster count")->required();
    planted->add_option("--intra", planted_intra, "missing edges allowed inside a block");
    planted->add_option("--inter", planted_inter, "edges allowed to leave a block");
    planted->add_option("--seed", planted_seed, "generator seed");
    planted->add_option("--graph-out", planted_graph_out, "graph file path, '-' for stdout");
    planted->add_option("--witness-out", planted_witness_out, "write the witness partition here");

    std::string gadget_base;
    int gadget_k = 0;
    std::string gadget_graph_out;
    CLI::App* gadget = gen->add_subcommand("gadget", "clique-detection gadget on a regular base");
    gadget->add_option("--base", gadget_base, "regular simple base graph file")->required();
    gadget->add_option("--k", gadget_k, "clique size the budget encodes")->required();
    gadget->add_option("--graph-out", gadget_graph_out, "graph file path, '-' for stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference answers");
    oracle->require_subcommand(1);
    SolveArgs ocluster_args;
    CLI::App* ocluster = oracle->add_subcommand("cluster", "exhaustive cluster search");
    add_problem_flags(ocluster, ocluster_args);
    ocluster->add_option("--vertex", ocluster_args.vertex, "1-based anchor vertex")->required();
    ocluster->add_option("--budget", ocluster_args.budget, "enumeration budget");
    SolveArgs opartition_args;
    CLI::App* opartition = oracle->add_subcommand("partition", "exhaustive partition search");
    add_problem_flags(opartition, opartition_args);
    opartition->add_option("--budget", opartition_args.budget, "enumeration budget");
    std::string oseps_graph;
    int oseps_s = 0;
    int oseps_t = 0;
    long long oseps_k = 0;
    long long oseps_budget = kDefaultOracleBudget;
    CLI::App* oseps = oracle->add_subcommand("important-seps", "exhaustive separator enumeration");
    oseps->add_option("--graph", oseps_graph, "graph file")->required();
    oseps->add_option("--s", oseps_s, "1-based source vertex")->required();
    oseps->add_option("--t", oseps_t, "1-based sink vertex")->required();
    oseps->add_option("--k", oseps_k, "separator size bound")->required();
    oseps->add_option("--budget", oseps_budget, "enumeration budget");
    std::string osets_graph;
    int osets_v = 0;
    long long osets_q = 0;
    long long osets_budget = kDefaultOracleBudget;
    CLI::App* osets = oracle->add_subcommand("important-sets", "exhaustive important set listing");
    osets->add_option("--graph", osets_graph, "graph file")->required();
    osets->add_option("--vertex", osets_v, "1-based vertex the sets avoid")->required();
    osets->add_option("--q", osets_q, "boundary bound")->required();
    osets->add_option("--budget", osets_budget, "enumeration budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(cluster))
            return run_cluster(cluster_args, cluster->count("--seed") > 0);
        if (app.got_subcommand(partition))
            return run_partition(partition_args, partition->count("--seed") > 0);
        if (app.got_subcommand(verify)) return run_verify(verify_graph, verify_solution);
        if (app.got_subcommand(seps))
            return run_important_seps(seps_graph, seps_s, seps_t, seps_k);
        if (app.got_subcommand(gen)) {
            if (gen->got_subcommand(planted))
                return run_gen_planted(planted_mu, planted_n, planted_blocks, planted_intra,
                                       planted_inter, planted_seed, planted_graph_out,
                                       planted_witness_out);
            return run_gen_gadget(gadget_base, gadget_k, gadget_graph_out);
        }
        if (app.got_subcommand(oracle)) {
            if (oracle->got_subcommand(ocluster)) {
                ocluster_args.algo = "brute";
                return run_cluster(ocluster_args, false);
            }
            if (oracle->got_subcommand(opartition)) {
                opartition_args.algo = "brute";
                return run_partition(opartition_args, false);
            }
            if (oracle->got_subcommand(oseps))
                return run_oracle_seps(oseps_graph, oseps_s, oseps_t, oseps_k, oseps_budget);
            return run_oracle_sets(osets_graph, osets_v, osets_q, osets_budget);
        }
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
