// Command-line front end: generation, exact solving, verified constructions,
// lower-bound certificates, and CSV experiment sweeps.
//
// Exit codes: 0 success / SUITABLE, 1 usage or input error, 2 NOT-SUITABLE or
// bound-not-established or failed verification, 3 resource caps exhausted
// (generator retries, solver limits, resampling caps).

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepdim/constructions.hpp"
#include "sepdim/exact_solver.hpp"
#include "sepdim/family_io.hpp"
#include "sepdim/graph_io.hpp"
#include "sepdim/lower_bounds.hpp"
#include "sepdim/random_regular.hpp"
#include "sepdim/separation.hpp"

namespace {

using namespace sepdim;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitCap = 3;

struct GenArgs {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct SolveArgs {
    std::string graph;
    int limit = kNoSolveLimit;
    int cap = kDefaultExactVertexCap;
    std::string family_out;
};

struct ConstructArgs {
    std::string graph;
    std::string method = "dist2";
    std::uint64_t seed = 0;
    bool seed_given = false;
    double c1 = 400.0;
    double c2 = 0.5;
    int base_cutoff = 8;
    std::uint64_t max_resamples = 0;
    std::string out;
};

struct VerifyArgs {
    std::string graph;
    std::string family;
};

struct LowerArgs {
    std::string graph;
    double delta = 0.1;
    double eps = 0.3;
    std::string mode = "exhaustive";
    int cap = kDefaultExpansionCap;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
};

struct ExperimentArgs {
    std::vector<int> d_list;
    std::vector<int> n_list;
    std::vector<std::uint64_t> seeds;
    std::vector<std::string> methods;
    std::string out;
    bool no_timing = false;
    int exact_cap = kDefaultExactVertexCap;
};

int run_gen(const GenArgs& args) {
    Graph g = random_regular(args.n, args.d, args.seed);
    write_graph_file(g, args.out);
    std::cout << "wrote " << args.out << ": n=" << g.vertex_count() << " d=" << args.d
              << " m=" << g.edge_count() << '\n';
    return kExitOk;
}

int run_solve(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph);
    SolveResult result = sdim_exact(g, args.limit, args.cap);
    if (!result.value) {
        std::cout << "sdim > " << result.limit << " (search exhausted all families of size <= "
                  << result.limit << ")\n";
        std::cout << "explored: nodes=" << result.stats.nodes
                  << " distinct_coverage_sets=" << result.stats.distinct_coverage_sets << '\n';
        return kExitCap;
    }
    std::cout << "sdim = " << *result.value << '\n';
    std::cout << "explored: nodes=" << result.stats.nodes
              << " distinct_coverage_sets=" << result.stats.distinct_coverage_sets << '\n';
    std::cout << "witness family:\n";
    write_family(result.family, std::cout);
    if (!args.family_out.empty()) write_family_file(result.family, args.family_out);
    return kExitOk;
}

int run_construct(const ConstructArgs& args) {
    Graph g = read_graph_file(args.graph);
    ConstructionReport report;
    if (args.method == "dist2") {
        report = construct_distance_two(g);
    } else if (args.method == "recursive") {
        if (!args.seed_given)
            throw domain_error("construct --method recursive requires an explicit --seed");
        RecursionConfig cfg;
        cfg.base_cutoff = args.base_cutoff;
        cfg.c1 = args.c1;
        cfg.c2 = args.c2;
        cfg.max_resamples = args.max_resamples;
        cfg.seed = args.seed;
        report = construct_bounded_degree(g, cfg);
    } else {
        throw domain_error("unknown construction method '" + args.method + "'");
    }
    std::cout << "method: " << args.method << '\n' << to_string(report);
    if (!args.out.empty()) write_family_file(report.family, args.out);
    return report.verified ? kExitOk : kExitNegative;
}

int run_verify(const VerifyArgs& args) {
    Graph g = read_graph_file(args.graph);
    PermutationFamily fam = read_family_file(args.family);
    SuitabilityVerdict verdict = is_pairwise_suitable(fam, g);
    std::cout << to_string(verdict) << '\n';
    return verdict.suitable ? kExitOk : kExitNegative;
}

int run_lower(const LowerArgs& args) {
    Graph g = read_graph_file(args.graph);
    if (args.mode == "sampled") {
        ExpansionCertificate cert = verify_expansion(g, args.delta, args.eps,
                                                     ExpansionMode::sampled, args.cap,
                                                     args.samples, args.seed);
        std::cout << to_string(cert) << '\n';
        std::cout << "note: sampled certificates are exploratory and cannot back a bound\n";
        return cert.holds ? kExitOk : kExitNegative;
    }
    LowerBoundCertificate cert = certified_lower_bound(g, args.delta, args.eps, args.cap);
    std::cout << to_string(cert);
    return cert.implied_bound ? kExitOk : kExitNegative;
}

int run_experiment(const ExperimentArgs& args) {
    std::ofstream out(args.out);
    if (!out) throw parse_error("cannot open '" + args.out + "' for writing");
    out << "n,d,seed,method,family_size,exact_value,verified";
    if (!args.no_timing) out << ",runtime_ms";
    out << "\r\n";

    for (int d : args.d_list)
        for (int n : args.n_list)
            for (std::uint64_t seed : args.seeds) {
                if (static_cast<long long>(n) * d % 2 != 0 || d >= n || d < 0) {
                    std::cerr << "skipping infeasible combination n=" << n << " d=" << d << '\n';
                    continue;
                }
                Graph g = random_regular(n, d, seed);
                for (const std::string& method : args.methods) {
                    auto start = std::chrono::steady_clock::now();
                    std::size_t family_size = 0;
                    std::string exact_value;
                    bool verified = false;
                    if (method == "exact") {
                        if (n > args.exact_cap) {
                            std::cerr << "skipping exact on n=" << n << " (cap "
                                      << args.exact_cap << ")\n";
                            continue;
                        }
                        SolveResult r = sdim_exact(g, kNoSolveLimit, args.exact_cap);
                        family_size = r.family.members.size();
                        exact_value = std::to_string(*r.value);
                        verified = is_pairwise_suitable(r.family, g).suitable;
                    } else if (method == "dist2") {
                        ConstructionReport rep = construct_distance_two(g);
                        family_size = rep.size;
                        verified = rep.verified;
                    } else if (method == "recursive") {
                        RecursionConfig cfg;
                        cfg.seed = seed;
                        ConstructionReport rep = construct_bounded_degree(g, cfg);
                        family_size = rep.size;
                        verified = rep.verified;
                    } else {
                        throw domain_error("unknown method '" + method + "'");
                    }
                    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count();
                    out << n << ',' << d << ',' << seed << ',' << method << ',' << family_size
                        << ',' << exact_value << ',' << (verified ? "true" : "false");
                    if (!args.no_timing) out << ',' << elapsed;
                    out << "\r\n";
                }
            }
    if (!out) throw parse_error("write failed for '" + args.out + "'");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"separation dimension toolkit: exact values, verified constructions, "
                 "and lower-bound certificates for graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cmd_gen = app.add_subcommand("gen", "generate a random d-regular graph (edge-list file)");
    cmd_gen->add_option("-n,--vertices", gen.n, "vertex count")->required();
    cmd_gen->add_option("-d,--degree", gen.d, "regular degree")->required();
    cmd_gen->add_option("--seed", gen.seed, "RNG seed (required; no implicit entropy)")->required();
    cmd_gen->add_option("-o,--out", gen.out, "output edge-list path")->required();

    SolveArgs solve;
    auto* cmd_solve = app.add_subcommand("solve", "exact separation dimension of a small graph");
    cmd_solve->add_option("graph", solve.graph, "edge-list file")->required();
    cmd_solve->add_option("--limit", solve.limit, "report 'value > limit' past this size");
    cmd_solve->add_option("--cap", solve.cap, "vertex-count cap for the exact solver");
    cmd_solve->add_option("--family-out", solve.family_out, "also write the witness family here");

    ConstructArgs construct;
    auto* cmd_construct =
        app.add_subcommand("construct", "build and verify an upper-bound permutation family");
    cmd_construct->add_option("graph", construct.graph, "edge-list file")->required();
    cmd_construct->add_option("--method", construct.method, "dist2 | recursive")
        ->check(CLI::IsMember({"dist2", "recursive"}));
    auto* seed_opt = cmd_construct->add_option("--seed", construct.seed,
                                               "RNG seed (required for recursive)");
    cmd_construct->add_option("--c1", construct.c1,
                              "parts scale: r = ceil(c1*d/log2 d) (asymptotic default 400)");
    cmd_construct->add_option("--c2", construct.c2,
                              "cap scale: t = max(1, floor(c2*log2 d)) (asymptotic default 0.5)");
    cmd_construct->add_option("--base-cutoff", construct.base_cutoff,
                              "fall back to dist2 at or below this degree");
    cmd_construct->add_option("--max-resamples", construct.max_resamples,
                              "resampling cap per level (0 = 50*n)");
    cmd_construct->add_option("-o,--out", construct.out, "write the family file here");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "decide pairwise suitability of a family");
    cmd_verify->add_option("graph", verify.graph, "edge-list file")->required();
    cmd_verify->add_option("family", verify.family, "family file")->required();

    LowerArgs lower;
    auto* cmd_lower = app.add_subcommand("lower", "lower-bound certificate pipeline");
    cmd_lower->add_option("graph", lower.graph, "edge-list file")->required();
    cmd_lower->add_option("--delta", lower.delta, "expansion slack")->required();
    cmd_lower->add_option("--eps", lower.eps, "subset-size fraction")->required();
    cmd_lower->add_option("--mode", lower.mode, "exhaustive | sampled (exploratory)")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    cmd_lower->add_option("--cap", lower.cap, "exhaustive cap on floor(eps*n)");
    cmd_lower->add_option("--samples", lower.samples, "sample count for sampled mode");
    auto* lower_seed = cmd_lower->add_option("--seed", lower.seed, "seed for sampled mode");

    ExperimentArgs experiment;
    auto* cmd_experiment = app.add_subcommand(
        "experiment",
        "CSV sweep; columns: n,d,seed,method,family_size,exact_value,verified[,runtime_ms]");
    cmd_experiment->add_option("--d-list", experiment.d_list, "degrees")
        ->required()
        ->delimiter(',');
    cmd_experiment->add_option("--n-list", experiment.n_list, "vertex counts")
        ->required()
        ->delimiter(',');
    cmd_experiment->add_option("--seeds", experiment.seeds, "seeds (required; one graph each)")
        ->required()
        ->delimiter(',');
    cmd_experiment
        ->add_option("--methods", experiment.methods, "subset of exact,dist2,recursive")
        ->delimiter(',');
    cmd_experiment->add_option("-o,--out", experiment.out, "CSV output path")->required();
    cmd_experiment->add_flag("--no-timing", experiment.no_timing,
                             "omit the runtime column (byte-deterministic output)");
    cmd_experiment->add_option("--exact-cap", experiment.exact_cap,
                               "vertex cap for the exact method");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    construct.seed_given = seed_opt->count() > 0;
    if (cmd_lower->parsed() && lower.mode == "sampled" && lower_seed->count() == 0) {
        std::cerr << "error: --mode sampled requires an explicit --seed\n";
        return kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_gen(gen);
        if (cmd_solve->parsed()) return run_solve(solve);
        if (cmd_construct->parsed()) return run_construct(construct);
        if (cmd_verify->parsed()) return run_verify(verify);
        if (cmd_lower->parsed()) return run_lower(lower);
        if (cmd_experiment->parsed()) return run_experiment(experiment);
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const verification_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNegative;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
