#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "congestsim/commands.hpp"
#include "congestsim/errors.hpp"

namespace {

using namespace congest;

// Runs a command into --out (or stdout) and returns its exit code.
template <typename Fn>
int with_output(const std::string& out_path, Fn&& fn) {
    if (out_path.empty()) return fn(std::cout);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + out_path);
    return fn(f);
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) sizes.push_back(std::stoull(tok));
    return sizes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CONGEST / supported-CONGEST simulator and lower-bound harness"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one scenario and report metrics");
    std::string sim_config, sim_graph, sim_input, sim_alg, sim_mode = "plain";
    std::string sim_out, sim_trace, sim_summary;
    std::int64_t sim_seed = -1;
    int sim_bandwidth = -1, sim_max_rounds = -2;
    sim->add_option("--config", sim_config, "scenario file");
    sim->add_option("--graph", sim_graph, "graph source, e.g. path(64) or file:g.edges");
    sim->add_option("--input", sim_input, "input subgraph source (defaults to --graph)");
    sim->add_option("--algorithm", sim_alg, "algorithm, e.g. bfs(0)");
    sim->add_option("--mode", sim_mode, "plain|active|passive");
    sim->add_option("--seed", sim_seed, "run seed");
    sim->add_option("--bandwidth", sim_bandwidth, "bits per edge per direction per round");
    sim->add_option("--max-rounds", sim_max_rounds, "round cap");
    sim->add_option("--out", sim_out, "write the report CSV here instead of stdout");
    sim->add_option("--trace", sim_trace, "write the message trace here");
    sim->add_option("--summary", sim_summary, "write a JSON summary here");

    // reduce
    auto* red = app.add_subcommand("reduce", "two-party sweep over a lower-bound family");
    ReduceOptions ropts;
    std::string red_out;
    std::size_t red_k = 0;
    red->add_option("--family", ropts.family, "family name");
    red->add_option("--k", red_k, "single k (shorthand for --k-min/--k-max)");
    red->add_option("--k-min", ropts.k_min, "smallest k");
    red->add_option("--k-max", ropts.k_max, "largest k");
    red->add_option("--algorithm", ropts.algorithm, "decision algorithm");
    bool red_exhaustive = false;
    red->add_flag("--exhaustive", red_exhaustive, "all 2^(2k) input pairs");
    red->add_option("--samples", ropts.samples, "random input pairs instead");
    red->add_option("--seed", ropts.seed, "seed");
    red->add_option("--bandwidth", ropts.bandwidth, "bandwidth override");
    red->add_option("--transcripts", ropts.transcript_dir, "directory for per-pair transcripts");
    red->add_option("--summary", ropts.summary_path, "JSON summary path");
    red->add_option("--out", red_out, "report CSV path");

    // separate
    auto* sep = app.add_subcommand("separate", "supported vs plain round measurements");
    SeparateOptions sopts;
    std::string sep_sizes = "8,16,32,64", sep_out;
    sep->add_option("--problem", sopts.problem, "size-upper-bound|coloring|identifier-sets")
        ->required();
    sep->add_option("--sizes", sep_sizes, "comma-separated instance sizes");
    sep->add_option("--seed", sopts.seed, "seed");
    sep->add_option("--out", sep_out, "report CSV path");

    // registry
    auto* reg = app.add_subcommand("registry", "print the transferred-lower-bound table");
    std::string reg_out;
    reg->add_option("--out", reg_out, "CSV path");

    // check-family
    auto* chk = app.add_subcommand("check-family", "verify the family conditions");
    CheckFamilyOptions copts;
    std::string chk_out;
    std::size_t chk_k = 0;
    chk->add_option("--family", copts.family, "family name");
    chk->add_option("--n", copts.n, "instance size");
    chk->add_option("--k", chk_k, "toy-family parameter (n = 2k+2)");
    bool chk_exhaustive = false;
    chk->add_flag("--exhaustive", chk_exhaustive, "all input pairs");
    chk->add_option("--samples", copts.samples, "random input pairs instead");
    chk->add_option("--seed", copts.seed, "seed");
    chk->add_option("--out", chk_out, "violation CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) {
            Scenario s;
            if (!sim_config.empty()) s = load_scenario_file(sim_config);
            if (!sim_graph.empty()) s.graph = sim_graph;
            if (!sim_input.empty()) s.input = sim_input;
            if (!sim_alg.empty()) s.algorithm = sim_alg;
            if (sim->count("--mode") || sim_config.empty()) s.mode = parse_mode(sim_mode);
            if (sim_seed >= 0) s.seed = static_cast<std::uint64_t>(sim_seed);
            if (sim_bandwidth >= 0) s.bandwidth = sim_bandwidth;
            if (sim_max_rounds >= -1) s.max_rounds = sim_max_rounds;
            if (s.graph.empty()) throw ConfigError("simulate needs --config or --graph");
            if (s.algorithm.empty()) throw ConfigError("simulate needs an algorithm");
            return with_output(sim_out, [&](std::ostream& out) {
                return cmd_simulate(s, out, sim_trace, sim_summary);
            });
        }
        if (red->parsed()) {
            if (red_k > 0) ropts.k_min = ropts.k_max = red_k;
            ropts.exhaustive = red_exhaustive || ropts.samples == 0;
            return with_output(red_out, [&](std::ostream& out) { return cmd_reduce(ropts, out); });
        }
        if (sep->parsed()) {
            sopts.sizes = parse_sizes(sep_sizes);
            return with_output(sep_out, [&](std::ostream& out) { return cmd_separate(sopts, out); });
        }
        if (reg->parsed())
            return with_output(reg_out, [&](std::ostream& out) { return cmd_registry(out); });
        if (chk->parsed()) {
            if (chk_k > 0) copts.n = 2 * chk_k + 2;
            copts.exhaustive = chk_exhaustive || copts.samples == 0;
            return with_output(chk_out, [&](std::ostream& out) {
                return cmd_check_family(copts, out);
            });
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const SimError& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
