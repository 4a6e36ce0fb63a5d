#include "congestsim/commands.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "congestsim/algorithms.hpp"
#include "congestsim/generators.hpp"
#include "congestsim/lbgraphs.hpp"
#include "congestsim/reduction.hpp"
#include "congestsim/report.hpp"

namespace congest {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string outputs_digest(const std::map<NodeId, OutputValue>& outputs) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& [v, value] : outputs) {
        h = fnv1a(h, v);
        h = fnv1a(h, value.size());
        for (std::int64_t x : value) h = fnv1a(h, static_cast<std::uint64_t>(x));
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + path);
    f << content;
}

std::string trace_text(const std::vector<TraceEntry>& trace) {
    std::ostringstream s;
    for (const TraceEntry& t : trace)
        s << t.round << ' ' << t.from << ' ' << t.to << ' ' << t.payload.to_hex() << ' '
          << t.payload.size() << '\n';
    return s.str();
}

std::string fixed6(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(6) << v;
    return s.str();
}

BitString nth_bits(std::uint64_t value, std::size_t k) {
    BitString b;
    for (std::size_t i = 0; i < k; ++i) b.push_back((value >> (k - 1 - i)) & 1u);
    return b;
}

}  // namespace

int cmd_simulate(const Scenario& scenario, std::ostream& out, const std::string& trace_path,
                 const std::string& summary_path) {
    ResolvedScenario r = resolve_scenario(scenario);
    const RunResult result = run(r.instance, r.algorithm, r.config);

    const long long d = graph_diameter(r.instance.input);
    std::uint64_t advice_total = 0;
    for (const auto& [v, bytes] : result.metrics.advice_bytes) advice_total += bytes;

    out << csv_row({"mode", "n", "diameter", "rounds", "bits_total", "cut_bits", "advice_bytes",
                    "outputs_digest"});
    out << csv_row({mode_name(scenario.mode),
                    std::to_string(r.instance.support.node_count()),
                    std::to_string(d),
                    std::to_string(result.metrics.rounds),
                    std::to_string(result.metrics.bits_total),
                    std::to_string(result.metrics.cut_bits),
                    std::to_string(advice_total),
                    outputs_digest(result.outputs)});

    if (!trace_path.empty()) write_file(trace_path, trace_text(result.trace));
    if (!summary_path.empty()) {
        json j;
        j["mode"] = mode_name(scenario.mode);
        j["algorithm"] = scenario.algorithm;
        j["n"] = r.instance.support.node_count();
        j["rounds"] = result.metrics.rounds;
        j["bits_total"] = result.metrics.bits_total;
        j["outputs"] = json::object();
        for (const auto& [v, value] : result.outputs) j["outputs"][std::to_string(v)] = value;
        write_file(summary_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_reduce(const ReduceOptions& opts, std::ostream& out) {
    const LowerBoundFamily* fam = find_family(opts.family);
    if (!fam) throw ConfigError("unknown family: " + opts.family);
    if (opts.k_min < 1 || opts.k_max < opts.k_min) throw ConfigError("bad k range");
    const AlgorithmSpec alg = find_algorithm(opts.algorithm, ExecutionMode::SupportedActive);
    for (std::size_t k = opts.k_min; k <= opts.k_max; ++k)
        if (!fam->valid_n(2 * k + 2))
            throw ConfigError("family rejects n = " + std::to_string(2 * k + 2));

    out << csv_row({"x0", "x1", "answer", "f", "T", "payload_bits", "bound_2bST", "ok"});

    bool all_agree = true;
    bool all_bounds = true;
    double worst_ratio = 0.0;
    std::size_t pairs_total = 0;

    for (std::size_t k = opts.k_min; k <= opts.k_max; ++k) {
        const std::size_t n = 2 * k + 2;
        const ExtractedProtocol proto = extract_protocol(alg, *fam, n, opts.bandwidth, opts.seed);
        const std::size_t cut_size = proto.cut_edges().size();
        const int b = proto.bandwidth();

        std::vector<std::pair<BitString, BitString>> inputs;
        if (opts.exhaustive) {
            if (2 * k >= 32) throw ConfigError("exhaustive sweep infeasible for k = " + std::to_string(k));
            for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
                for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c)
                    inputs.emplace_back(nth_bits(a, k), nth_bits(c, k));
        } else {
            for (std::size_t i = 0; i < opts.samples; ++i) {
                const std::uint64_t r0 = mix_seed(opts.seed, 2 * i) & ((std::uint64_t{1} << k) - 1);
                const std::uint64_t r1 = mix_seed(opts.seed, 2 * i + 1) & ((std::uint64_t{1} << k) - 1);
                inputs.emplace_back(nth_bits(r0, k), nth_bits(r1, k));
            }
        }

        for (const auto& [x0, x1] : inputs) {
            ++pairs_total;
            const ProtocolRun pr = run_protocol(proto, x0, x1);
            const bool f = fam->boolean_function(n, x0, x1);
            const bool agree = (pr.answer == f);
            const bool ok = verify_theorem_bound(pr.transcript, b, cut_size, pr.rounds);
            all_agree = all_agree && agree;
            all_bounds = all_bounds && ok;
            const std::uint64_t bound = 2ull * static_cast<std::uint64_t>(b) * cut_size *
                                        static_cast<std::uint64_t>(pr.rounds);
            if (bound > 0)
                worst_ratio = std::max(
                    worst_ratio, static_cast<double>(pr.transcript.payload_bits_total()) /
                                     static_cast<double>(bound));
            out << csv_row({x0.to_string(), x1.to_string(), pr.answer ? "1" : "0", f ? "1" : "0",
                            std::to_string(pr.rounds),
                            std::to_string(pr.transcript.payload_bits_total()),
                            std::to_string(bound), (agree && ok) ? "1" : "0"});

            if (!opts.transcript_dir.empty()) {
                std::ostringstream name;
                name << opts.transcript_dir << "/" << fam->name() << "_k" << k << "_x0_"
                     << x0.to_string() << "_x1_" << x1.to_string() << ".txt";
                write_file(name.str(), pr.transcript.export_text());
            }
        }
    }

    if (!opts.summary_path.empty()) {
        json j;
        j["family"] = opts.family;
        j["algorithm"] = opts.algorithm;
        j["pairs"] = pairs_total;
        j["all_agree"] = all_agree;
        j["all_bounds_ok"] = all_bounds;
        j["worst_ratio"] = fixed6(worst_ratio);
        write_file(opts.summary_path, j.dump(2) + "\n");
    }
    return (all_agree && all_bounds) ? 0 : 1;
}

namespace {

int separate_size_bound(const SeparateOptions& opts, std::ostream& out) {
    out << csv_row({"n", "diameter", "supported_rounds", "plain_rounds", "supported_output",
                    "plain_output"});
    bool ok = true;
    for (std::size_t n : opts.sizes) {
        const Graph g = make_path(n);
        const SupportedInstance inst = SupportedInstance::plain(g);
        const long long d = graph_diameter(g);

        RunConfig sup_cfg;
        sup_cfg.mode = ExecutionMode::SupportedActive;
        sup_cfg.seed = opts.seed;
        const RunResult sup = run(inst, alg_size_upper_bound(sup_cfg.mode), sup_cfg);

        RunConfig plain_cfg;
        plain_cfg.mode = ExecutionMode::PlainCongest;
        plain_cfg.seed = opts.seed;
        const RunResult plain = run(inst, alg_size_upper_bound(plain_cfg.mode), plain_cfg);

        const std::int64_t sup_out = sup.outputs.begin()->second.at(0);
        const std::int64_t plain_out = plain.outputs.begin()->second.at(0);
        ok = ok && sup.metrics.rounds == 0 && plain.metrics.rounds >= d &&
             sup_out >= static_cast<std::int64_t>(g.node_count()) &&
             plain_out == static_cast<std::int64_t>(g.node_count());
        out << csv_row({std::to_string(n), std::to_string(d), std::to_string(sup.metrics.rounds),
                        std::to_string(plain.metrics.rounds), std::to_string(sup_out),
                        std::to_string(plain_out)});
    }
    return ok ? 0 : 1;
}

int separate_coloring(const SeparateOptions& opts, std::ostream& out) {
    out << csv_row({"n", "max_degree_plus_1", "colors_used", "proper", "supported_rounds",
                    "bits_total"});
    bool ok = true;
    for (std::size_t n : opts.sizes) {
        const Graph h = make_random_connected(n, 0.2, opts.seed + n);
        const Graph g = random_subgraph(h, 0.6, opts.seed + 7 * n);
        const SupportedInstance inst = SupportedInstance::make(h, g);

        RunConfig cfg;
        cfg.mode = ExecutionMode::SupportedActive;
        cfg.seed = opts.seed;
        const RunResult res = run(inst, alg_color_via_support(), cfg);

        std::set<std::int64_t> colors;
        for (const auto& [v, val] : res.outputs) colors.insert(val.at(0));
        bool proper = true;
        for (EdgeKey e : g.edges())
            if (res.outputs.at(e.u).at(0) == res.outputs.at(e.v).at(0)) proper = false;
        const std::size_t budget = h.max_degree() + 1;
        ok = ok && proper && res.metrics.rounds == 0 && res.metrics.bits_total == 0 &&
             colors.size() <= budget;
        out << csv_row({std::to_string(n), std::to_string(budget), std::to_string(colors.size()),
                        proper ? "1" : "0", std::to_string(res.metrics.rounds),
                        std::to_string(res.metrics.bits_total)});
    }
    return ok ? 0 : 1;
}

bool id_sets_invariants_hold(const RunResult& res, const Graph& g) {
    for (const auto& [v, value] : res.outputs) {
        const IdentifierSetsOutput sets = decode_identifier_sets(value);
        if (sets.i0.size() != sets.i1.size()) return false;
        std::set<NodeId> i1(sets.i1.begin(), sets.i1.end());
        for (NodeId u : g.nodes())
            if (!i1.count(u)) return false;
        for (NodeId u : sets.i0)
            if (g.has_node(u)) return false;
    }
    return true;
}

int separate_identifier_sets(const SeparateOptions& opts, std::ostream& out) {
    out << csv_row({"n", "diameter", "supported_rounds", "plain_rounds", "invariants_ok"});
    bool ok = true;
    for (std::size_t n : opts.sizes) {
        const Graph g = make_path(n);
        const SupportedInstance inst = SupportedInstance::plain(g);
        const long long d = graph_diameter(g);

        RunConfig sup_cfg;
        sup_cfg.mode = ExecutionMode::SupportedActive;
        sup_cfg.seed = opts.seed;
        const RunResult sup = run(inst, alg_identifier_sets(sup_cfg.mode), sup_cfg);

        RunConfig plain_cfg;
        plain_cfg.mode = ExecutionMode::PlainCongest;
        plain_cfg.seed = opts.seed;
        const RunResult plain = run(inst, alg_identifier_sets(plain_cfg.mode), plain_cfg);

        const bool inv = id_sets_invariants_hold(sup, g) && id_sets_invariants_hold(plain, g);
        ok = ok && inv && sup.metrics.rounds == 0;
        out << csv_row({std::to_string(n), std::to_string(d), std::to_string(sup.metrics.rounds),
                        std::to_string(plain.metrics.rounds), inv ? "1" : "0"});
    }
    return ok ? 0 : 1;
}

}  // namespace

int cmd_separate(const SeparateOptions& opts, std::ostream& out) {
    if (opts.sizes.empty()) throw ConfigError("separate needs at least one size");
    if (opts.problem == "size-upper-bound") return separate_size_bound(opts, out);
    if (opts.problem == "coloring") return separate_coloring(opts, out);
    if (opts.problem == "identifier-sets") return separate_identifier_sets(opts, out);
    throw ConfigError("unknown separation problem: " + opts.problem);
}

int cmd_registry(std::ostream& out) {
    out << csv_row({"problem", "bound", "approximation", "source"});
    for (const RegistryEntry& row : lower_bound_registry())
        out << csv_row({row.problem, row.bound, row.approximation, row.source});
    return 0;
}

int cmd_check_family(const CheckFamilyOptions& opts, std::ostream& out) {
    const LowerBoundFamily* fam = find_family(opts.family);
    if (!fam) throw ConfigError("unknown family: " + opts.family);
    if (!fam->valid_n(opts.n)) throw ConfigError("n = " + std::to_string(opts.n) +
                                                 " is not valid for family " + opts.family);
    FamilyCheckOptions fopts;
    fopts.exhaustive = opts.exhaustive;
    fopts.samples = opts.samples;
    fopts.seed = opts.seed;
    const FamilyCheckReport report = check_family(*fam, opts.n, fopts);

    out << csv_row({"check", "x0", "x1", "detail"});
    for (const FamilyCheckViolation& v : report.violations)
        out << csv_row({v.check, v.x0.to_string(), v.x1.to_string(), v.detail});
    return report.passed ? 0 : 1;
}

}  // namespace congest
