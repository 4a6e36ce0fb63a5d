// Acceptance suite: runs every top-level requirement at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "congestsim/algorithms.hpp"
#include "congestsim/commands.hpp"
#include "congestsim/generators.hpp"
#include "congestsim/lbgraphs.hpp"
#include "congestsim/reduction.hpp"
#include "congestsim/report.hpp"
#include "oracles.hpp"

using namespace congest;
using Clock = std::chrono::steady_clock;

namespace {

std::vector<BitString> all_inputs(std::size_t k) {
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
        BitString b;
        for (std::size_t i = 0; i < k; ++i) b.push_back((v >> (k - 1 - i)) & 1);
        out.push_back(b);
    }
    return out;
}

struct Harness {
    int failures = 0;

    void criterion(int number, const std::string& name, const std::function<bool()>& body) {
        const auto start = Clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            note = std::string(" (exception: ") + e.what() + ")";
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
        std::printf("%s  criterion %2d: %s  [%.2fs]%s\n", ok ? "PASS" : "FAIL", number,
                    name.c_str(), secs, note.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }

    int finish() const {
        if (failures == 0) {
            std::printf("ALL CRITERIA PASSED\n");
            return 0;
        }
        std::printf("%d CRITERIA FAILED\n", failures);
        return 1;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    Harness h;
    ToyFourCycleFamily fam;

    // Criteria 1 and 2 share one exhaustive sweep: k = 2..6, the gather
    // detector, all 2^(2k) input pairs (5456 protocol runs).
    bool answers_ok = true;
    std::size_t pairs_swept = 0;

    h.criterion(1, "transcript payload <= 2*b*|S|*T on the exhaustive k=2..6 sweep, under 2 min",
                [&] {
                    const auto start = Clock::now();
                    bool bound_ok = true;
                    const AlgorithmSpec gather = alg_four_cycle_gather();
                    for (std::size_t k = 2; k <= 6; ++k) {
                        const std::size_t n = 2 * k + 2;
                        ExtractedProtocol proto = extract_protocol(gather, fam, n, 0, 1000 + k);
                        const std::size_t cut = proto.cut_edges().size();
                        for (const BitString& x0 : all_inputs(k))
                            for (const BitString& x1 : all_inputs(k)) {
                                ++pairs_swept;
                                const ProtocolRun r = run_protocol(proto, x0, x1);
                                if (!verify_theorem_bound(r.transcript, proto.bandwidth(), cut,
                                                          r.rounds))
                                    bound_ok = false;
                                const bool f = fam.boolean_function(n, x0, x1);
                                const bool pi =
                                    predicate_four_cycle(merge_to_graph(fam.build(n, x0, x1)));
                                if (r.answer != f || f != pi) answers_ok = false;
                            }
                    }
                    const double secs = std::chrono::duration_cast<std::chrono::duration<double>>(
                                            Clock::now() - start)
                                            .count();
                    return bound_ok && pairs_swept == 5456 && secs < 120.0;
                });

    h.criterion(2, "protocol answer = f = brute-force predicate on every sweep pair",
                [&] { return answers_ok && pairs_swept == 5456; });

    h.criterion(3, "two-party vs monolithic bisimulation on 100 random (k, x0, x1, seed)", [&] {
        const AlgorithmSpec gather = alg_four_cycle_gather();
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 100; ++i) {
            const std::size_t k = 1 + (rng() % 4);
            BitString x0, x1;
            for (std::size_t j = 0; j < k; ++j) {
                x0.push_back(rng() & 1);
                x1.push_back(rng() & 1);
            }
            if (!equivalence_check(gather, fam, 2 * k + 2, x0, x1, rng())) return false;
        }
        return true;
    });

    h.criterion(4, "family checker: toy clean for k <= 4; both mutants trip their own check", [&] {
        for (std::size_t k = 1; k <= 4; ++k)
            if (!check_family(fam, 2 * k + 2).passed) return false;

        auto leak = make_mutant_side_leak_family();
        FamilyCheckReport lr = check_family(*leak, 8);
        if (lr.passed || lr.violations.empty()) return false;
        for (const auto& v : lr.violations)
            if (v.check != "side-independence") return false;

        auto cut = make_mutant_small_cut_family();
        FamilyCheckReport cr = check_family(*cut, 8);
        if (cr.passed || cr.violations.empty()) return false;
        for (const auto& v : cr.violations)
            if (v.check != "cut-size") return false;
        return true;
    });

    h.criterion(5, "size bound on paths n=8..128: supported T = 0, plain T >= n-1, under 30 s", [&] {
        const auto start = Clock::now();
        for (std::size_t n : {8u, 16u, 32u, 64u, 128u}) {
            const Graph p = make_path(n);
            RunConfig sup;
            sup.mode = ExecutionMode::SupportedActive;
            const RunResult rs = run(SupportedInstance::plain(p), alg_size_upper_bound(sup.mode), sup);
            if (rs.metrics.rounds != 0) return false;

            RunConfig plain;
            plain.mode = ExecutionMode::PlainCongest;
            const RunResult rp =
                run(SupportedInstance::plain(p), alg_size_upper_bound(plain.mode), plain);
            if (rp.metrics.rounds < static_cast<int>(n) - 1) return false;
            for (const auto& [v, out] : rp.outputs)
                if (out != OutputValue{static_cast<std::int64_t>(n)}) return false;
        }
        const double secs =
            std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
        return secs < 30.0;
    });

    h.criterion(6, "coloring: 50 random supports x 3 subgraphs, all proper in 0 rounds, 0 bits", [&] {
        std::mt19937_64 rng(77);
        RunConfig cfg;
        cfg.mode = ExecutionMode::SupportedActive;
        for (int i = 0; i < 50; ++i) {
            const std::size_t n = 4 + (rng() % 61);
            const Graph hgraph = make_random(n, 0.15, rng());
            for (int j = 0; j < 3; ++j) {
                const Graph g = random_subgraph(hgraph, 0.6, rng());
                const RunResult r = run(SupportedInstance::make(hgraph, g), alg_color_via_support(), cfg);
                if (r.metrics.rounds != 0 || r.metrics.bits_total != 0) return false;
                std::map<NodeId, long long> colors;
                std::set<long long> palette;
                for (const auto& [v, out] : r.outputs) {
                    colors[v] = out.at(0);
                    palette.insert(out.at(0));
                }
                if (!oracle::coloring_proper(g, colors)) return false;
                if (palette.size() > hgraph.max_degree() + 1) return false;
            }
        }
        return true;
    });

    h.criterion(7, "identifier sets: |I0| = |I1|, I1 covers G, I0 avoids G; supported T = 0", [&] {
        auto holds = [](const RunResult& r, const Graph& g, bool expect_zero_rounds) {
            if (expect_zero_rounds && r.metrics.rounds != 0) return false;
            for (const auto& [v, out] : r.outputs) {
                const IdentifierSetsOutput sets = decode_identifier_sets(out);
                if (sets.i0.size() != sets.i1.size()) return false;
                std::set<NodeId> i1(sets.i1.begin(), sets.i1.end());
                for (NodeId u : g.nodes())
                    if (!i1.count(u)) return false;
                for (NodeId u : sets.i0)
                    if (g.has_node(u)) return false;
            }
            return true;
        };

        RunConfig sup;
        sup.mode = ExecutionMode::SupportedActive;
        RunConfig pas;
        pas.mode = ExecutionMode::SupportedPassive;
        RunConfig plain;
        plain.mode = ExecutionMode::PlainCongest;

        // Spanning: path support, input misses one edge.
        const Graph h8 = make_path(8);
        Graph g8 = Graph::build(h8.nodes(), {EdgeKey(0, 1), EdgeKey(1, 2), EdgeKey(2, 3),
                                             EdgeKey(3, 4), EdgeKey(4, 5), EdgeKey(5, 6)});
        const SupportedInstance spanning = SupportedInstance::make(h8, g8);
        if (!holds(run(spanning, alg_identifier_sets(sup.mode), sup), g8, true)) return false;
        if (!holds(run(spanning, alg_identifier_sets(pas.mode), pas), g8, true)) return false;

        // Non-spanning: H has 8 nodes, G only 6.
        Graph g6 = Graph::build({0, 1, 2, 3, 4, 5}, {EdgeKey(0, 1), EdgeKey(1, 2), EdgeKey(2, 3),
                                                     EdgeKey(3, 4), EdgeKey(4, 5)});
        const SupportedInstance partial = SupportedInstance::make(h8, g6, false);
        if (!holds(run(partial, alg_identifier_sets(sup.mode), sup), g6, true)) return false;
        if (!holds(run(partial, alg_identifier_sets(pas.mode), pas), g6, true)) return false;

        // Plain gossip on paths and stars.
        for (std::size_t n : {8u, 16u}) {
            const Graph p = make_path(n);
            if (!holds(run(SupportedInstance::plain(p), alg_identifier_sets(plain.mode), plain), p,
                       false))
                return false;
            const Graph s = make_star(n);
            if (!holds(run(SupportedInstance::plain(s), alg_identifier_sets(plain.mode), plain), s,
                       false))
                return false;
        }
        return true;
    });

    h.criterion(8, "BFS/APSP/diameter vs oracles on 50 graphs; 4-cycle vs brute force on 50", [&] {
        std::mt19937_64 rng(88);
        for (int i = 0; i < 50; ++i) {
            const std::size_t n = 4 + (rng() % 21);  // up to 24
            const Graph g = make_random_connected(n, 0.2, rng());
            const int wide = id_bits(n) + std::max(1, ceil_log2(n));

            RunConfig plain;
            plain.mode = ExecutionMode::PlainCongest;
            plain.seed = rng();

            const NodeId root = g.nodes()[rng() % n];
            const RunResult rb = run(SupportedInstance::plain(g), alg_bfs(root), plain);
            const auto want_bfs = oracle::bfs(g, root);
            for (NodeId v : g.nodes())
                if (rb.outputs.at(v) != OutputValue{want_bfs.at(v)}) return false;

            RunConfig wide_cfg = plain;
            wide_cfg.bandwidth = wide;
            const RunResult ra = run(SupportedInstance::plain(g), alg_apsp_pipelined(), wide_cfg);
            const auto fw = oracle::floyd_warshall(g);
            for (NodeId v : g.nodes()) {
                const auto got = decode_distance_vector(ra.outputs.at(v));
                if (got.size() != n) return false;
                for (NodeId u : g.nodes())
                    if (got.at(u) != fw.at(v).at(u)) return false;
            }

            const RunResult rd = run(SupportedInstance::plain(g), alg_diameter(), wide_cfg);
            const long long diam = oracle::diameter(g);
            for (NodeId v : g.nodes())
                if (rd.outputs.at(v) != OutputValue{diam}) return false;
        }

        RunConfig active;
        active.mode = ExecutionMode::SupportedActive;
        for (int i = 0; i < 50; ++i) {
            const std::size_t n = 6 + (rng() % 27);  // up to 32
            const Graph g = make_random(n, 0.12, rng());
            std::vector<EdgeKey> hedges = g.edges();
            const NodeId hub = g.nodes().front();
            for (NodeId v : g.nodes())
                if (v != hub && !g.has_edge(EdgeKey(hub, v))) hedges.emplace_back(hub, v);
            const Graph hgraph = Graph::build(g.nodes(), std::move(hedges));
            const RunResult r = run(SupportedInstance::make(hgraph, g), alg_four_cycle_gather(), active);
            const bool want = predicate_four_cycle(g);
            for (const auto& [v, out] : r.outputs)
                if (out != OutputValue{want ? 1 : 0}) return false;
        }
        return true;
    });

    h.criterion(9, "enforcement: b+1 bits raise BandwidthExceeded; passive H-only send raises IllegalSend", [&] {
        AlgorithmSpec over;
        over.name = "over";
        over.init = [](const NodeContext&) { return std::make_unique<NodeState>(); };
        over.on_round = [](NodeState&, const NodeContext& ctx, int round, const Inbox&, Outbox& out) {
            if (round == 1 && ctx.degree > 0)
                out[0] = BitString::zeros(static_cast<std::size_t>(ctx.bandwidth) + 1);
        };
        over.output = [](const NodeState&) { return std::optional<OutputValue>{}; };
        bool caught_bandwidth = false;
        try {
            RunConfig cfg;
            run(SupportedInstance::plain(make_path(4)), over, cfg);
        } catch (const BandwidthExceeded&) {
            caught_bandwidth = true;
        } catch (...) {
            return false;
        }

        AlgorithmSpec hsend;
        hsend.name = "hsend";
        hsend.advice = advice_node_count();
        hsend.init = [](const NodeContext&) { return std::make_unique<NodeState>(); };
        hsend.on_round = [](NodeState&, const NodeContext& ctx, int round, const Inbox&, Outbox& out) {
            if (round == 1 && ctx.id == 0)
                for (std::size_t p = 0; p < ctx.degree; ++p)
                    if (ctx.neighbor_ids[p] == 2) out[static_cast<int>(p)] = BitString::from_uint(1, 1);
        };
        hsend.output = [](const NodeState&) { return std::optional<OutputValue>{}; };
        bool caught_illegal = false;
        try {
            const Graph hg = make_cycle(3);
            const Graph gg = Graph::build({0, 1, 2}, {EdgeKey(0, 1), EdgeKey(1, 2)});
            RunConfig cfg;
            cfg.mode = ExecutionMode::SupportedPassive;
            run(SupportedInstance::make(hg, gg), hsend, cfg);
        } catch (const IllegalSend&) {
            caught_illegal = true;
        } catch (...) {
            return false;
        }
        return caught_bandwidth && caught_illegal;
    });

    h.criterion(10, "determinism: one scenario run twice gives byte-identical report and trace", [&] {
        Scenario s;
        s.mode = ExecutionMode::PlainCongest;
        s.graph = "random_connected(16,0.25,9)";
        s.algorithm = "identifier-sets";
        s.seed = 4242;
        const std::string ta = "/tmp/acceptance_trace_a.txt";
        const std::string tb = "/tmp/acceptance_trace_b.txt";
        std::ostringstream oa, ob;
        if (cmd_simulate(s, oa, ta) != 0) return false;
        if (cmd_simulate(s, ob, tb) != 0) return false;
        const bool same = oa.str() == ob.str() && slurp(ta) == slurp(tb) && !slurp(ta).empty();
        std::remove(ta.c_str());
        std::remove(tb.c_str());
        return same;
    });

    h.criterion(11, "registry: exactly the seven published rows", [&] {
        std::ostringstream out;
        if (cmd_registry(out) != 0) return false;
        const auto rows = csv_parse(out.str());
        if (rows.size() != 8) return false;
        const std::vector<std::string> bounds = {"Ω(n^{1/2}/log n)", "Ω(n/log n)",
                                                 "Ω(n/(log n)^2)",   "Ω(n/(log n)^3)",
                                                 "Ω(n^{2-1/k}/(k log n))", "Ω(n^2/(log n)^2)",
                                                 "Ω(n^2)"};
        for (std::size_t i = 0; i < 7; ++i)
            if (rows[i + 1][1] != bounds[i]) return false;
        return rows[7][2] == "det. only";
    });

    h.criterion(12, "CC utilities: DISJ fooling sets certify k bits; trivial protocol exact", [&] {
        auto disj = [](const BitString& a, const BitString& b) {
            return !oracle::intersects(a, b);
        };
        for (std::size_t k = 1; k <= 4; ++k) {
            FoolingSetCertificate cert;
            cert.k = k;
            cert.f = disj;
            for (const BitString& x : all_inputs(k)) {
                BitString comp;
                for (std::size_t i = 0; i < k; ++i) comp.push_back(!x[i]);
                cert.pairs.emplace_back(x, comp);
            }
            if (!check_fooling_set(cert)) return false;
            if (fooling_set_certified_bits(cert) != k) return false;

            TrivialUpperBoundProtocol proto(disj, k);
            for (const BitString& x0 : all_inputs(k))
                for (const BitString& x1 : all_inputs(k)) {
                    const ProtocolRun r = run_protocol(proto, x0, x1);
                    if (r.answer != disj(x0, x1)) return false;
                    if (r.transcript.payload_bits_total() != k) return false;
                }
        }
        return true;
    });

    return h.finish();
}
