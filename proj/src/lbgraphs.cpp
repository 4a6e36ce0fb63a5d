#include "congestsim/lbgraphs.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace congest {

namespace {

void require_toy_k(std::size_t k) {
    if (k < 1) throw ConfigError("toy family needs k >= 1");
}

std::size_t toy_k_of(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw ConfigError("toy family needs even n >= 4");
    return (n - 2) / 2;
}

std::string bits_str(const BitString& b) { return b.to_string(); }

}  // namespace

PartitionedInstance build_toy_instance(std::size_t k, const BitString& x0, const BitString& x1) {
    require_toy_k(k);
    if (x0.size() != x1.size())
        throw LengthMismatch("player inputs differ in length: " + std::to_string(x0.size()) +
                             " vs " + std::to_string(x1.size()));
    if (x0.size() != k)
        throw LengthMismatch("inputs have length " + std::to_string(x0.size()) + ", expected k = " +
                             std::to_string(k));

    const NodeId a = 0;
    const NodeId b = static_cast<NodeId>(k + 1);
    PartitionedInstance p;
    p.n = 2 * k + 2;
    p.x0 = x0;
    p.x1 = x1;

    p.v0.push_back(a);
    for (std::size_t j = 1; j <= k; ++j) p.v0.push_back(static_cast<NodeId>(j));
    p.v1.push_back(b);
    for (std::size_t j = 1; j <= k; ++j) p.v1.push_back(static_cast<NodeId>(k + 1 + j));

    for (std::size_t j = 1; j <= k; ++j) {
        if (x0[j - 1]) p.e0.emplace_back(a, static_cast<NodeId>(j));
        if (x1[j - 1]) p.e1.emplace_back(b, static_cast<NodeId>(k + 1 + j));
    }
    for (std::size_t j = 1; j <= k; ++j)
        p.cut.emplace_back(static_cast<NodeId>(j), static_cast<NodeId>(k + 1 + j));
    p.cut.emplace_back(a, b);
    std::sort(p.cut.begin(), p.cut.end());
    return p;
}

Graph toy_support(std::size_t k) {
    require_toy_k(k);
    const NodeId a = 0;
    const NodeId b = static_cast<NodeId>(k + 1);
    std::vector<NodeId> nodes;
    for (std::size_t v = 0; v < 2 * k + 2; ++v) nodes.push_back(static_cast<NodeId>(v));
    std::vector<EdgeKey> edges;
    for (std::size_t j = 1; j <= k; ++j) {
        edges.emplace_back(a, static_cast<NodeId>(j));
        edges.emplace_back(b, static_cast<NodeId>(k + 1 + j));
        edges.emplace_back(static_cast<NodeId>(j), static_cast<NodeId>(k + 1 + j));
    }
    edges.emplace_back(a, b);
    return Graph::build(std::move(nodes), std::move(edges));
}

bool predicate_four_cycle(const Graph& g) {
    const std::vector<NodeId>& vs = g.nodes();
    const std::size_t n = vs.size();
    // Distinct p, q, r, s with edges pq, qr, rs, sp. Fix p < q and p < s to
    // prune symmetric rotations/reflections; still plain brute force.
    for (std::size_t pi = 0; pi < n; ++pi)
        for (std::size_t qi = pi + 1; qi < n; ++qi) {
            if (!g.has_edge(EdgeKey(vs[pi], vs[qi]))) continue;
            for (std::size_t si = pi + 1; si < n; ++si) {
                if (si == qi || !g.has_edge(EdgeKey(vs[pi], vs[si]))) continue;
                for (std::size_t ri = 0; ri < n; ++ri) {
                    if (ri == pi || ri == qi || ri == si) continue;
                    if (g.has_edge(EdgeKey(vs[qi], vs[ri])) && g.has_edge(EdgeKey(vs[ri], vs[si])))
                        return true;
                }
            }
        }
    return false;
}

bool ToyFourCycleFamily::boolean_function(std::size_t n, const BitString& x0,
                                          const BitString& x1) const {
    const std::size_t k = toy_k_of(n);
    if (x0.size() != k || x1.size() != k)
        throw LengthMismatch("inputs must have length k = " + std::to_string(k));
    for (std::size_t j = 0; j < k; ++j)
        if (x0[j] && x1[j]) return true;
    return false;
}

bool ToyFourCycleFamily::predicate(const Graph& g) const { return predicate_four_cycle(g); }

PartitionedInstance ToyFourCycleFamily::build(std::size_t n, const BitString& x0,
                                              const BitString& x1) const {
    return build_toy_instance(toy_k_of(n), x0, x1);
}

FamilySide ToyFourCycleFamily::build_side(int side, std::size_t n, const BitString& xi) const {
    const std::size_t k = toy_k_of(n);
    if (xi.size() != k) throw LengthMismatch("input must have length k = " + std::to_string(k));
    FamilySide s;
    if (side == 0) {
        const NodeId a = 0;
        s.nodes.push_back(a);
        for (std::size_t j = 1; j <= k; ++j) s.nodes.push_back(static_cast<NodeId>(j));
        for (std::size_t j = 1; j <= k; ++j)
            if (xi[j - 1]) s.edges.emplace_back(a, static_cast<NodeId>(j));
    } else {
        const NodeId b = static_cast<NodeId>(k + 1);
        s.nodes.push_back(b);
        for (std::size_t j = 1; j <= k; ++j) s.nodes.push_back(static_cast<NodeId>(k + 1 + j));
        for (std::size_t j = 1; j <= k; ++j)
            if (xi[j - 1]) s.edges.emplace_back(b, static_cast<NodeId>(k + 1 + j));
    }
    std::sort(s.nodes.begin(), s.nodes.end());
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

std::vector<EdgeKey> ToyFourCycleFamily::cut(std::size_t n) const {
    const std::size_t k = toy_k_of(n);
    std::vector<EdgeKey> cut;
    for (std::size_t j = 1; j <= k; ++j)
        cut.emplace_back(static_cast<NodeId>(j), static_cast<NodeId>(k + 1 + j));
    cut.emplace_back(NodeId{0}, static_cast<NodeId>(k + 1));
    std::sort(cut.begin(), cut.end());
    return cut;
}

Graph ToyFourCycleFamily::support(std::size_t n) const { return toy_support(toy_k_of(n)); }

int ToyFourCycleFamily::side_of(std::size_t n, NodeId v) const {
    const std::size_t k = toy_k_of(n);
    if (v >= 2 * k + 2) throw ConfigError("node " + std::to_string(v) + " outside the family");
    return v <= k ? 0 : 1;
}

namespace {

// Same construction as the toy family, but side 0 gains the extra internal
// edge (u_1, u_2) whenever x1[0] = 1. The edge creates no 4-cycle, so the
// predicate still mirrors f; only side independence breaks.
class MutantSideLeakFamily : public ToyFourCycleFamily {
public:
    std::string name() const override { return "mutant-side-leak"; }

    PartitionedInstance build(std::size_t n, const BitString& x0,
                              const BitString& x1) const override {
        PartitionedInstance p = ToyFourCycleFamily::build(n, x0, x1);
        if (input_bits(n) >= 2 && x1[0]) {
            p.e0.emplace_back(NodeId{1}, NodeId{2});
            std::sort(p.e0.begin(), p.e0.end());
        }
        return p;
    }

    Graph support(std::size_t n) const override {
        Graph base = ToyFourCycleFamily::support(n);
        if (input_bits(n) < 2) return base;
        std::vector<EdgeKey> edges = base.edges();
        edges.emplace_back(NodeId{1}, NodeId{2});
        return Graph::build(base.nodes(), std::move(edges));
    }
};

// Identical graphs to the toy family, but the declared minimum cut size is
// one larger than the cut it actually builds.
class MutantSmallCutFamily : public ToyFourCycleFamily {
public:
    std::string name() const override { return "mutant-small-cut"; }
    std::size_t min_cut_size(std::size_t n) const override { return input_bits(n) + 2; }
};

const ToyFourCycleFamily g_toy_family;
const MutantSideLeakFamily g_mutant_leak;
const MutantSmallCutFamily g_mutant_cut;

BitString nth_bitstring(std::uint64_t value, std::size_t k) {
    BitString b;
    for (std::size_t i = 0; i < k; ++i) b.push_back((value >> (k - 1 - i)) & 1u);
    return b;
}

}  // namespace

std::unique_ptr<LowerBoundFamily> make_mutant_side_leak_family() {
    return std::make_unique<MutantSideLeakFamily>();
}

std::unique_ptr<LowerBoundFamily> make_mutant_small_cut_family() {
    return std::make_unique<MutantSmallCutFamily>();
}

const LowerBoundFamily* find_family(const std::string& name) {
    if (name == g_toy_family.name() || name == "toy") return &g_toy_family;
    if (name == g_mutant_leak.name()) return &g_mutant_leak;
    if (name == g_mutant_cut.name()) return &g_mutant_cut;
    return nullptr;
}

std::vector<std::string> family_names() {
    return {g_toy_family.name(), g_mutant_leak.name(), g_mutant_cut.name()};
}

FamilyCheckReport check_family(const LowerBoundFamily& fam, std::size_t n,
                               const FamilyCheckOptions& opts) {
    FamilyCheckReport report;
    report.n = n;
    if (!fam.valid_n(n)) {
        report.violations.push_back({"shape", {}, {}, "n is not valid for this family"});
        return report;
    }

    const std::size_t k = fam.input_bits(n);
    std::vector<std::pair<BitString, BitString>> pairs;
    if (opts.exhaustive) {
        if (2 * k >= 32) throw ConfigError("exhaustive check infeasible for k = " + std::to_string(k));
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b)
                pairs.emplace_back(nth_bitstring(a, k), nth_bitstring(b, k));
    } else {
        std::mt19937_64 rng(mix_seed(opts.seed, 0xfa));
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << k) - 1);
        for (std::size_t i = 0; i < opts.samples; ++i)
            pairs.emplace_back(nth_bitstring(pick(rng), k), nth_bitstring(pick(rng), k));
    }

    const Graph support = fam.support(n);
    const std::size_t cut_min = fam.min_cut_size(n);

    auto violate = [&](const std::string& check, const BitString& x0, const BitString& x1,
                       const std::string& detail) {
        report.violations.push_back({check, x0, x1, detail});
    };

    for (const auto& [x0, x1] : pairs) {
        ++report.pairs_checked;
        PartitionedInstance p = fam.build(n, x0, x1);

        // Shape: disjoint sides covering n nodes, edges on the right sides.
        std::set<NodeId> s0(p.v0.begin(), p.v0.end());
        std::set<NodeId> s1(p.v1.begin(), p.v1.end());
        bool shape_ok = true;
        for (NodeId v : p.v1)
            if (s0.count(v)) shape_ok = false;
        if (s0.size() + s1.size() != p.n) shape_ok = false;
        for (EdgeKey e : p.e0)
            if (!s0.count(e.u) || !s0.count(e.v)) shape_ok = false;
        for (EdgeKey e : p.e1)
            if (!s1.count(e.u) || !s1.count(e.v)) shape_ok = false;
        for (EdgeKey e : p.cut)
            if (s0.count(e.u) == s0.count(e.v)) shape_ok = false;
        if (!shape_ok) {
            violate("shape", x0, x1, "sides overlap or edges sit on the wrong side");
            continue;
        }

        Graph merged = merge_to_graph(p);
        const bool f = fam.boolean_function(n, x0, x1);
        const bool pi = fam.predicate(merged);
        if (f != pi)
            violate("predicate", x0, x1,
                    std::string("predicate = ") + (pi ? "1" : "0") + " but f = " + (f ? "1" : "0"));

        if (p.cut.size() < cut_min)
            violate("cut-size", x0, x1,
                    "|cut| = " + std::to_string(p.cut.size()) + " < C(n) = " + std::to_string(cut_min));

        if (!validate_subgraph(merged, support))
            violate("support", x0, x1, "instance is not a subgraph of the family support");

        // Side independence: each side of the full build must equal the
        // side built from that player's input alone.
        for (int side = 0; side < 2; ++side) {
            FamilySide expect = fam.build_side(side, n, side == 0 ? x0 : x1);
            FamilySide got;
            got.nodes = side == 0 ? p.v0 : p.v1;
            got.edges = side == 0 ? p.e0 : p.e1;
            std::sort(got.nodes.begin(), got.nodes.end());
            std::sort(got.edges.begin(), got.edges.end());
            if (!(got == expect))
                violate("side-independence", x0, x1,
                        "side " + std::to_string(side) + " of build(n, x0, x1) differs from build_side(" +
                            std::to_string(side) + ", n, x" + std::to_string(side) + ") [x0=" +
                            bits_str(x0) + " x1=" + bits_str(x1) + "]");
        }
    }

    report.passed = report.violations.empty();
    return report;
}

const std::vector<RegistryEntry>& lower_bound_registry() {
    static const std::vector<RegistryEntry> rows = {
        {"4-cycle, 2k-cycle, Girth", "Ω(n^{1/2}/log n)", "(2 - ε)-apx. for Girth",
         "drucker13; KR17; frischknecht2012"},
        {"(2k+1)-cycle, APSP, Diameter", "Ω(n/log n)", "(3/2 - ε)-apx. for Diameter",
         "drucker13; frischknecht2012"},
        {"Diameter on sparse graphs", "Ω(n/(log n)^2)", "", "AbboudCK16"},
        {"Diameter and radius, eccentricities, on sparse graphs", "Ω(n/(log n)^3)",
         "(3/2 - ε)-apx. for diameter and radius; (5/3 - ε)-apx. for eccentricities", "AbboudCK16"},
        {"Subgraph detection (for any k)", "Ω(n^{2-1/k}/(k log n))", "", "subgraph_spaa"},
        {"Min. vertex cover, max. independent set, chrom. number, weighted 8-cycle",
         "Ω(n^2/(log n)^2)", "(4/3 - ε)-apx. for chrom. number", "CHKP17"},
        {"Identical subgraphs", "Ω(n^2)", "det. only", "CHKP17"},
    };
    return rows;
}

namespace {

// Lowercase, drop '.', collapse whitespace runs; makes lookups forgiving.
std::string normalize(const std::string& s) {
    std::string out;
    bool last_space = true;
    for (char c : s) {
        if (c == '.') continue;
        if (c == ' ' || c == '\t') {
            if (!last_space) out.push_back(' ');
            last_space = true;
            continue;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        last_space = false;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

}  // namespace

std::vector<RegistryEntry> registry_lookup(const std::string& pattern) {
    const std::string needle = normalize(pattern);
    std::vector<RegistryEntry> hits;
    for (const RegistryEntry& row : lower_bound_registry()) {
        if (normalize(row.problem).find(needle) != std::string::npos ||
            normalize(row.bound).find(needle) != std::string::npos)
            hits.push_back(row);
    }
    return hits;
}

}  // namespace congest
