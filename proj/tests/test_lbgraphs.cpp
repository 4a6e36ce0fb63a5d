#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "congestsim/generators.hpp"
#include "congestsim/lbgraphs.hpp"
#include "oracles.hpp"

using namespace congest;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

std::vector<BitString> all_inputs(std::size_t k) {
    std::vector<BitString> out;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
        BitString b;
        for (std::size_t i = 0; i < k; ++i) b.push_back((v >> (k - 1 - i)) & 1);
        out.push_back(b);
    }
    return out;
}

}  // namespace

TEST_CASE("predicate_four_cycle on known graphs") {
    CHECK(predicate_four_cycle(make_cycle(4)));
    CHECK_FALSE(predicate_four_cycle(make_cycle(5)));
    CHECK(predicate_four_cycle(make_clique(4)));
    CHECK_FALSE(predicate_four_cycle(make_path(6)));
    CHECK_FALSE(predicate_four_cycle(make_star(6)));
}

TEST_CASE("toy instances: predicate matches the intersection function") {
    // Intersecting inputs create the 4-cycle a-u_j-w_j-b-a.
    PartitionedInstance hit = build_toy_instance(2, bits("01"), bits("01"));
    CHECK(predicate_four_cycle(merge_to_graph(hit)));

    PartitionedInstance miss = build_toy_instance(2, bits("10"), bits("01"));
    CHECK_FALSE(predicate_four_cycle(merge_to_graph(miss)));

    // An all-zero x0 leaves node a with only the (a, b) edge: never a 4-cycle.
    for (const BitString& x1 : all_inputs(3)) {
        PartitionedInstance p = build_toy_instance(3, bits("000"), x1);
        CHECK_FALSE(predicate_four_cycle(merge_to_graph(p)));
    }
}

TEST_CASE("toy instances: exhaustive predicate/f agreement up to k = 6") {
    ToyFourCycleFamily fam;
    for (std::size_t k = 1; k <= 6; ++k) {
        const std::size_t n = 2 * k + 2;
        for (const BitString& x0 : all_inputs(k))
            for (const BitString& x1 : all_inputs(k)) {
                const bool f = fam.boolean_function(n, x0, x1);
                CHECK(f == oracle::intersects(x0, x1));
                CHECK(predicate_four_cycle(merge_to_graph(fam.build(n, x0, x1))) == f);
            }
    }
}

TEST_CASE("toy family shape: ids, cut and sides") {
    ToyFourCycleFamily fam;
    PartitionedInstance p = build_toy_instance(2, bits("11"), bits("10"));
    CHECK(p.v0 == std::vector<NodeId>{0, 1, 2});
    CHECK(p.v1 == std::vector<NodeId>{3, 4, 5});
    CHECK(p.cut == std::vector<EdgeKey>{EdgeKey(0, 3), EdgeKey(1, 4), EdgeKey(2, 5)});
    CHECK(p.n == 6);

    CHECK(fam.side_of(6, 0) == 0);
    CHECK(fam.side_of(6, 2) == 0);
    CHECK(fam.side_of(6, 3) == 1);
    CHECK(fam.side_of(6, 5) == 1);

    CHECK_THROWS_AS(build_toy_instance(2, bits("1"), bits("11")), LengthMismatch);
    CHECK_THROWS_AS(build_toy_instance(2, bits("111"), bits("111")), LengthMismatch);
}

TEST_CASE("toy cut has size exactly k + 1 on every instance") {
    ToyFourCycleFamily fam;
    for (std::size_t k = 1; k <= 4; ++k)
        for (const BitString& x0 : all_inputs(k))
            for (const BitString& x1 : all_inputs(k)) {
                PartitionedInstance p = build_toy_instance(k, x0, x1);
                CHECK(p.cut.size() == k + 1);
                CHECK(p.cut.size() >= fam.min_cut_size(2 * k + 2));
            }
}

TEST_CASE("toy support: closed form and union property") {
    Graph s1 = toy_support(1);
    CHECK(s1.node_count() == 4);
    CHECK(s1.edges() == std::vector<EdgeKey>{EdgeKey(0, 1), EdgeKey(0, 2), EdgeKey(1, 3),
                                             EdgeKey(2, 3)});

    Graph s2 = toy_support(2);
    CHECK(s2.node_count() == 6);
    CHECK(s2.edge_count() == 7);

    // The closed form must equal the explicit union of all 2^(2k) instances.
    for (std::size_t k = 1; k <= 4; ++k) {
        std::set<EdgeKey> unioned;
        std::set<NodeId> nodes;
        for (const BitString& x0 : all_inputs(k))
            for (const BitString& x1 : all_inputs(k)) {
                Graph m = merge_to_graph(build_toy_instance(k, x0, x1));
                unioned.insert(m.edges().begin(), m.edges().end());
                nodes.insert(m.nodes().begin(), m.nodes().end());
            }
        Graph support = toy_support(k);
        CHECK(std::vector<EdgeKey>(unioned.begin(), unioned.end()) == support.edges());
        CHECK(std::vector<NodeId>(nodes.begin(), nodes.end()) == support.nodes());

        // And every instance is a subgraph of it.
        for (const BitString& x0 : all_inputs(k))
            for (const BitString& x1 : all_inputs(k))
                CHECK(validate_subgraph(merge_to_graph(build_toy_instance(k, x0, x1)), support));
    }
}

TEST_CASE("build_side is consistent with build") {
    ToyFourCycleFamily fam;
    const std::size_t k = 3, n = 8;
    for (const BitString& x0 : all_inputs(k))
        for (const BitString& x1 : all_inputs(k)) {
            PartitionedInstance p = fam.build(n, x0, x1);
            FamilySide s0 = fam.build_side(0, n, x0);
            FamilySide s1 = fam.build_side(1, n, x1);
            CHECK(p.v0 == s0.nodes);
            CHECK(p.e0 == s0.edges);
            CHECK(p.v1 == s1.nodes);
            CHECK(p.e1 == s1.edges);
        }
}

TEST_CASE("check_family: the toy family passes exhaustively up to k = 4") {
    ToyFourCycleFamily fam;
    for (std::size_t k = 1; k <= 4; ++k) {
        FamilyCheckReport report = check_family(fam, 2 * k + 2);
        CHECK(report.passed);
        CHECK(report.violations.empty());
        CHECK(report.pairs_checked == (std::size_t{1} << (2 * k)));
    }
}

TEST_CASE("check_family: the side-leak mutant fails exactly side independence") {
    auto fam = make_mutant_side_leak_family();
    FamilyCheckReport report = check_family(*fam, 8);  // k = 3
    CHECK_FALSE(report.passed);
    // Violations exactly when x1[0] = 1: half of the 64 pairs.
    CHECK(report.violations.size() == 32);
    for (const FamilyCheckViolation& v : report.violations) {
        CHECK(v.check == "side-independence");
        CHECK(v.x1[0] == true);
    }
}

TEST_CASE("check_family: the small-cut mutant fails exactly the cut size") {
    auto fam = make_mutant_small_cut_family();
    FamilyCheckReport report = check_family(*fam, 6);  // k = 2
    CHECK_FALSE(report.passed);
    CHECK(report.violations.size() == 16);  // every pair
    for (const FamilyCheckViolation& v : report.violations) CHECK(v.check == "cut-size");
}

TEST_CASE("check_family: sampled mode") {
    ToyFourCycleFamily fam;
    FamilyCheckOptions opts;
    opts.exhaustive = false;
    opts.samples = 20;
    FamilyCheckReport report = check_family(fam, 14, opts);  // k = 6
    CHECK(report.passed);
    CHECK(report.pairs_checked == 20);
}

TEST_CASE("registry: seven rows with the expected bounds") {
    const auto& rows = lower_bound_registry();
    CHECK(rows.size() == 7);

    auto four_cycle = registry_lookup("4-cycle");
    REQUIRE(four_cycle.size() == 1);
    CHECK(four_cycle[0].bound == "Ω(n^{1/2}/log n)");

    auto identical = registry_lookup("Identical subgraphs");
    REQUIRE(identical.size() == 1);
    CHECK(identical[0].bound == "Ω(n^2)");
    CHECK(identical[0].approximation == "det. only");

    auto mvc = registry_lookup("min vertex cover");
    REQUIRE(mvc.size() == 1);
    CHECK(mvc[0].bound == "Ω(n^2/(log n)^2)");

    CHECK(registry_lookup("nonexistent problem").empty());
    CHECK(registry_lookup("Ω(n/log n)").size() == 1);
}

TEST_CASE("family registry for the CLI") {
    CHECK(find_family("toy") != nullptr);
    CHECK(find_family("toy-four-cycle") != nullptr);
    CHECK(find_family("mutant-side-leak") != nullptr);
    CHECK(find_family("mutant-small-cut") != nullptr);
    CHECK(find_family("no-such-family") == nullptr);
    CHECK(family_names().size() == 3);
}
