#pragma once

#include <memory>
#include <string>
#include <vector>

#include "congestsim/bits.hpp"
#include "congestsim/graph.hpp"

namespace congest {

// One side of a partitioned instance: the node set and internal edges that
// depend only on that player's input.
struct FamilySide {
    std::vector<NodeId> nodes;
    std::vector<EdgeKey> edges;

    bool operator==(const FamilySide&) const = default;
};

// A parameterized family of two-sided graphs: each instance splits into
// sides whose structure depends on one player's input each, joined by a cut
// of at least min_cut_size(n) edges, with a graph predicate mirroring a
// Boolean function on the input pair. The cut is fixed per (family, n).
class LowerBoundFamily {
public:
    virtual ~LowerBoundFamily() = default;

    virtual std::string name() const = 0;
    virtual bool valid_n(std::size_t n) const = 0;
    virtual std::size_t input_bits(std::size_t n) const = 0;   // k(n)
    virtual std::size_t min_cut_size(std::size_t n) const = 0; // C(n)

    // f(n, x0, x1); throws LengthMismatch unless |x0| = |x1| = k(n).
    virtual bool boolean_function(std::size_t n, const BitString& x0, const BitString& x1) const = 0;

    // The graph predicate the family mirrors.
    virtual bool predicate(const Graph& g) const = 0;

    virtual PartitionedInstance build(std::size_t n, const BitString& x0, const BitString& x1) const = 0;

    // Side i as a function of (i, n, x_i) alone.
    virtual FamilySide build_side(int side, std::size_t n, const BitString& xi) const = 0;

    // The fixed cut, canonical edge order.
    virtual std::vector<EdgeKey> cut(std::size_t n) const = 0;

    // Union of all family members at this n.
    virtual Graph support(std::size_t n) const = 0;

    // 0 if v lies on side 0, 1 on side 1; input-independent.
    virtual int side_of(std::size_t n, NodeId v) const = 0;
};

// Minimal concrete family used to exercise the protocol-extraction
// machinery end to end. Parameter k, n = 2k + 2, node ids a = 0,
// u_j = j, b = k+1, w_j = k+1+j (j in 1..k):
//   E0 = { (a, u_j) : x0[j] = 1 },  E1 = { (b, w_j) : x1[j] = 1 },
//   cut = { (u_j, w_j) : j } + { (a, b) }        (input-independent),
// f = 1 iff some index j has x0[j] = x1[j] = 1, and the predicate is
// "contains a 4-cycle": the only candidate 4-cycles are a-u_j-w_j-b-a.
// The cut is large (k + 1), so the family certifies no strong bound; its
// job is validating the reduction harness on small instances.
class ToyFourCycleFamily : public LowerBoundFamily {
public:
    std::string name() const override { return "toy-four-cycle"; }
    bool valid_n(std::size_t n) const override { return n >= 4 && n % 2 == 0; }
    std::size_t input_bits(std::size_t n) const override { return (n - 2) / 2; }
    std::size_t min_cut_size(std::size_t n) const override { return input_bits(n) + 1; }
    bool boolean_function(std::size_t n, const BitString& x0, const BitString& x1) const override;
    bool predicate(const Graph& g) const override;
    PartitionedInstance build(std::size_t n, const BitString& x0, const BitString& x1) const override;
    FamilySide build_side(int side, std::size_t n, const BitString& xi) const override;
    std::vector<EdgeKey> cut(std::size_t n) const override;
    Graph support(std::size_t n) const override;
    int side_of(std::size_t n, NodeId v) const override;
};

// Builds a toy instance directly from the player inputs (n = 2k + 2).
PartitionedInstance build_toy_instance(std::size_t k, const BitString& x0, const BitString& x1);

// Closed-form union of all 2^(2k) toy instances.
Graph toy_support(std::size_t k);

// Brute-force 4-cycle test over node 4-tuples; the independent oracle for
// the family predicate and the distributed detector. Desk scale only.
bool predicate_four_cycle(const Graph& g);

// Deliberately broken families for validating the checker: one leaks the
// other player's input into side 0 (without disturbing anything else), one
// declares a minimum cut size larger than it builds.
std::unique_ptr<LowerBoundFamily> make_mutant_side_leak_family();
std::unique_ptr<LowerBoundFamily> make_mutant_small_cut_family();

// Family registry for the command-line tools.
const LowerBoundFamily* find_family(const std::string& name);
std::vector<std::string> family_names();

// Consistency checker for the family conditions. Violations are report
// entries, never exceptions.
struct FamilyCheckViolation {
    std::string check;   // "predicate", "side-independence", "cut-size", "support", "shape"
    BitString x0;
    BitString x1;
    std::string detail;
};

struct FamilyCheckReport {
    std::size_t n = 0;
    std::size_t pairs_checked = 0;
    std::vector<FamilyCheckViolation> violations;
    bool passed = false;
};

struct FamilyCheckOptions {
    bool exhaustive = true;
    std::size_t samples = 0;      // used when !exhaustive
    std::uint64_t seed = 1;
};

FamilyCheckReport check_family(const LowerBoundFamily& fam, std::size_t n,
                               const FamilyCheckOptions& opts = {});

// The published lower bounds that transfer to the supported setting,
// recorded as data: seven rows of (problem, bound, qualifier, source).
struct RegistryEntry {
    std::string problem;
    std::string bound;
    std::string approximation;
    std::string source;
};

const std::vector<RegistryEntry>& lower_bound_registry();

// Case- and punctuation-insensitive substring match over problem and bound.
std::vector<RegistryEntry> registry_lookup(const std::string& pattern);

}  // namespace congest
