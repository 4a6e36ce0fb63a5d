#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "congestsim/bits.hpp"
#include "congestsim/errors.hpp"

namespace congest {

using NodeId = std::uint32_t;
using Weight = std::uint64_t;

// Canonical undirected edge: u < v always.
struct EdgeKey {
    NodeId u;
    NodeId v;

    EdgeKey() : u(0), v(0) {}
    EdgeKey(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const EdgeKey&) const = default;
};

// Identifier width in bits for a run with size parameter n: 2*ceil(log2 n),
// each factor clamped to at least 1 so n = 1, 2 stay usable. An identifier
// always fits in one default-bandwidth message.
inline int id_bits(std::uint64_t n) {
    int half = ceil_log2(n);
    if (half < 1) half = 1;
    return 2 * half;
}

// Undirected graph with unique integer node identifiers and optional
// non-negative integer edge weights. Nodes and edges are kept sorted so
// iteration order (and therefore every simulation built on top) is
// deterministic. Immutable after construction.
class Graph {
public:
    Graph() = default;

    // Nodes and edges may be given in any order; duplicates among nodes are
    // ignored, duplicate or self-loop edges are errors.
    static Graph build(std::vector<NodeId> nodes, std::vector<EdgeKey> edges);
    static Graph build_weighted(std::vector<NodeId> nodes, std::vector<EdgeKey> edges,
                                std::vector<Weight> weights);

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<EdgeKey>& edges() const { return edges_; }
    bool weighted() const { return weights_.has_value(); }
    const std::vector<Weight>& weights() const { return *weights_; }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(NodeId v) const;
    bool has_edge(EdgeKey e) const;
    std::optional<Weight> weight_of(EdgeKey e) const;

    // Sorted ascending; empty for isolated nodes.
    const std::vector<NodeId>& neighbors(NodeId v) const;

    std::size_t degree(NodeId v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;

    bool operator==(const Graph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_ && weights_ == other.weights_;
    }

private:
    std::vector<NodeId> nodes_;                  // sorted
    std::vector<EdgeKey> edges_;                 // sorted, canonical
    std::optional<std::vector<Weight>> weights_; // aligned with edges_
    std::map<NodeId, std::vector<NodeId>> adj_;  // sorted neighbor lists
};

// A support topology H together with the input graph G <= H. G inherits
// the identifiers of H: shared vertices are the same NodeId values.
struct SupportedInstance {
    Graph support;  // H
    Graph input;    // G
    bool spanning = true;

    // Validates E(G) subset of E(H), V(G) subset of V(H) (equality when
    // spanning) and weight agreement on shared edges.
    static SupportedInstance make(Graph support, Graph input, bool spanning = true);

    // Convenience for plain-CONGEST style runs: H = G.
    static SupportedInstance plain(Graph g);
};

// A two-sided instance in the shape used by the lower-bound machinery:
// disjoint sides v0/v1 with internal edges e0/e1 joined by the cut,
// remembering the inputs it was built from.
struct PartitionedInstance {
    std::vector<NodeId> v0;
    std::vector<NodeId> v1;
    std::vector<EdgeKey> e0;
    std::vector<EdgeKey> e1;
    std::vector<EdgeKey> cut;
    std::size_t n = 0;  // |v0| + |v1|
    BitString x0;
    BitString x1;
};

// True iff g's nodes, edges and (where both carry them) weights are subsets
// of h's. Pure predicate; never throws on well-formed graphs.
bool validate_subgraph(const Graph& g, const Graph& h);

// Flattens a partitioned instance into the graph (v0 u v1, e0 u e1 u cut).
// Throws OverlapError if the sides intersect.
Graph merge_to_graph(const PartitionedInstance& p);

// Edge-list text format:
//   first line "n m t" with t in {u, w} (unweighted / weighted),
//   then m lines "u v" or "u v w".
// Full-line '#' comments and blank lines are skipped. The node set is the
// mentioned endpoints plus, if fewer than n, the smallest unmentioned ids
// from [0, n-1] (isolated nodes). serialize_graph refuses graphs whose
// isolated nodes cannot be reconstructed by that rule.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace congest
