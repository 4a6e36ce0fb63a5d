#pragma once

#include <map>

#include "congestsim/engine.hpp"
#include "congestsim/graph.hpp"

namespace congest {

// Reference node algorithms. Output encodings (OutputValue):
//   bfs             [dist]                        (-1 unreachable)
//   apsp            [id0, d0, id1, d1, ...]       sorted by id
//   diameter        [diam]
//   four-cycle      [bit]
//   size bound      [count]
//   coloring        [color]
//   identifier sets [m, i0_0..i0_{m-1}, i1_0..i1_{m-1}], both halves sorted

// Distances from `root` over the input graph. Plain CONGEST; 2-bit messages
// (wave + parent claims + echo), distances inferred from arrival rounds.
// The root withholds its output until the completion echo returns, so the
// run spans the echo: T <= 2*ecc(root) + 1 on connected graphs.
AlgorithmSpec alg_bfs(NodeId root);

// Pipelined all-pairs distances: one (id, hop) pair per edge per round,
// smallest (hop, id) first. Needs b >= id_bits(n) + ceil(log2 n); rejects
// smaller bandwidth at init with ConfigError. Fixed 3n-round schedule.
AlgorithmSpec alg_apsp_pipelined();

// APSP followed by a max-eccentricity flood; fixed 4n-round schedule.
AlgorithmSpec alg_diameter();

// Decides "G contains a 4-cycle", all nodes agreeing. Supported active
// mode: G-adjacency lists travel over G-edges (degree first, then raw ids),
// each node checks for a pair of its G-neighbors sharing a second common
// neighbor, and the verdict is OR-aggregated over a BFS tree of H carried
// in the advice. H must be connected.
AlgorithmSpec alg_four_cycle_gather();

// Upper bound on the network size. Supported modes answer |V(H)| from
// advice in zero rounds; plain mode elects the minimum identifier with a
// propagation-feedback wave, counts the spanning tree and broadcasts the
// exact |V(G)| back, without ever reading n from the context for the answer.
AlgorithmSpec alg_size_upper_bound(ExecutionMode mode);

// Zero-round proper coloring of G from a greedy coloring of H computed in
// preprocessing; valid on every subgraph, at most max_degree(H)+1 colors.
AlgorithmSpec alg_color_via_support();

// Two identifier sets per node: I1 contains every identifier of G, I0 is
// equally many identifiers absent from G. Supported modes answer from the
// identifier list of H in zero rounds; plain mode gossips all identifiers
// of G (one per edge per round) and picks the fresh ones locally.
AlgorithmSpec alg_identifier_sets(ExecutionMode mode);

// Preprocessing functions (any function of H and the node identity).
AdviceFn advice_node_count();
AdviceFn advice_greedy_coloring();
AdviceFn advice_sorted_ids();
AdviceFn advice_bfs_tree();  // parent + children of a BFS tree rooted at the min id

// Greedy coloring of g in ascending id order; at most max_degree(g)+1 colors.
std::map<NodeId, int> greedy_coloring(const Graph& g);

struct IdentifierSetsOutput {
    std::vector<NodeId> i0;
    std::vector<NodeId> i1;
};
IdentifierSetsOutput decode_identifier_sets(const OutputValue& value);

// APSP output as a map.
std::map<NodeId, long long> decode_distance_vector(const OutputValue& value);

// Looks up algorithms by CLI name ("bfs(root=0)", "apsp", "diameter",
// "four-cycle", "size-upper-bound", "coloring", "identifier-sets").
AlgorithmSpec find_algorithm(const std::string& expr, ExecutionMode mode);
std::vector<std::string> algorithm_names();

}  // namespace congest
