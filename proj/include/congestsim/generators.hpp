#pragma once

#include <cstdint>
#include <string>

#include "congestsim/graph.hpp"

namespace congest {

// Deterministic graph generators with node ids 0..n-1.
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_star(std::size_t n);   // node 0 is the center
Graph make_clique(std::size_t n);

// G(n, p) with a seeded generator; same arguments always yield the same graph.
Graph make_random(std::size_t n, double p, std::uint64_t seed);

// G(n, p) plus a random spanning tree, so the result is connected.
Graph make_random_connected(std::size_t n, double p, std::uint64_t seed);

// Uniformly drops each edge of g with probability (1 - keep_p); nodes are kept.
Graph random_subgraph(const Graph& g, double keep_p, std::uint64_t seed);

// Parses "path(8)", "random(16,0.3,7)", ... ; throws ConfigError on unknown names.
Graph make_generated(const std::string& expr);

// Host-side BFS utilities (sequential, shared by reports and checks).
// Distances from root in g; -1 for unreachable nodes. Order matches g.nodes().
std::vector<long long> bfs_distances(const Graph& g, NodeId root);

// Hop diameter of g; -1 if g is disconnected or empty.
long long graph_diameter(const Graph& g);

}  // namespace congest
