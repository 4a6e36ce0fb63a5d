#include "congestsim/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace congest {

namespace {

std::vector<NodeId> iota_nodes(std::size_t n) {
    std::vector<NodeId> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<NodeId>(i);
    return nodes;
}

}  // namespace

Graph make_path(std::size_t n) {
    std::vector<EdgeKey> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph make_cycle(std::size_t n) {
    if (n < 3) throw ConfigError("cycle needs n >= 3");
    std::vector<EdgeKey> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph make_star(std::size_t n) {
    if (n < 1) throw ConfigError("star needs n >= 1");
    std::vector<EdgeKey> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(NodeId{0}, static_cast<NodeId>(i));
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph make_clique(std::size_t n) {
    std::vector<EdgeKey> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph make_random(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ConfigError("edge probability must be in [0, 1]");
    std::mt19937_64 rng(mix_seed(seed, 0xe5ce));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<EdgeKey> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < p) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph make_random_connected(std::size_t n, double p, std::uint64_t seed) {
    Graph base = make_random(n, p, seed);
    std::vector<EdgeKey> edges = base.edges();

    // Random spanning tree: attach each node to a random earlier one.
    std::mt19937_64 rng(mix_seed(seed, 0x7ee));
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        EdgeKey e(static_cast<NodeId>(pick(rng)), static_cast<NodeId>(i));
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
    return Graph::build(iota_nodes(n), std::move(edges));
}

Graph random_subgraph(const Graph& g, double keep_p, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0x5ab));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<EdgeKey> kept;
    for (EdgeKey e : g.edges())
        if (coin(rng) < keep_p) kept.push_back(e);
    return Graph::build(g.nodes(), std::move(kept));
}

Graph make_generated(const std::string& expr) {
    auto open = expr.find('(');
    if (open == std::string::npos || expr.back() != ')')
        throw ConfigError("bad generator expression: " + expr);
    const std::string name = expr.substr(0, open);
    std::string args = expr.substr(open + 1, expr.size() - open - 2);
    for (char& c : args)
        if (c == ',') c = ' ';
    std::istringstream as(args);

    if (name == "path" || name == "cycle" || name == "star" || name == "clique") {
        std::size_t n = 0;
        if (!(as >> n)) throw ConfigError("generator " + name + " expects (n)");
        if (name == "path") return make_path(n);
        if (name == "cycle") return make_cycle(n);
        if (name == "star") return make_star(n);
        return make_clique(n);
    }
    if (name == "random" || name == "random_connected") {
        std::size_t n = 0;
        double p = 0;
        std::uint64_t seed = 0;
        if (!(as >> n >> p >> seed)) throw ConfigError("generator " + name + " expects (n,p,seed)");
        return name == "random" ? make_random(n, p, seed) : make_random_connected(n, p, seed);
    }
    throw ConfigError("unknown generator: " + name);
}

std::vector<long long> bfs_distances(const Graph& g, NodeId root) {
    if (!g.has_node(root)) throw ConfigError("bfs root is not a node of the graph");
    std::map<NodeId, long long> dist;
    for (NodeId v : g.nodes()) dist[v] = -1;
    dist[root] = 0;
    std::deque<NodeId> queue{root};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (NodeId u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    std::vector<long long> out;
    out.reserve(g.node_count());
    for (NodeId v : g.nodes()) out.push_back(dist[v]);
    return out;
}

long long graph_diameter(const Graph& g) {
    if (g.node_count() == 0) return -1;
    long long diam = 0;
    for (NodeId v : g.nodes()) {
        for (long long d : bfs_distances(g, v)) {
            if (d < 0) return -1;
            diam = std::max(diam, d);
        }
    }
    return diam;
}

}  // namespace congest
