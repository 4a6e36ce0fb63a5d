#include "congestsim/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace congest {

namespace {

std::string edge_str(EdgeKey e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph Graph::build(std::vector<NodeId> nodes, std::vector<EdgeKey> edges) {
    Graph g;
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    g.nodes_ = std::move(nodes);

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeKey e = edges[i];
        if (e.u == e.v) throw SelfLoopError("self-loop at node " + std::to_string(e.u));
        if (i > 0 && edges[i - 1] == e) throw DuplicateEdgeError("duplicate edge " + edge_str(e));
        if (!std::binary_search(g.nodes_.begin(), g.nodes_.end(), e.u) ||
            !std::binary_search(g.nodes_.begin(), g.nodes_.end(), e.v))
            throw SimError("edge " + edge_str(e) + " has an endpoint outside the node set");
    }
    g.edges_ = std::move(edges);

    for (NodeId v : g.nodes_) g.adj_[v];  // ensure entry for isolated nodes
    for (EdgeKey e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

Graph Graph::build_weighted(std::vector<NodeId> nodes, std::vector<EdgeKey> edges,
                            std::vector<Weight> weights) {
    if (edges.size() != weights.size())
        throw SimError("weight list does not match edge list");

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

    std::vector<EdgeKey> es;
    std::vector<Weight> ws;
    es.reserve(edges.size());
    ws.reserve(edges.size());
    for (std::size_t i : order) {
        es.push_back(edges[i]);
        ws.push_back(weights[i]);
    }

    Graph g = build(std::move(nodes), es);
    g.weights_ = std::move(ws);
    return g;
}

bool Graph::has_node(NodeId v) const {
    return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

bool Graph::has_edge(EdgeKey e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<Weight> Graph::weight_of(EdgeKey e) const {
    if (!weights_) return std::nullopt;
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return (*weights_)[static_cast<std::size_t>(it - edges_.begin())];
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    static const std::vector<NodeId> empty;
    auto it = adj_.find(v);
    return it == adj_.end() ? empty : it->second;
}

std::size_t Graph::max_degree() const {
    std::size_t d = 0;
    for (const auto& [v, nb] : adj_) d = std::max(d, nb.size());
    return d;
}

SupportedInstance SupportedInstance::make(Graph support, Graph input, bool spanning) {
    if (!validate_subgraph(input, support))
        throw ConfigError("input graph is not a subgraph of the support");
    if (spanning && input.node_count() != support.node_count())
        throw ConfigError("spanning instance requires V(G) = V(H)");
    SupportedInstance inst;
    inst.support = std::move(support);
    inst.input = std::move(input);
    inst.spanning = spanning;
    return inst;
}

SupportedInstance SupportedInstance::plain(Graph g) {
    SupportedInstance inst;
    inst.support = g;
    inst.input = std::move(g);
    inst.spanning = true;
    return inst;
}

bool validate_subgraph(const Graph& g, const Graph& h) {
    for (NodeId v : g.nodes())
        if (!h.has_node(v)) return false;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeKey e = g.edges()[i];
        if (!h.has_edge(e)) return false;
        if (g.weighted() && h.weighted() && g.weights()[i] != *h.weight_of(e)) return false;
    }
    return true;
}

Graph merge_to_graph(const PartitionedInstance& p) {
    std::set<NodeId> side0(p.v0.begin(), p.v0.end());
    for (NodeId v : p.v1)
        if (side0.count(v))
            throw OverlapError("node " + std::to_string(v) + " appears on both sides");

    std::vector<NodeId> nodes = p.v0;
    nodes.insert(nodes.end(), p.v1.begin(), p.v1.end());
    std::vector<EdgeKey> edges = p.e0;
    edges.insert(edges.end(), p.e1.begin(), p.e1.end());
    edges.insert(edges.end(), p.cut.begin(), p.cut.end());
    return Graph::build(std::move(nodes), std::move(edges));
}

namespace {

// Node set implied by the format: mentioned endpoints plus the smallest
// unmentioned ids from [0, n-1] until the count reaches n.
std::vector<NodeId> implied_nodes(std::size_t n, const std::set<NodeId>& mentioned) {
    std::vector<NodeId> nodes(mentioned.begin(), mentioned.end());
    for (NodeId v = 0; nodes.size() < n && v < n; ++v)
        if (!mentioned.count(v)) nodes.push_back(v);
    return nodes;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw FormatError("missing header line", lineno + 1);

    std::istringstream hs(header);
    long long n = -1, m = -1;
    std::string t;
    if (!(hs >> n >> m >> t) || n < 0 || m < 0 || (t != "u" && t != "w"))
        throw FormatError("expected header \"n m t\" with t in {u, w}", lineno);
    std::string rest;
    if (hs >> rest) throw FormatError("trailing tokens after header", lineno);
    const bool weighted = (t == "w");

    std::vector<EdgeKey> edges;
    std::vector<Weight> weights;
    std::set<NodeId> mentioned;
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_content_line(el)) throw FormatError("expected " + std::to_string(m) + " edge lines", lineno + 1);
        std::istringstream es(el);
        long long u = -1, v = -1;
        if (!(es >> u >> v) || u < 0 || v < 0) throw FormatError("expected \"u v" + std::string(weighted ? " w" : "") + "\"", lineno);
        long long w = 0;
        if (weighted && (!(es >> w) || w < 0)) throw FormatError("expected weight after endpoints", lineno);
        std::string extra;
        if (es >> extra) throw FormatError("trailing tokens after edge", lineno);
        if (u == v) throw FormatError("self-loop at node " + std::to_string(u), lineno);
        EdgeKey e(static_cast<NodeId>(u), static_cast<NodeId>(v));
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            throw FormatError("duplicate edge " + edge_str(e), lineno);
        edges.push_back(e);
        if (weighted) weights.push_back(static_cast<Weight>(w));
        mentioned.insert(e.u);
        mentioned.insert(e.v);
    }
    std::string extra_line;
    if (next_content_line(extra_line)) throw FormatError("unexpected content after edge list", lineno);

    if (mentioned.size() > static_cast<std::size_t>(n))
        throw FormatError("more endpoint ids than the declared node count", 1);

    std::vector<NodeId> nodes = implied_nodes(static_cast<std::size_t>(n), mentioned);
    if (nodes.size() != static_cast<std::size_t>(n))
        throw FormatError("node count cannot be satisfied: ids [0, n) are exhausted", 1);

    return weighted ? Graph::build_weighted(std::move(nodes), std::move(edges), std::move(weights))
                    : Graph::build(std::move(nodes), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::set<NodeId> mentioned;
    for (EdgeKey e : g.edges()) {
        mentioned.insert(e.u);
        mentioned.insert(e.v);
    }
    std::vector<NodeId> implied = implied_nodes(g.node_count(), mentioned);
    std::sort(implied.begin(), implied.end());
    if (implied != g.nodes())
        throw SimError("graph is not representable in the edge-list format: "
                       "isolated nodes must be the smallest unmentioned ids below n");

    std::ostringstream out;
    out << g.node_count() << ' ' << g.edge_count() << ' ' << (g.weighted() ? 'w' : 'u') << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const EdgeKey e = g.edges()[i];
        out << e.u << ' ' << e.v;
        if (g.weighted()) out << ' ' << g.weights()[i];
        out << '\n';
    }
    return out.str();
}

}  // namespace congest
