#pragma once

// Test-only reference implementations, kept independent of the simulator
// code paths they are used to check.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "congestsim/graph.hpp"

namespace oracle {

using congest::EdgeKey;
using congest::Graph;
using congest::NodeId;

// Plain queue-based BFS, written against the adjacency relation only.
inline std::map<NodeId, long long> bfs(const Graph& g, NodeId root) {
    std::map<NodeId, long long> dist;
    for (NodeId v : g.nodes()) dist[v] = -1;
    dist[root] = 0;
    std::queue<NodeId> q;
    q.push(root);
    while (!q.empty()) {
        NodeId v = q.front();
        q.pop();
        for (NodeId u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}

// Floyd-Warshall over the node list; -1 encodes unreachable.
inline std::map<NodeId, std::map<NodeId, long long>> floyd_warshall(const Graph& g) {
    const std::vector<NodeId>& vs = g.nodes();
    const long long inf = 1ll << 40;
    std::map<NodeId, std::map<NodeId, long long>> d;
    for (NodeId a : vs)
        for (NodeId b : vs) d[a][b] = (a == b) ? 0 : inf;
    for (EdgeKey e : g.edges()) {
        d[e.u][e.v] = 1;
        d[e.v][e.u] = 1;
    }
    for (NodeId k : vs)
        for (NodeId i : vs)
            for (NodeId j : vs)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (NodeId a : vs)
        for (NodeId b : vs)
            if (d[a][b] >= inf) d[a][b] = -1;
    return d;
}

inline long long diameter(const Graph& g) {
    auto d = floyd_warshall(g);
    long long best = 0;
    for (const auto& [a, row] : d)
        for (const auto& [b, v] : row) {
            if (v < 0) return -1;
            best = std::max(best, v);
        }
    return best;
}

// Set intersection on bit strings: 1 iff some index carries 1 in both.
inline bool intersects(const congest::BitString& x0, const congest::BitString& x1) {
    for (std::size_t i = 0; i < x0.size(); ++i)
        if (x0[i] && x1[i]) return true;
    return false;
}

inline bool coloring_proper(const Graph& g, const std::map<NodeId, long long>& color) {
    for (EdgeKey e : g.edges())
        if (color.at(e.u) == color.at(e.v)) return false;
    return true;
}

}  // namespace oracle
