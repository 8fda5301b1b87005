#pragma once

#include <queue>

#include "core.hpp"

namespace treekit {

struct SsspResult {
    std::vector<double> dist;   // kInf for unreachable
    std::vector<int> parent;    // -1 for source/unreachable
    std::vector<int> pop_order; // vertices in finalization order; a parent is
                                // always finalized before its children
};

// Dijkstra with deterministic (dist, vertex) pops; parents follow the first
// strict improvement, so the shortest-path tree is unique given the input.
inline SsspResult sssp(const WeightedGraph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw ArgumentError("sssp: source out of range");

    SsspResult r;
    r.dist.assign(n, kInf);
    r.parent.assign(n, -1);
    r.dist[source] = 0.0;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, source});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v]) continue;
        done[v] = 1;
        r.pop_order.push_back(v);
        for (int ei : g.incident(v)) {
            const Edge& e = g.edge(ei);
            int u = g.other_end(ei, v);
            if (r.dist[v] + e.w < r.dist[u]) {
                r.dist[u] = r.dist[v] + e.w;
                r.parent[u] = v;
                pq.push({r.dist[u], u});
            }
        }
    }
    return r;
}

inline DistanceMatrix all_pairs_shortest_paths(const WeightedGraph& g) {
    const int n = g.vertex_count();
    DistanceMatrix m(n);
    for (int s = 0; s < n; ++s) {
        auto r = sssp(g, s);
        for (int v = 0; v < n; ++v) m.at(s, v) = r.dist[v];
    }
    return m;
}

}  // namespace treekit
