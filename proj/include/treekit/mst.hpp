#pragma once

#include <numeric>

#include "core.hpp"
#include "shortest_paths.hpp"

namespace treekit {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Kruskal over edges ordered by (w, u, v); the (u, v) tie order realizes the
// global rule of preferring the lexicographically smaller edge list among
// equal-cost trees.
inline std::vector<Edge> mst_edges(const WeightedGraph& g) {
    std::vector<Edge> order = g.edges();
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    UnionFind uf(g.vertex_count());
    std::vector<Edge> tree;
    for (const Edge& e : order)
        if (uf.unite(e.u, e.v)) tree.push_back(e);
    std::sort(tree.begin(), tree.end());
    return tree;
}

// Minimum spanning tree of a connected graph. Disconnected input raises an
// infeasibility error naming the component sizes.
inline KTreeSolution mst(const WeightedGraph& g) {
    if (g.vertex_count() == 0) throw ArgumentError("mst: empty graph");
    auto comps = g.components();
    if (comps.size() > 1) {
        std::string sizes;
        for (auto& c : comps) {
            if (!sizes.empty()) sizes += ", ";
            sizes += std::to_string(c.size());
        }
        throw InfeasibleError("mst: graph is disconnected (component sizes " + sizes + ")");
    }
    std::vector<int> vs(g.vertex_count());
    std::iota(vs.begin(), vs.end(), 0);
    return make_solution(g, std::move(vs), mst_edges(g), "mst");
}

// Spanning forest: one tree per component.
inline std::vector<KTreeSolution> mst_forest(const WeightedGraph& g) {
    std::vector<Edge> tree = mst_edges(g);
    std::vector<KTreeSolution> out;
    for (auto& comp : g.components()) {
        std::vector<Edge> mine;
        for (const Edge& e : tree)
            if (std::binary_search(comp.begin(), comp.end(), e.u)) mine.push_back(e);
        out.push_back(make_solution(g, comp, std::move(mine), "mst"));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metric closure on a vertex subset: the complete graph whose edge weights
// are shortest-path distances, plus witness paths back in g.
// ---------------------------------------------------------------------------

struct MetricClosure {
    WeightedGraph graph;             // complete on originals.size() vertices
    std::vector<int> originals;      // closure id -> original id
    std::vector<std::vector<int>> parent;  // parent[i] = sssp parents from originals[i]

    // Expands closure edge (a, b) to the witness path in the source graph,
    // as original vertex ids from originals[a] to originals[b].
    std::vector<int> path(int a, int b) const {
        std::vector<int> p;
        int v = originals[b];
        while (v != -1) {
            p.push_back(v);
            if (v == originals[a]) break;
            v = parent[a][v];
        }
        std::reverse(p.begin(), p.end());
        return p;
    }
};

inline MetricClosure metric_closure(const WeightedGraph& g, std::vector<int> subset) {
    if (subset.empty()) {
        subset.resize(g.vertex_count());
        std::iota(subset.begin(), subset.end(), 0);
    }
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (int v : subset)
        if (v < 0 || v >= g.vertex_count()) throw ArgumentError("metric_closure: vertex out of range");

    MetricClosure mc;
    mc.originals = subset;
    const int m = static_cast<int>(subset.size());
    std::vector<Edge> closure_edges;
    mc.parent.resize(m);
    std::vector<std::vector<double>> dist(m);
    for (int i = 0; i < m; ++i) {
        auto r = sssp(g, subset[i]);
        mc.parent[i] = std::move(r.parent);
        dist[i] = std::move(r.dist);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            double d = dist[i][subset[j]];
            if (std::isinf(d))
                throw InfeasibleError("metric_closure: subset is not mutually connected");
            closure_edges.emplace_back(i, j, d);
        }
    mc.graph = WeightedGraph(m, std::move(closure_edges));
    return mc;
}

}  // namespace treekit
