#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treekit {

// ---------------------------------------------------------------------------
// Errors. The CLI maps ArgumentError/ValidationError to exit 1 and
// InfeasibleError/ApplicabilityError to exit 2; ResourceError means an oracle
// budget was exceeded and the caller may skip.
// ---------------------------------------------------------------------------

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApplicabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Numerics.
// ---------------------------------------------------------------------------

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool approx_eq(double a, double b, double rel_tol = 1e-9) {
    if (a == b) return true;
    return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Sum that refuses to mix infinity into a finite total by accident.
inline double checked_add(double a, double b) {
    if (std::isinf(a) || std::isinf(b))
        throw ValidationError("checked_add: adding an infinite cost");
    return a + b;
}

// Shortest decimal that parses back to the same double. Used for instance
// files so write/read round-trips exactly.
inline std::string format_exact(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

// Report formatting: 9 significant digits.
inline std::string format_report(double x) {
    char buf[64];
    int n = std::snprintf(buf, sizeof(buf), "%.9g", x);
    return std::string(buf, buf + n);
}

// ---------------------------------------------------------------------------
// WeightedGraph: simple undirected graph, nonnegative finite weights,
// immutable after construction.
// ---------------------------------------------------------------------------

struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;

    Edge() = default;
    Edge(int u_, int v_, double w_) : u(std::min(u_, v_)), v(std::max(u_, v_)), w(w_) {}

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.v != b.v) return a.v < b.v;
        return a.w < b.w;
    }
};

// Canonical edge-list comparison used by every deterministic tie-break:
// among equal-cost candidates, prefer the lexicographically smaller sorted
// edge list (then the smaller vertex list).
inline bool edge_list_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](const Edge& x, const Edge& y) {
            if (x.u != y.u) return x.u < y.u;
            return x.v < y.v;
        });
}

struct GraphOptions {
    bool keep_min_parallel = false;  // keep the lighter of a duplicate pair instead of rejecting
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(int vertex_count, std::vector<Edge> edges, GraphOptions opts = {})
        : n_(vertex_count) {
        if (vertex_count < 0) throw ArgumentError("vertex_count must be nonnegative");
        for (auto& e : edges) {
            if (e.u < 0 || e.v >= n_) throw ArgumentError("edge endpoint out of range");
            if (e.u == e.v) throw ArgumentError("self-loops are not allowed");
            if (!(e.w >= 0.0) || !std::isfinite(e.w))
                throw ArgumentError("edge weights must be finite and nonnegative");
        }
        std::sort(edges.begin(), edges.end());
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            if (edges[i].u == edges[i + 1].u && edges[i].v == edges[i + 1].v) {
                if (!opts.keep_min_parallel)
                    throw ArgumentError("parallel edges are not allowed");
            }
        }
        if (opts.keep_min_parallel) {
            std::vector<Edge> dedup;
            for (auto& e : edges) {
                if (!dedup.empty() && dedup.back().u == e.u && dedup.back().v == e.v)
                    continue;  // sorted by (u,v,w): first occurrence is the lightest
                dedup.push_back(e);
            }
            edges.swap(dedup);
        }
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
            adj_[edges_[i].u].push_back(i);
            adj_[edges_[i].v].push_back(i);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[i]; }

    // Edge indices incident to v, in ascending (u,v) order of the edges.
    const std::vector<int>& incident(int v) const { return adj_[v]; }

    int other_end(int edge_index, int v) const {
        const Edge& e = edges_[edge_index];
        return e.u == v ? e.v : e.u;
    }

    std::optional<double> weight_between(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge(u, v, -kInf));
        if (it != edges_.end() && it->u == u && it->v == v) return it->w;
        return std::nullopt;
    }

    // Connected components, each sorted ascending; components ordered by
    // smallest member.
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(n_, 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            std::vector<int> comp, stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int ei : adj_[v]) {
                    int u = other_end(ei, v);
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

    // Induced subgraph on `vertices` (sorted ascending). Vertex i of the
    // result is vertices[i].
    WeightedGraph induced(const std::vector<int>& vertices) const {
        std::vector<int> idx(n_, -1);
        for (int i = 0; i < static_cast<int>(vertices.size()); ++i) idx[vertices[i]] = i;
        std::vector<Edge> sub;
        for (const Edge& e : edges_)
            if (idx[e.u] >= 0 && idx[e.v] >= 0) sub.emplace_back(idx[e.u], idx[e.v], e.w);
        return WeightedGraph(static_cast<int>(vertices.size()), std::move(sub));
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;          // sorted by (u,v,w)
    std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// KTreeSolution: a tree on a vertex subset, with cost/diameter and a tag
// naming the solver that produced it.
// ---------------------------------------------------------------------------

struct KTreeSolution {
    std::vector<int> vertices;  // sorted ascending
    std::vector<Edge> edges;    // sorted by (u,v)
    double cost = 0.0;
    double diameter = 0.0;
    std::string solver_tag;
};

struct TreeMetrics {
    double cost = 0.0;
    double diameter = 0.0;
    std::vector<int> degree_sequence;  // sorted descending
};

// Validates that `edges` is a tree exactly on `vertices` and computes cost,
// weighted diameter and the degree sequence.
inline TreeMetrics tree_metrics(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
    const size_t n = vertices.size();
    if (n == 0) throw ValidationError("tree_metrics: empty vertex set");
    if (edges.size() != n - 1)
        throw ValidationError("tree_metrics: edge count must be vertex count - 1");

    std::vector<int> sorted_vs = vertices;
    std::sort(sorted_vs.begin(), sorted_vs.end());
    if (std::adjacent_find(sorted_vs.begin(), sorted_vs.end()) != sorted_vs.end())
        throw ValidationError("tree_metrics: duplicate vertex");
    auto local = [&](int v) {
        auto it = std::lower_bound(sorted_vs.begin(), sorted_vs.end(), v);
        if (it == sorted_vs.end() || *it != v)
            throw ValidationError("tree_metrics: edge endpoint not in vertex set");
        return static_cast<int>(it - sorted_vs.begin());
    };

    std::vector<std::vector<std::pair<int, double>>> adj(n);
    TreeMetrics m;
    for (const Edge& e : edges) {
        int a = local(e.u), b = local(e.v);
        adj[a].push_back({b, e.w});
        adj[b].push_back({a, e.w});
        m.cost = checked_add(m.cost, e.w);
    }

    // n-1 edges + connected => tree.
    std::vector<double> dist(n, -1.0);
    auto sweep = [&](int src) {
        std::fill(dist.begin(), dist.end(), -1.0);
        std::vector<int> stack{src};
        dist[src] = 0.0;
        int far = src;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
            for (auto [u, w] : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + w;
                    stack.push_back(u);
                }
        }
        return far;
    };
    int a = sweep(0);
    if (std::count(dist.begin(), dist.end(), -1.0) > 0)
        throw ValidationError("tree_metrics: edge set is not connected on the vertex set");
    int b = sweep(a);
    m.diameter = dist[b];

    for (size_t i = 0; i < n; ++i) m.degree_sequence.push_back(static_cast<int>(adj[i].size()));
    std::sort(m.degree_sequence.rbegin(), m.degree_sequence.rend());
    return m;
}

// Builds a validated KTreeSolution whose edges must exist in g with the same
// weight.
inline KTreeSolution make_solution(const WeightedGraph& g, std::vector<int> vertices,
                                   std::vector<Edge> edges, std::string tag) {
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) {
        auto w = g.weight_between(e.u, e.v);
        if (!w || !approx_eq(*w, e.w))
            throw ValidationError("solution edge missing from source graph");
    }
    TreeMetrics m = tree_metrics(vertices, edges);
    KTreeSolution s;
    s.vertices = std::move(vertices);
    s.edges = std::move(edges);
    s.cost = m.cost;
    s.diameter = m.diameter;
    s.solver_tag = std::move(tag);
    return s;
}

// Deterministic reduction over candidate solutions: (cost, edge list,
// vertex list).
inline bool solution_less(const KTreeSolution& a, const KTreeSolution& b) {
    if (!approx_eq(a.cost, b.cost)) return a.cost < b.cost;
    if (a.edges != b.edges) return edge_list_less(a.edges, b.edges);
    return a.vertices < b.vertices;
}

// ---------------------------------------------------------------------------
// DistanceMatrix: symmetric, zero diagonal; kInf marks unreachable pairs.
// ---------------------------------------------------------------------------

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n, double fill = kInf) : n_(n), d_(size_t(n) * n, fill) {
        for (int i = 0; i < n; ++i) at(i, i) = 0.0;
    }

    int size() const { return n_; }
    double& at(int i, int j) { return d_[size_t(i) * n_ + j]; }
    double at(int i, int j) const { return d_[size_t(i) * n_ + j]; }

    void set(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    void validate() const {
        for (int i = 0; i < n_; ++i) {
            if (at(i, i) != 0.0) throw ValidationError("DistanceMatrix: nonzero diagonal");
            for (int j = 0; j < n_; ++j) {
                if (at(i, j) != at(j, i)) throw ValidationError("DistanceMatrix: not symmetric");
                if (at(i, j) < 0.0) throw ValidationError("DistanceMatrix: negative entry");
            }
        }
    }

private:
    int n_ = 0;
    std::vector<double> d_;
};

}  // namespace treekit
