#pragma once

#include <functional>

#include "core.hpp"
#include "mst.hpp"
#include "short_trees.hpp"

namespace treekit {

// Brute-force references for the main solvers. Deliberately simple and
// structurally unrelated to the solver code paths: subset enumeration,
// deletion/contraction tree streams, direct path sums.

struct OracleBudget {
    int max_vertices = 18;
    long long max_subsets = 1LL << 20;
    long long max_trees = 500000;
    mutable bool exceeded = false;

    void blow(const char* what) const {
        exceeded = true;
        throw ResourceError(std::string("oracle budget exceeded: ") + what);
    }
};

struct OracleWitness {
    double value = kInf;
    std::vector<int> vertices;
    std::vector<Edge> edges;
    bool feasible() const { return std::isfinite(value); }
};

namespace detail {

inline bool mask_connected(const std::vector<uint32_t>& adj, uint32_t mask) {
    if (mask == 0) return false;
    uint32_t seed = mask & (~mask + 1);
    uint32_t seen = seed;
    uint32_t frontier = seed;
    while (frontier) {
        uint32_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & mask & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == mask;
}

// MST of the induced subgraph on `mask`, over edges pre-sorted by (w,u,v).
inline double mask_mst(const std::vector<Edge>& sorted_edges, uint32_t mask, int n,
                       std::vector<Edge>* out_edges) {
    static thread_local std::vector<int> parent;
    parent.assign(n, -1);
    auto find = [&](int v) {
        while (parent[v] >= 0) v = parent[v];
        return v;
    };
    double cost = 0.0;
    int joined = 0;
    int need = std::popcount(mask) - 1;
    if (out_edges) out_edges->clear();
    for (const Edge& e : sorted_edges) {
        if (joined == need) break;
        if (!((mask >> e.u) & 1) || !((mask >> e.v) & 1)) continue;
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        parent[a] = b;
        cost += e.w;
        ++joined;
        if (out_edges) out_edges->push_back(e);
    }
    return cost;
}

inline std::vector<Edge> sorted_by_weight(const WeightedGraph& g) {
    std::vector<Edge> es = g.edges();
    std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return es;
}

}  // namespace detail

// Best k-vertex tree for every k at once: min over connected k-subsets of the
// induced MST cost.
inline std::vector<OracleWitness> oracle_kmst_all_sizes(const WeightedGraph& g,
                                                        const OracleBudget& budget = {}) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices) budget.blow("oracle_kmst vertex count");
    if ((1LL << n) > budget.max_subsets) budget.blow("oracle_kmst subset count");
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    auto sorted = detail::sorted_by_weight(g);
    std::vector<OracleWitness> best(n + 1);
    std::vector<Edge> tree;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!detail::mask_connected(adj, mask)) continue;
        int k = std::popcount(mask);
        double cost = detail::mask_mst(sorted, mask, n, &tree);
        std::sort(tree.begin(), tree.end());
        auto& b = best[k];
        if (cost < b.value - 1e-15 ||
            (approx_eq(cost, b.value) && edge_list_less(tree, b.edges))) {
            b.value = cost;
            b.edges = tree;
            b.vertices.clear();
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) b.vertices.push_back(v);
        }
    }
    return best;
}

inline OracleWitness oracle_kmst(const WeightedGraph& g, int k,
                                 const OracleBudget& budget = {}) {
    if (k < 1 || k > g.vertex_count()) throw ArgumentError("oracle_kmst: bad k");
    auto all = oracle_kmst_all_sizes(g, budget);
    if (!all[k].feasible()) throw InfeasibleError("oracle_kmst: no connected k-subset");
    return all[k];
}

// Steiner flavor: min over connected subsets containing at least k terminals.
inline OracleWitness oracle_kmst_terminals(const WeightedGraph& g, const std::vector<int>& terminals,
                                           int k, const OracleBudget& budget = {}) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices) budget.blow("oracle_kmst vertex count");
    if ((1LL << n) > budget.max_subsets) budget.blow("oracle_kmst subset count");
    uint32_t tmask = 0;
    for (int t : terminals) tmask |= 1u << t;
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    auto sorted = detail::sorted_by_weight(g);
    OracleWitness best;
    std::vector<Edge> tree;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask & tmask) < k) continue;
        if (!detail::mask_connected(adj, mask)) continue;
        double cost = detail::mask_mst(sorted, mask, n, &tree);
        std::sort(tree.begin(), tree.end());
        if (cost < best.value - 1e-15 ||
            (approx_eq(cost, best.value) && edge_list_less(tree, best.edges))) {
            best.value = cost;
            best.edges = tree;
            best.vertices.clear();
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) best.vertices.push_back(v);
        }
    }
    if (!best.feasible()) throw InfeasibleError("oracle_kmst: terminals not coverable");
    return best;
}

// ---------------------------------------------------------------------------
// Spanning-tree enumeration by deletion/contraction with canonical (original
// edge id) ordering. Each spanning tree is visited exactly once, as its
// sorted list of edge indices into g.edges().
// ---------------------------------------------------------------------------

namespace detail {

struct MultiEdge {
    int a, b, id;
};

inline bool multigraph_connected(const std::vector<MultiEdge>& es, const std::vector<int>& live) {
    if (live.size() <= 1) return true;
    std::vector<int> parent(live.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    // live vertex labels are compacted to 0..live.size()-1 by the caller.
    int comps = static_cast<int>(live.size());
    for (const auto& e : es) {
        int x = find(e.a), y = find(e.b);
        if (x != y) {
            parent[x] = y;
            --comps;
        }
    }
    return comps == 1;
}

inline void enumerate_rec(std::vector<MultiEdge> es, int n_live, std::vector<int>& chosen,
                          long long& count, const OracleBudget& budget,
                          const std::function<void(const std::vector<int>&)>& emit) {
    if (n_live == 1) {
        if (++count > budget.max_trees) budget.blow("spanning tree count");
        std::vector<int> tree = chosen;
        std::sort(tree.begin(), tree.end());
        emit(tree);
        return;
    }
    if (static_cast<int>(es.size()) < n_live - 1) return;

    // Canonical branch edge: the edge with the smallest original id.
    size_t pick = 0;
    for (size_t i = 1; i < es.size(); ++i)
        if (es[i].id < es[pick].id) pick = i;
    MultiEdge e = es[pick];

    // Trees through e: contract its endpoints (self-loops vanish, parallel
    // edges stay distinct).
    {
        std::vector<MultiEdge> contracted;
        contracted.reserve(es.size() - 1);
        for (const auto& f : es) {
            int a = f.a == e.b ? e.a : f.a;
            int b = f.b == e.b ? e.a : f.b;
            if (a == b) continue;
            contracted.push_back({a, b, f.id});
        }
        chosen.push_back(e.id);
        enumerate_rec(std::move(contracted), n_live - 1, chosen, count, budget, emit);
        chosen.pop_back();
    }

    // Trees avoiding e: delete it if the rest still spans.
    {
        std::vector<MultiEdge> rest;
        rest.reserve(es.size() - 1);
        for (size_t i = 0; i < es.size(); ++i)
            if (i != pick) rest.push_back(es[i]);
        std::vector<int> labels;
        for (const auto& f : rest) {
            labels.push_back(f.a);
            labels.push_back(f.b);
        }
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (static_cast<int>(labels.size()) < n_live) return;  // someone got isolated
        std::vector<MultiEdge> compact = rest;
        for (auto& f : compact) {
            f.a = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), f.a) - labels.begin());
            f.b = static_cast<int>(std::lower_bound(labels.begin(), labels.end(), f.b) - labels.begin());
        }
        if (multigraph_connected(compact, labels))
            enumerate_rec(std::move(rest), n_live, chosen, count, budget, emit);
    }
}

}  // namespace detail

inline void for_each_spanning_tree(const WeightedGraph& g,
                                   const std::function<void(const std::vector<int>&)>& emit,
                                   const OracleBudget& budget = {}) {
    const int n = g.vertex_count();
    if (n == 0) return;
    std::vector<detail::MultiEdge> es;
    for (int i = 0; i < g.edge_count(); ++i) es.push_back({g.edge(i).u, g.edge(i).v, i});
    if (!g.connected()) return;
    std::vector<int> chosen;
    long long count = 0;
    detail::enumerate_rec(std::move(es), n, chosen, count, budget, emit);
}

inline std::vector<std::vector<int>> enumerate_spanning_trees(const WeightedGraph& g,
                                                              const OracleBudget& budget = {}) {
    std::vector<std::vector<int>> trees;
    for_each_spanning_tree(g, [&](const std::vector<int>& t) { trees.push_back(t); }, budget);
    return trees;
}

// Matrix-tree count for the internal cross-check: determinant of a Laplacian
// minor; exact in double at oracle scale.
inline double spanning_tree_count(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 1.0;
    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges()) {
        L[e.u][e.u] += 1;
        L[e.v][e.v] += 1;
        L[e.u][e.v] -= 1;
        L[e.v][e.u] -= 1;
    }
    int m = n - 1;
    std::vector<std::vector<double>> A(m, std::vector<double>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A[i][j] = L[i + 1][j + 1];
    double det = 1.0;
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
        if (A[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        for (int r = col + 1; r < m; ++r) {
            double f = A[r][col] / A[col][col];
            for (int c = col; c < m; ++c) A[r][c] -= f * A[col][c];
        }
    }
    return std::round(det);
}

// ---------------------------------------------------------------------------
// Minimum-diameter k-tree reference: every connected k-subset, every spanning
// tree of it, diameter by direct all-pairs path sums.
// ---------------------------------------------------------------------------

namespace detail {

// All-pairs distances inside a tree given as explicit edges; Floyd-Warshall,
// kept independent of tree_metrics on purpose.
inline double tree_diameter_brute(int n_local, const std::vector<Edge>& edges) {
    std::vector<std::vector<double>> d(n_local, std::vector<double>(n_local, kInf));
    for (int i = 0; i < n_local; ++i) d[i][i] = 0.0;
    for (const Edge& e : edges) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
        d[e.v][e.u] = d[e.u][e.v];
    }
    for (int m = 0; m < n_local; ++m)
        for (int i = 0; i < n_local; ++i)
            for (int j = 0; j < n_local; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
    double diam = 0.0;
    for (int i = 0; i < n_local; ++i)
        for (int j = 0; j < n_local; ++j) diam = std::max(diam, d[i][j]);
    return diam;
}

}  // namespace detail

inline OracleWitness oracle_min_diam_ktree(const WeightedGraph& g, int k,
                                           const OracleBudget& budget = {}) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw ArgumentError("oracle_min_diam_ktree: bad k");
    if (n > 10 || k > 8 || n > budget.max_vertices) budget.blow("oracle_min_diam_ktree size");
    std::vector<uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    OracleWitness best;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        if (!detail::mask_connected(adj, mask)) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        WeightedGraph sub = g.induced(vs);
        for_each_spanning_tree(
            sub,
            [&](const std::vector<int>& tree_ids) {
                std::vector<Edge> local, original;
                for (int id : tree_ids) {
                    local.push_back(sub.edge(id));
                    original.emplace_back(vs[sub.edge(id).u], vs[sub.edge(id).v], sub.edge(id).w);
                }
                double diam = detail::tree_diameter_brute(k, local);
                std::sort(original.begin(), original.end());
                if (diam < best.value - 1e-15 ||
                    (approx_eq(diam, best.value) && edge_list_less(original, best.edges))) {
                    best.value = diam;
                    best.edges = original;
                    best.vertices = vs;
                }
            },
            budget);
    }
    if (!best.feasible()) throw InfeasibleError("oracle_min_diam_ktree: no connected k-subset");
    return best;
}

// ---------------------------------------------------------------------------
// Labeled-tree stream on m >= 1 vertices (all spanning trees of K_m), used by
// the Hu-framework reference and the reduction-certificate checks.
// ---------------------------------------------------------------------------

inline void for_each_labeled_tree(int m, const std::function<void(const std::vector<Edge>&)>& emit,
                                  const OracleBudget& budget = {}) {
    if (m <= 0) return;
    if (m == 1) {
        emit({});
        return;
    }
    if (m == 2) {
        emit({Edge(0, 1, 1.0)});
        return;
    }
    long long total = 1;
    for (int i = 0; i < m - 2; ++i) {
        total *= m;
        if (total > budget.max_trees) budget.blow("labeled tree count");
    }
    std::vector<int> seq(m - 2, 0);
    std::vector<int> degree(m);
    std::vector<Edge> edges;
    for (long long it = 0; it < total; ++it) {
        long long x = it;
        for (int i = 0; i < m - 2; ++i) {
            seq[i] = static_cast<int>(x % m);
            x /= m;
        }
        std::fill(degree.begin(), degree.end(), 1);
        for (int s : seq) degree[s]++;
        edges.clear();
        std::vector<char> used(m, 0);
        for (int i = 0; i < m - 2; ++i) {
            int leaf = -1;
            for (int v = 0; v < m; ++v)
                if (degree[v] == 1 && !used[v]) {
                    leaf = v;
                    break;
                }
            edges.emplace_back(leaf, seq[i], 1.0);
            used[leaf] = 1;
            degree[seq[i]]--;
        }
        int a = -1, b = -1;
        for (int v = 0; v < m; ++v)
            if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
        edges.emplace_back(a, b, 1.0);
        emit(edges);
    }
}

// ---------------------------------------------------------------------------
// Hu-framework reference: every labeled spanning tree of the complete graph,
// costs recomputed here by direct path sums (independent of evaluate_hu).
// ---------------------------------------------------------------------------

enum class HuObjective { communication, diameter_cost };

struct HuOracleResult {
    double value = kInf;
    std::vector<Edge> edges;  // weights carry the d values
};

inline HuOracleResult oracle_hu_tree(const HuInstance& inst, HuObjective objective,
                                     const OracleBudget& budget = {}) {
    const int n = inst.n;
    if (n < 1) throw ArgumentError("oracle_hu_tree: empty instance");
    HuOracleResult best;
    std::vector<std::vector<double>> dist(n, std::vector<double>(n));
    for_each_labeled_tree(
        n,
        [&](const std::vector<Edge>& shape) {
            std::vector<std::vector<std::pair<int, double>>> adj(n);
            for (const Edge& e : shape) {
                double w = inst.d.at(e.u, e.v);
                adj[e.u].push_back({e.v, w});
                adj[e.v].push_back({e.u, w});
            }
            for (int s = 0; s < n; ++s) {
                auto& row = dist[s];
                std::fill(row.begin(), row.end(), -1.0);
                row[s] = 0.0;
                std::vector<int> stack{s};
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (auto [u, w] : adj[v])
                        if (row[u] < 0) {
                            row[u] = row[v] + w;
                            stack.push_back(u);
                        }
                }
            }
            double value = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    double c = inst.r.at(i, j) * dist[i][j];
                    if (objective == HuObjective::communication)
                        value += c;
                    else
                        value = std::max(value, c);
                }
            if (value < best.value - 1e-15) {
                best.value = value;
                best.edges.clear();
                for (const Edge& e : shape) best.edges.emplace_back(e.u, e.v, inst.d.at(e.u, e.v));
                std::sort(best.edges.begin(), best.edges.end());
            }
        },
        budget);
    return best;
}

}  // namespace treekit
