#pragma once

#include <map>
#include <queue>

#include "core.hpp"
#include "mst.hpp"

namespace treekit {

// 2*sqrt(k) kMST approximation: greedy cluster merging by cheapest
// inter-cluster edge, with a shortest-path collect phase forked whenever at
// most ceil(sqrt(k)) clusters can cover k vertices.

struct ClusterState {
    std::vector<int> cluster_of;              // vertex -> cluster id (min member id)
    std::map<int, std::vector<int>> members;  // cluster id -> sorted vertices
    std::map<int, std::vector<Edge>> trees;   // cluster id -> spanning tree of the cluster
    int iteration = 1;

    static ClusterState singletons(int n) {
        ClusterState s;
        s.cluster_of.resize(n);
        for (int v = 0; v < n; ++v) {
            s.cluster_of[v] = v;
            s.members[v] = {v};
            s.trees[v] = {};
        }
        return s;
    }

    int cluster_count() const { return static_cast<int>(members.size()); }
    int size_of(int cid) const { return static_cast<int>(members.at(cid).size()); }
    int max_cluster_size() const {
        int m = 0;
        for (auto& [id, vs] : members) m = std::max(m, static_cast<int>(vs.size()));
        return m;
    }
};

// One merge of the two clusters joined by the globally cheapest inter-cluster
// edge (ties by endpoint pair). Returns the merging edge, or nothing when the
// remaining clusters are mutually disconnected.
inline std::optional<Edge> merge_step(ClusterState& state, const WeightedGraph& g) {
    std::optional<Edge> pick;
    for (const Edge& e : g.edges()) {
        if (state.cluster_of[e.u] == state.cluster_of[e.v]) continue;
        if (!pick || e.w < pick->w || (e.w == pick->w && (e.u < pick->u || (e.u == pick->u && e.v < pick->v))))
            pick = e;
    }
    if (!pick) return std::nullopt;

    int a = state.cluster_of[pick->u], b = state.cluster_of[pick->v];
    int keep = std::min(a, b), drop = std::max(a, b);
    auto& mk = state.members[keep];
    auto& md = state.members[drop];
    for (int v : md) state.cluster_of[v] = keep;
    mk.insert(mk.end(), md.begin(), md.end());
    std::sort(mk.begin(), mk.end());
    auto& tk = state.trees[keep];
    auto& td = state.trees[drop];
    tk.insert(tk.end(), td.begin(), td.end());
    tk.push_back(*pick);
    std::sort(tk.begin(), tk.end());
    state.members.erase(drop);
    state.trees.erase(drop);
    state.iteration++;
    return pick;
}

struct CollectOutcome {
    int root_cluster = -1;
    double radius = 0.0;  // d_C of the chosen root
    KTreeSolution solution;
};

inline int collect_cluster_budget(int k) {
    return static_cast<int>(std::ceil(std::sqrt(static_cast<double>(k))));
}

// Removes the leaf with the heaviest incident edge (ties: larger vertex id)
// until exactly k vertices remain.
inline void prune_tree(std::vector<int>& vertices, std::vector<Edge>& edges, int k) {
    if (static_cast<int>(vertices.size()) < k)
        throw ArgumentError("prune_to_size: tree has fewer than k vertices");
    while (static_cast<int>(vertices.size()) > k) {
        std::map<int, std::pair<int, double>> touch;  // vertex -> (degree, incident weight)
        for (const Edge& e : edges) {
            auto& a = touch[e.u];
            a.first++;
            a.second = e.w;
            auto& b = touch[e.v];
            b.first++;
            b.second = e.w;
        }
        int leaf = -1;
        double leaf_w = -1.0;
        for (int v : vertices) {
            auto it = touch.find(v);
            if (it != touch.end() && it->second.first != 1) continue;
            double w = it == touch.end() ? 0.0 : it->second.second;
            if (w > leaf_w || (w == leaf_w && v > leaf)) {
                leaf = v;
                leaf_w = w;
            }
        }
        vertices.erase(std::find(vertices.begin(), vertices.end(), leaf));
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].u == leaf || edges[i].v == leaf) {
                edges.erase(edges.begin() + i);
                break;
            }
    }
}

inline KTreeSolution prune_to_size(const WeightedGraph& g, std::vector<int> vertices,
                                   std::vector<Edge> edges, int k, std::string tag = "pruned") {
    prune_tree(vertices, edges, k);
    return make_solution(g, std::move(vertices), std::move(edges), std::move(tag));
}

// Collect phase over the current clusters. Absent unless (i) at most
// ceil(sqrt(k)) clusters can sum to k and (ii) every cluster is smaller
// than k.
inline std::optional<CollectOutcome> collect_phase(const ClusterState& state,
                                                   const WeightedGraph& g, int k) {
    const int s_budget = collect_cluster_budget(k);

    std::vector<int> ids;
    std::vector<int> sizes;
    for (auto& [id, vs] : state.members) {
        ids.push_back(id);
        sizes.push_back(static_cast<int>(vs.size()));
        if (static_cast<int>(vs.size()) >= k) return std::nullopt;  // (ii)
    }
    {
        std::vector<int> desc = sizes;
        std::sort(desc.rbegin(), desc.rend());
        long long sum = 0;
        int jstar = 0;
        for (int sz : desc) {
            sum += sz;
            ++jstar;
            if (sum >= k) break;
        }
        if (sum < k || jstar > s_budget) return std::nullopt;  // (i)
    }

    const int m = static_cast<int>(ids.size());
    std::vector<int> index_of(g.vertex_count(), -1);
    std::map<int, int> idx;
    for (int i = 0; i < m; ++i) idx[ids[i]] = i;

    // Auxiliary cluster graph: cheapest concrete edge per cluster pair.
    std::map<std::pair<int, int>, Edge> aux;
    for (const Edge& e : g.edges()) {
        int a = idx.at(state.cluster_of[e.u]);
        int b = idx.at(state.cluster_of[e.v]);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        auto it = aux.find({a, b});
        if (it == aux.end() || e.w < it->second.w ||
            (e.w == it->second.w && Edge(e.u, e.v, e.w) < it->second))
            aux[{a, b}] = e;
    }
    std::vector<std::vector<std::pair<int, double>>> aadj(m);
    for (auto& [ab, e] : aux) {
        aadj[ab.first].push_back({ab.second, e.w});
        aadj[ab.second].push_back({ab.first, e.w});
    }

    int best_root = -1;
    double best_dc = kInf;
    std::vector<double> best_dist;
    std::vector<int> best_parent;
    for (int root = 0; root < m; ++root) {
        std::vector<double> dist(m, kInf);
        std::vector<int> parent(m, -1);
        dist[root] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0.0, root});
        std::vector<char> done(m, 0);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[v]) continue;
            done[v] = 1;
            for (auto [u, w] : aadj[v])
                if (dist[v] + w < dist[u]) {
                    dist[u] = dist[v] + w;
                    parent[u] = v;
                    pq.push({dist[u], u});
                }
        }
        // Least radius whose s_budget largest clusters cover k vertices.
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (dist[a] != dist[b]) return dist[a] < dist[b];
            return ids[a] < ids[b];
        });
        std::vector<int> pool;
        double dc = kInf;
        for (size_t i = 0; i < order.size();) {
            double r = dist[order[i]];
            if (std::isinf(r)) break;
            size_t j = i;
            while (j < order.size() && dist[order[j]] == r) pool.push_back(sizes[order[j++]]);
            std::vector<int> top = pool;
            std::sort(top.rbegin(), top.rend());
            long long sum = 0;
            for (int t = 0; t < std::min<int>(s_budget, top.size()); ++t) sum += top[t];
            if (sum >= k) {
                dc = r;
                break;
            }
            i = j;
        }
        // Roots iterate in ascending cluster id, so the first minimum wins ties.
        if (!std::isinf(dc) && (best_root < 0 || dc < best_dc)) {
            best_dc = dc;
            best_root = root;
            best_dist = dist;
            best_parent = parent;
        }
    }
    if (best_root < 0) return std::nullopt;

    // Greedily pick the largest clusters within the radius until k vertices
    // are covered, then join each to the root along the shortest-path tree.
    std::vector<int> in_radius;
    for (int i = 0; i < m; ++i)
        if (best_dist[i] <= best_dc) in_radius.push_back(i);
    std::sort(in_radius.begin(), in_radius.end(), [&](int a, int b) {
        if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
        return ids[a] < ids[b];
    });
    std::vector<int> chosen;
    long long covered = 0;
    for (int c : in_radius) {
        chosen.push_back(c);
        covered += sizes[c];
        if (covered >= k) break;
    }

    std::vector<char> cluster_in(m, 0);
    std::vector<Edge> edges;
    auto add_cluster = [&](int c) {
        if (cluster_in[c]) return;
        cluster_in[c] = 1;
        const auto& t = state.trees.at(ids[c]);
        edges.insert(edges.end(), t.begin(), t.end());
    };
    add_cluster(best_root);
    std::vector<char> aux_edge_in(m, 0);  // keyed by child cluster on the SP tree
    for (int c : chosen) {
        int v = c;
        while (v != best_root) {
            add_cluster(v);
            if (!aux_edge_in[v]) {
                aux_edge_in[v] = 1;
                int p = best_parent[v];
                int lo = std::min(v, p), hi = std::max(v, p);
                edges.push_back(aux.at({lo, hi}));
            }
            v = best_parent[v];
        }
    }
    std::vector<int> vertices;
    for (int c = 0; c < m; ++c)
        if (cluster_in[c]) {
            const auto& vs = state.members.at(ids[c]);
            vertices.insert(vertices.end(), vs.begin(), vs.end());
        }
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());

    CollectOutcome oc;
    oc.root_cluster = ids[best_root];
    oc.radius = best_dc;
    oc.solution = prune_to_size(g, std::move(vertices), std::move(edges), k, "approx");
    return oc;
}

namespace detail {

inline KTreeSolution merge_collect_connected(const WeightedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k == 1) return make_solution(g, {0}, {}, "approx");

    ClusterState state = ClusterState::singletons(n);
    std::vector<KTreeSolution> candidates;
    while (state.max_cluster_size() < k) {
        auto merged = merge_step(state, g);
        if (!merged) throw ValidationError("merge_collect: stalled on a connected graph");
        if (state.max_cluster_size() >= k) break;
        if (auto oc = collect_phase(state, g, k)) candidates.push_back(oc->solution);
    }
    for (auto& [id, vs] : state.members) {
        if (static_cast<int>(vs.size()) >= k) {
            candidates.push_back(prune_to_size(g, vs, state.trees.at(id), k, "approx"));
            break;
        }
    }
    KTreeSolution best = candidates.front();
    for (auto& c : candidates)
        if (solution_less(c, best)) best = c;
    return best;
}

}  // namespace detail

// Tree on exactly k vertices with cost at most 2*sqrt(k) times the optimum.
// Disconnected graphs are solved per component of size >= k.
inline KTreeSolution merge_collect(const WeightedGraph& g, int k) {
    if (k < 1) throw ArgumentError("merge_collect: k must be positive");
    if (g.vertex_count() == 0) throw ArgumentError("merge_collect: empty graph");
    auto comps = g.components();
    size_t largest = 0;
    for (auto& c : comps) largest = std::max(largest, c.size());
    if (static_cast<int>(largest) < k)
        throw InfeasibleError("infeasible: component size " + std::to_string(largest) +
                              " < k (k = " + std::to_string(k) + ")");
    std::optional<KTreeSolution> best;
    for (auto& comp : comps) {
        if (static_cast<int>(comp.size()) < k) continue;
        WeightedGraph sub = g.induced(comp);
        KTreeSolution local = detail::merge_collect_connected(sub, k);
        std::vector<int> vs;
        std::vector<Edge> es;
        for (int v : local.vertices) vs.push_back(comp[v]);
        for (const Edge& e : local.edges) es.emplace_back(comp[e.u], comp[e.v], e.w);
        KTreeSolution mapped = make_solution(g, std::move(vs), std::move(es), "approx");
        if (!best || solution_less(mapped, *best)) best = std::move(mapped);
    }
    return *best;
}

// k-Steiner wrapper: solve on the terminal metric closure, expand closure
// edges to witness paths, re-extract a spanning tree and drop non-terminal
// leaves.
inline KTreeSolution k_steiner(const WeightedGraph& g, std::vector<int> terminals, int k) {
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    if (k < 1 || k > static_cast<int>(terminals.size()))
        throw ArgumentError("k_steiner: need 1 <= k <= |terminals|");
    MetricClosure mc = metric_closure(g, terminals);
    KTreeSolution closure_sol = merge_collect(mc.graph, k);

    std::vector<Edge> expanded;
    for (const Edge& ce : closure_sol.edges) {
        std::vector<int> p = mc.path(ce.u, ce.v);
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            double w = *g.weight_between(p[i], p[i + 1]);
            expanded.emplace_back(p[i], p[i + 1], w);
        }
    }
    if (expanded.empty()) {
        // k = 1 or a degenerate closure; a single terminal suffices.
        return make_solution(g, {terminals[closure_sol.vertices.front()]}, {}, "steiner");
    }
    std::sort(expanded.begin(), expanded.end());
    expanded.erase(std::unique(expanded.begin(), expanded.end(),
                               [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }),
                   expanded.end());

    // Spanning tree of the union subgraph.
    std::vector<Edge> order = expanded;
    std::sort(order.begin(), order.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::map<int, int> comp;
    for (const Edge& e : expanded) {
        comp.emplace(e.u, e.u);
        comp.emplace(e.v, e.v);
    }
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    std::vector<Edge> tree;
    for (const Edge& e : order) {
        int a = find(e.u), b = find(e.v);
        if (a == b) continue;
        comp[a] = b;
        tree.push_back(e);
    }
    std::vector<int> vertices;
    for (auto& [v, _] : comp) vertices.push_back(v);
    std::sort(vertices.begin(), vertices.end());

    // Drop non-terminal leaves until every leaf is a terminal.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<int, int> degree;
        for (const Edge& e : tree) {
            degree[e.u]++;
            degree[e.v]++;
        }
        for (int v : vertices) {
            if (degree[v] > 1) continue;
            if (std::binary_search(terminals.begin(), terminals.end(), v)) continue;
            vertices.erase(std::find(vertices.begin(), vertices.end(), v));
            for (size_t i = 0; i < tree.size(); ++i)
                if (tree[i].u == v || tree[i].v == v) {
                    tree.erase(tree.begin() + i);
                    break;
                }
            changed = true;
            break;
        }
    }
    std::sort(tree.begin(), tree.end());
    return make_solution(g, std::move(vertices), std::move(tree), "steiner");
}

}  // namespace treekit
