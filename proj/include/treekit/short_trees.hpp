#pragma once

#include <map>
#include <set>

#include "core.hpp"
#include "mst.hpp"
#include "shortest_paths.hpp"

namespace treekit {

// ---------------------------------------------------------------------------
// Minimum-diameter k-tree. Candidate centers are vertices (radius = k-th
// nearest distance) and edge interiors; an edge candidate pairs a ball around
// each endpoint so that the balls cover k vertices and the tree through the
// edge realizes diameter d^i + d^j + w. Pairs with |d^i - d^j| > w cannot put
// the path midpoint on the edge; they are either rebalanced or dominated by a
// vertex candidate, so they are not emitted.
// ---------------------------------------------------------------------------

inline double vertex_cover_radius(const SsspResult& from, int k) {
    if (static_cast<int>(from.pop_order.size()) < k) return kInf;
    return from.dist[from.pop_order[k - 1]];
}

// Least d^i + d^j + w over admissible ball pairs for one edge, including the
// two endpoint-centered cases. Equals the roof-sweep minimum for the edge.
inline double edge_cover_candidate(const WeightedGraph& g, const std::vector<SsspResult>& sp,
                                   const Edge& e, int k) {
    const int n = g.vertex_count();
    const auto& si = sp[e.u];
    const auto& sj = sp[e.v];
    double best = kInf;
    double rho_i = vertex_cover_radius(si, k);
    double rho_j = vertex_cover_radius(sj, k);
    best = std::min(best, 2.0 * rho_i);
    best = std::min(best, 2.0 * rho_j);

    std::vector<char> in_ball(n, 0);
    std::vector<double> comp_dj;
    int covered = 0;
    for (int idx = 0; idx < static_cast<int>(si.pop_order.size()); ++idx) {
        int v = si.pop_order[idx];
        in_ball[v] = 1;
        ++covered;
        double a = si.dist[v];
        if (idx + 1 < static_cast<int>(si.pop_order.size()) &&
            si.dist[si.pop_order[idx + 1]] == a)
            continue;  // extend the ball to the whole distance class
        int need = k - covered;
        double b_cover = 0.0;
        if (need > 0) {
            comp_dj.clear();
            for (int v2 = 0; v2 < n; ++v2)
                if (!in_ball[v2] && !std::isinf(sj.dist[v2])) comp_dj.push_back(sj.dist[v2]);
            if (static_cast<int>(comp_dj.size()) < need) continue;
            std::nth_element(comp_dj.begin(), comp_dj.begin() + (need - 1), comp_dj.end());
            b_cover = comp_dj[need - 1];
        }
        if (b_cover > a + e.w) continue;  // dominated by the vertex candidate at e.v
        double b_eff = std::max(b_cover, a - e.w);
        best = std::min(best, a + b_eff + e.w);
    }
    return best;
}

struct MinDiamKTree {
    KTreeSolution tree;
    double diameter = 0.0;  // reported optimal value
};

namespace diam_detail {

// Shortest-path tree truncated to the ball of the given radius, as
// parent-closed vertex set + child lists.
struct BallTree {
    std::vector<int> order;  // finalization order, all dist <= radius
    std::vector<char> in;
    std::vector<std::vector<int>> children;
};

inline BallTree ball_tree(const SsspResult& sp, double radius, int n) {
    BallTree t;
    t.in.assign(n, 0);
    t.children.assign(n, {});
    for (int v : sp.pop_order) {
        if (sp.dist[v] > radius) break;
        t.order.push_back(v);
        t.in[v] = 1;
        if (sp.parent[v] >= 0) t.children[sp.parent[v]].push_back(v);
    }
    return t;
}

inline void drop_subtree(BallTree& t, int v) {
    if (!t.in[v]) return;
    t.in[v] = 0;
    for (int c : t.children[v]) drop_subtree(t, c);
}

}  // namespace diam_detail

// The two truncated shortest-path trees around an edge's endpoints, peeled so
// that every covered vertex lives in exactly one of them: a shared vertex
// stays where it has the larger slack and its whole subtree on the losing
// side moves with it. The union of the two covers is preserved.
struct BallPartition {
    std::vector<char> in_i;
    std::vector<char> in_j;
};

inline BallPartition partition_two_balls(const WeightedGraph& g, const SsspResult& si,
                                         const SsspResult& sj, double radius_i, double radius_j) {
    const int n = g.vertex_count();
    auto ti = diam_detail::ball_tree(si, radius_i, n);
    auto tj = diam_detail::ball_tree(sj, radius_j, n);
    std::vector<int> shared;
    for (int v = 0; v < n; ++v)
        if (ti.in[v] && tj.in[v]) shared.push_back(v);
    std::sort(shared.begin(), shared.end(), [&](int x, int y) {
        if (sj.dist[x] != sj.dist[y]) return sj.dist[x] > sj.dist[y];
        return x < y;
    });
    for (int v : shared) {
        if (!(ti.in[v] && tj.in[v])) continue;
        double slack_i = radius_i - si.dist[v];
        double slack_j = radius_j - sj.dist[v];
        if (slack_i >= slack_j)
            diam_detail::drop_subtree(tj, v);
        else
            diam_detail::drop_subtree(ti, v);
    }
    return {std::move(ti.in), std::move(tj.in)};
}

inline MinDiamKTree min_diameter_ktree(const WeightedGraph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1) throw ArgumentError("min_diameter_ktree: k must be positive");
    if (n == 0) throw ArgumentError("min_diameter_ktree: empty graph");

    std::vector<SsspResult> sp(n);
    for (int v = 0; v < n; ++v) sp[v] = sssp(g, v);

    // Vertex candidates.
    int best_vertex = -1;
    double best_value = kInf;
    for (int v = 0; v < n; ++v) {
        double rho = vertex_cover_radius(sp[v], k);
        if (2.0 * rho < best_value) {
            best_value = 2.0 * rho;
            best_vertex = v;
        }
    }
    if (best_vertex < 0)
        throw InfeasibleError("min_diameter_ktree: no component holds k vertices");

    // Edge candidates (ball pairs); remember the realizing (a, b) radii.
    int best_edge = -1;
    double best_a = 0.0, best_b = 0.0;
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edge(ei);
        const auto& si = sp[e.u];
        const auto& sj = sp[e.v];
        std::vector<char> in_ball(n, 0);
        std::vector<double> comp_dj;
        int covered = 0;
        for (int idx = 0; idx < static_cast<int>(si.pop_order.size()); ++idx) {
            int v = si.pop_order[idx];
            in_ball[v] = 1;
            ++covered;
            double a = si.dist[v];
            if (idx + 1 < static_cast<int>(si.pop_order.size()) &&
                si.dist[si.pop_order[idx + 1]] == a)
                continue;
            int need = k - covered;
            double b_cover = 0.0;
            if (need > 0) {
                comp_dj.clear();
                for (int v2 = 0; v2 < n; ++v2)
                    if (!in_ball[v2] && !std::isinf(sj.dist[v2])) comp_dj.push_back(sj.dist[v2]);
                if (static_cast<int>(comp_dj.size()) < need) continue;
                std::nth_element(comp_dj.begin(), comp_dj.begin() + (need - 1), comp_dj.end());
                b_cover = comp_dj[need - 1];
            }
            if (b_cover > a + e.w) continue;
            double b_eff = std::max(b_cover, a - e.w);
            double value = a + b_eff + e.w;
            if (value < best_value) {
                best_value = value;
                best_edge = ei;
                best_a = a;
                best_b = b_eff;
                best_vertex = -1;
            }
        }
    }

    // Witness tree.
    std::vector<int> vertices;
    std::vector<Edge> edges;
    std::vector<double> center_dist(n, 0.0);
    if (best_vertex >= 0) {
        const auto& s = sp[best_vertex];
        for (int idx = 0; idx < k; ++idx) {
            int v = s.pop_order[idx];
            vertices.push_back(v);
            center_dist[v] = s.dist[v];
            if (v != best_vertex) edges.emplace_back(s.parent[v], v, *g.weight_between(s.parent[v], v));
        }
    } else {
        const Edge& e = g.edge(best_edge);
        BallPartition part = partition_two_balls(g, sp[e.u], sp[e.v], best_a, best_b);
        for (int v = 0; v < n; ++v) {
            if (part.in_i[v]) {
                vertices.push_back(v);
                center_dist[v] = sp[e.u].dist[v] + e.w / 2.0;
                if (v != e.u && part.in_i[sp[e.u].parent[v]])
                    edges.emplace_back(sp[e.u].parent[v], v, *g.weight_between(sp[e.u].parent[v], v));
            } else if (part.in_j[v]) {
                vertices.push_back(v);
                center_dist[v] = sp[e.v].dist[v] + e.w / 2.0;
                if (v != e.v && part.in_j[sp[e.v].parent[v]])
                    edges.emplace_back(sp[e.v].parent[v], v, *g.weight_between(sp[e.v].parent[v], v));
            }
        }
        if (part.in_i[e.u] && part.in_j[e.v]) edges.push_back(e);
    }

    // Truncate to exactly k vertices, dropping the leaf farthest from the
    // center first (ties: larger id). Never increases any eccentricity.
    while (static_cast<int>(vertices.size()) > k) {
        std::map<int, int> degree;
        for (const Edge& e : edges) {
            degree[e.u]++;
            degree[e.v]++;
        }
        int pick = -1;
        for (int v : vertices) {
            if (degree[v] > 1) continue;
            if (pick < 0 || center_dist[v] > center_dist[pick] ||
                (center_dist[v] == center_dist[pick] && v > pick))
                pick = v;
        }
        vertices.erase(std::find(vertices.begin(), vertices.end(), pick));
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].u == pick || edges[i].v == pick) {
                edges.erase(edges.begin() + i);
                break;
            }
    }

    MinDiamKTree out;
    out.diameter = best_value;
    out.tree = make_solution(g, std::move(vertices), std::move(edges), "diam");
    if (out.tree.diameter > best_value + 1e-9 * std::max(1.0, best_value))
        throw ValidationError("min_diameter_ktree: witness exceeds the reported diameter");
    return out;
}

// ---------------------------------------------------------------------------
// Roof curves: distance from a node to each interior point of an edge, a
// piecewise linear bitonic function; the sweep finds the interior point
// minimizing the k-th lowest curve.
// ---------------------------------------------------------------------------

struct RoofCurve {
    int node = -1;
    Edge e;
    double du = kInf;  // d(x, u)
    double dv = kInf;  // d(x, v)

    double breakpoint() const { return std::clamp((e.w + dv - du) / 2.0, 0.0, e.w); }
    double eval(double ell) const { return std::min(ell + du, e.w - ell + dv); }
};

inline RoofCurve roof_curve(int node, const Edge& e, const std::vector<double>& dist_from_u,
                            const std::vector<double>& dist_from_v) {
    return RoofCurve{node, e, dist_from_u[node], dist_from_v[node]};
}

struct RoofSweepResult {
    double ell = 0.0;
    double radius = kInf;
};

inline RoofSweepResult roof_sweep_edge(const Edge& e, const std::vector<RoofCurve>& curves, int k) {
    if (k < 1 || k > static_cast<int>(curves.size()))
        throw ArgumentError("roof_sweep_edge: bad k");
    std::vector<double> events{0.0, e.w};
    for (const RoofCurve& c : curves)
        if (std::isfinite(c.du) || std::isfinite(c.dv)) events.push_back(c.breakpoint());
    for (size_t i = 0; i < curves.size(); ++i) {
        for (size_t j = 0; j < curves.size(); ++j) {
            if (i == j) continue;
            // Rising segment of curve i meets falling segment of curve j.
            if (!std::isfinite(curves[i].du) || !std::isfinite(curves[j].dv)) continue;
            double ell = (e.w + curves[j].dv - curves[i].du) / 2.0;
            if (ell >= 0.0 && ell <= e.w) events.push_back(ell);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    RoofSweepResult best;
    std::vector<double> vals(curves.size());
    for (double ell : events) {
        for (size_t c = 0; c < curves.size(); ++c) vals[c] = curves[c].eval(ell);
        std::nth_element(vals.begin(), vals.begin() + (k - 1), vals.end());
        double r = vals[k - 1];
        if (r < best.radius) {
            best.radius = r;
            best.ell = ell;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Hu framework: per-pair distances d and requirements r; communication cost
// sums r_ij * tree-distance, diameter cost maximizes it.
// ---------------------------------------------------------------------------

struct HuInstance {
    int n = 0;
    DistanceMatrix d;
    DistanceMatrix r;

    HuInstance() = default;
    HuInstance(DistanceMatrix d_, DistanceMatrix r_) : n(d_.size()), d(std::move(d_)), r(std::move(r_)) {
        if (d.size() != r.size()) throw ArgumentError("HuInstance: matrix sizes differ");
        d.validate();
        r.validate();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (std::isinf(d.at(i, j)) || std::isinf(r.at(i, j)))
                    throw ArgumentError("HuInstance: entries must be finite");
    }

    std::vector<double> distinct_d() const { return distinct_off_diagonal(d); }
    std::vector<double> distinct_r() const { return distinct_off_diagonal(r); }

    // Complete carrier graph weighted by d.
    WeightedGraph distance_graph() const {
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.emplace_back(i, j, d.at(i, j));
        return WeightedGraph(n, std::move(es));
    }

private:
    static std::vector<double> distinct_off_diagonal(const DistanceMatrix& m) {
        std::vector<double> vals;
        for (int i = 0; i < m.size(); ++i)
            for (int j = i + 1; j < m.size(); ++j) vals.push_back(m.at(i, j));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        return vals;
    }
};

struct HuCosts {
    double communication = 0.0;
    double diameter = 0.0;
};

inline HuCosts evaluate_hu(const KTreeSolution& tree, const HuInstance& inst) {
    if (static_cast<int>(tree.vertices.size()) != inst.n)
        throw ArgumentError("evaluate_hu: tree does not span the instance");
    for (int i = 0; i < inst.n; ++i)
        if (tree.vertices[i] != i) throw ArgumentError("evaluate_hu: tree does not span 0..n-1");

    std::vector<std::vector<std::pair<int, double>>> adj(inst.n);
    for (const Edge& e : tree.edges) {
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    HuCosts out;
    std::vector<double> dist(inst.n);
    for (int s = 0; s < inst.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1.0);
        dist[s] = 0.0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, w] : adj[v])
                if (dist[u] < 0) {
                    dist[u] = dist[v] + w;
                    stack.push_back(u);
                }
        }
        for (int t = s + 1; t < inst.n; ++t) {
            double c = inst.r.at(s, t) * dist[t];
            out.communication += c;
            out.diameter = std::max(out.diameter, c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gomory-Hu cut tree via repeated max-flow (no contraction). The tree
// predicts every pairwise min cut as the smallest capacity on the tree path.
// ---------------------------------------------------------------------------

struct MaxFlowResult {
    double value = 0.0;
    std::vector<char> source_side;
};

inline MaxFlowResult max_flow(const WeightedGraph& g, int s, int t) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> cap(n, std::vector<double>(n, 0.0));
    for (const Edge& e : g.edges()) {
        cap[e.u][e.v] += e.w;
        cap[e.v][e.u] += e.w;
    }
    MaxFlowResult out;
    std::vector<int> parent(n);
    auto bfs = [&]() {
        std::fill(parent.begin(), parent.end(), -1);
        parent[s] = s;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u = 0; u < n; ++u)
                if (parent[u] < 0 && cap[v][u] > 0.0) {
                    parent[u] = v;
                    queue.push_back(u);
                }
        }
        return parent[t] >= 0;
    };
    while (bfs()) {
        double push = kInf;
        for (int v = t; v != s; v = parent[v]) push = std::min(push, cap[parent[v]][v]);
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= push;
            cap[v][parent[v]] += push;
        }
        out.value += push;
    }
    out.source_side.assign(n, 0);
    std::vector<int> queue{s};
    out.source_side[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int u = 0; u < n; ++u)
            if (!out.source_side[u] && cap[v][u] > 0.0) {
                out.source_side[u] = 1;
                queue.push_back(u);
            }
    }
    return out;
}

struct CutTree {
    int n = 0;
    std::vector<int> parent;       // parent[0] = -1
    std::vector<double> capacity;  // capacity[v] labels edge (v, parent[v])

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        for (int v = 1; v < n; ++v) es.emplace_back(v, parent[v], capacity[v]);
        std::sort(es.begin(), es.end());
        return es;
    }

    double min_cut(int s, int t) const {
        std::vector<int> depth(n, 0);
        std::function<int(int)> dep = [&](int v) -> int {
            return parent[v] < 0 ? 0 : dep(parent[v]) + 1;
        };
        int a = s, b = t, da = dep(s), db = dep(t);
        double best = kInf;
        while (da > db) {
            best = std::min(best, capacity[a]);
            a = parent[a];
            --da;
        }
        while (db > da) {
            best = std::min(best, capacity[b]);
            b = parent[b];
            --db;
        }
        while (a != b) {
            best = std::min(best, std::min(capacity[a], capacity[b]));
            a = parent[a];
            b = parent[b];
        }
        return best;
    }
};

inline CutTree gomory_hu(const WeightedGraph& capacities) {
    const int n = capacities.vertex_count();
    CutTree tree;
    tree.n = n;
    tree.parent.assign(n, 0);
    tree.capacity.assign(n, 0.0);
    if (n > 0) tree.parent[0] = -1;
    for (int s = 1; s < n; ++s) {
        int t = tree.parent[s];
        MaxFlowResult f = max_flow(capacities, s, t);
        tree.capacity[s] = f.value;
        // Re-parent every source-side vertex hanging off t, not just the
        // unprocessed ones; the restricted variant only yields a
        // flow-equivalent tree whose edge bipartitions need not be min cuts.
        for (int v = 0; v < n; ++v)
            if (v != s && f.source_side[v] && tree.parent[v] == t) tree.parent[v] = s;
        int pt = tree.parent[t];
        if (pt >= 0 && f.source_side[pt]) {
            tree.parent[s] = pt;
            tree.parent[t] = s;
            tree.capacity[s] = tree.capacity[t];
            tree.capacity[t] = f.value;
        }
    }
    return tree;
}

// ---------------------------------------------------------------------------
// Table-1 row 3 solvers.
// ---------------------------------------------------------------------------

namespace hu_detail {

inline std::vector<std::vector<int>> zero_components(const HuInstance& inst) {
    UnionFind uf(inst.n);
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (inst.d.at(i, j) == 0.0) uf.unite(i, j);
    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < inst.n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> comps;
    for (auto& [root, vs] : by_root) {
        std::sort(vs.begin(), vs.end());
        comps.push_back(vs);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

// Deterministic zero-d spanning tree of one supernode: BFS from the smallest
// member, neighbors ascending.
inline std::vector<Edge> zero_spanning_tree(const HuInstance& inst, const std::vector<int>& comp) {
    std::vector<Edge> out;
    std::set<int> left(comp.begin() + 1, comp.end());
    std::vector<int> queue{comp.front()};
    for (size_t qi = 0; qi < queue.size() && !left.empty(); ++qi) {
        int v = queue[qi];
        for (auto it = left.begin(); it != left.end();) {
            if (inst.d.at(v, *it) == 0.0) {
                out.emplace_back(v, *it, 0.0);
                queue.push_back(*it);
                it = left.erase(it);
            } else {
                ++it;
            }
        }
    }
    return out;
}

}  // namespace hu_detail

// Minimum-communication spanning tree for d in {0, c}, r in {a, b}: contract
// the zero-distance components, aggregate requirements, take the cut tree of
// the aggregates and re-expand each supernode with a zero-distance tree.
inline KTreeSolution min_comm_tree_two_r_zero_c(const HuInstance& inst) {
    auto dvals = inst.distinct_d();
    if (dvals.size() > 2 || (dvals.size() == 2 && dvals.front() != 0.0))
        throw ArgumentError("min_comm_tree_two_r_zero_c: d values must come from {0, c}");
    if (inst.distinct_r().size() > 2)
        throw ArgumentError("min_comm_tree_two_r_zero_c: more than two distinct r values");

    auto comps = hu_detail::zero_components(inst);
    const int m = static_cast<int>(comps.size());
    std::vector<Edge> edges;
    for (const auto& comp : comps) {
        auto t = hu_detail::zero_spanning_tree(inst, comp);
        edges.insert(edges.end(), t.begin(), t.end());
    }
    if (m > 1) {
        std::vector<Edge> caps;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                double sum = 0.0;
                for (int x : comps[i])
                    for (int y : comps[j]) sum += inst.r.at(x, y);
                caps.emplace_back(i, j, sum);
            }
        CutTree cut = gomory_hu(WeightedGraph(m, std::move(caps)));
        for (int v = 1; v < m; ++v) {
            int p = cut.parent[v];
            int x = comps[v].front(), y = comps[p].front();
            edges.emplace_back(x, y, inst.d.at(x, y));
        }
    }
    std::vector<int> vertices(inst.n);
    std::iota(vertices.begin(), vertices.end(), 0);
    return make_solution(inst.distance_graph(), std::move(vertices), std::move(edges), "hu-comm");
}

// Minimum-diameter-cost spanning tree for uniform d and r in {a, b}, a > b:
// if the high-requirement pairs are acyclic, hang their forest's tree centers
// off the center of the widest tree; otherwise any star is optimal.
inline KTreeSolution min_diamcost_tree_uniform_d_two_r(const HuInstance& inst) {
    if (inst.n < 1) throw ArgumentError("min_diamcost_tree: empty instance");
    auto dvals = inst.distinct_d();
    if (dvals.size() > 1) throw ArgumentError("min_diamcost_tree: d values must be uniform");
    const double c = dvals.empty() ? 0.0 : dvals.front();
    auto rvals = inst.distinct_r();
    if (rvals.size() > 2) throw ArgumentError("min_diamcost_tree: more than two distinct r values");
    const double a = rvals.empty() ? 0.0 : rvals.back();

    WeightedGraph carrier = inst.distance_graph();
    std::vector<int> all(inst.n);
    std::iota(all.begin(), all.end(), 0);
    auto star = [&]() {
        std::vector<Edge> es;
        for (int v = 1; v < inst.n; ++v) es.emplace_back(0, v, c);
        return make_solution(carrier, all, std::move(es), "hu-diamcost");
    };
    if (inst.n <= 2) return star();

    // Forest of requirement-a pairs; bail to a star if it has a cycle.
    std::vector<Edge> forest;
    UnionFind uf(inst.n);
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            if (inst.r.at(i, j) == a) {
                if (!uf.unite(i, j)) return star();
                forest.emplace_back(i, j, c);
            }

    std::map<int, std::vector<int>> trees;  // union-find root -> members
    for (int v = 0; v < inst.n; ++v) trees[uf.find(v)].push_back(v);
    std::vector<std::vector<std::pair<int, double>>> adj(inst.n);
    for (const Edge& e : forest) {
        adj[e.u].push_back({e.v, 1.0});
        adj[e.v].push_back({e.u, 1.0});
    }
    auto hops_from = [&](int src) {
        std::map<int, int> h;
        h[src] = 0;
        std::vector<int> queue{src};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [u, w] : adj[v])
                if (!h.count(u)) {
                    h[u] = h[v] + 1;
                    queue.push_back(u);
                }
        }
        return h;
    };

    int root_center = -1;
    int widest_diam = -1;
    std::vector<int> centers;
    std::vector<int> isolated;
    for (auto& [rt, members] : trees) {
        if (members.size() == 1 && adj[members[0]].empty()) {
            isolated.push_back(members[0]);
            continue;
        }
        int center = -1, ecc_best = inst.n + 1, diam = 0;
        for (int v : members) {
            auto h = hops_from(v);
            int ecc = 0;
            for (auto& [u, hh] : h) ecc = std::max(ecc, hh);
            diam = std::max(diam, ecc);
            if (ecc < ecc_best) {
                ecc_best = ecc;
                center = v;
            }
        }
        centers.push_back(center);
        if (diam > widest_diam) {
            widest_diam = diam;
            root_center = center;
        }
    }
    KTreeSolution candidate;
    if (root_center >= 0) {
        std::vector<Edge> es = forest;
        for (int ctr : centers)
            if (ctr != root_center) es.emplace_back(root_center, ctr, c);
        for (int v : isolated) es.emplace_back(root_center, v, c);
        candidate = make_solution(carrier, all, std::move(es), "hu-diamcost");
    } else {
        return star();  // no a-pairs at all
    }
    double built = evaluate_hu(candidate, inst).diameter;
    double star_cost = 2.0 * a * c;
    if (built < star_cost && !approx_eq(built, star_cost)) return candidate;
    return star();
}

}  // namespace treekit
