#pragma once

#include <array>
#include <functional>
#include <random>

#include "core.hpp"
#include "exact_special.hpp"
#include "geometry.hpp"
#include "short_trees.hpp"

namespace treekit {

// Seeded generators: hardness gadgets, worst-case families and random
// instances. Identical seed and parameters give bit-identical output
// (mt19937_64 plus fixed uniform mappings; no std distributions).

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0, 1)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool coin(double p = 0.5) { return uniform() < p; }

private:
    std::mt19937_64 eng_;
};

struct GenSpec {
    std::string family;
    std::map<std::string, double> params;
    uint64_t seed = 0;
};

template <class SourceWitness, class TargetWitness>
struct ReductionCertificate {
    std::function<TargetWitness(const SourceWitness&)> forward;
    std::function<SourceWitness(const TargetWitness&)> backward;
};

// ---------------------------------------------------------------------------
// Steiner tree -> kMST reduction, both weight variants.
// ---------------------------------------------------------------------------

enum class SteinerWeightVariant { zero_one_inf, one_two_three };

struct SteinerReduction {
    WeightedGraph graph;  // complete transformed graph
    int k = 0;
    double budget = 0.0;
    int source_vertices = 0;
    int path_length = 0;  // X new vertices per terminal
    std::vector<int> terminals;
    SteinerWeightVariant variant = SteinerWeightVariant::zero_one_inf;
    // Witnesses are edge lists: a Steiner tree in the source graph maps to a
    // k-tree within budget and back.
    ReductionCertificate<std::vector<Edge>, std::vector<Edge>> certificate;

    int new_vertex(int terminal_index, int slot) const {
        return source_vertices + terminal_index * path_length + slot;
    }
};

inline SteinerReduction gen_steiner_to_kmst(const WeightedGraph& g, std::vector<int> terminals,
                                            int max_edges, SteinerWeightVariant variant) {
    const int n = g.vertex_count();
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    if (terminals.empty()) throw ArgumentError("gen_steiner_to_kmst: empty terminal set");
    for (int t : terminals)
        if (t < 0 || t >= n) throw ArgumentError("gen_steiner_to_kmst: terminal out of range");
    if (max_edges < 1) throw ArgumentError("gen_steiner_to_kmst: budget must be positive");
    if (variant == SteinerWeightVariant::one_two_three) {
        if (!g.connected()) throw ArgumentError("gen_steiner_to_kmst: source must be connected");
        if (max_edges > n - 1) throw ArgumentError("gen_steiner_to_kmst: budget exceeds |V|-1");
    }

    SteinerReduction red;
    red.source_vertices = n;
    red.terminals = terminals;
    red.variant = variant;
    red.path_length = n - static_cast<int>(terminals.size()) + 1;
    const int X = red.path_length;
    const int R = static_cast<int>(terminals.size());
    const int total = n + R * X;

    const bool paths = variant == SteinerWeightVariant::zero_one_inf;
    const double original_w = paths ? 1.0 : 2.0;
    const double attach_w = paths ? 0.0 : 1.0;
    const double far_w = paths ? static_cast<double>(total) * total * 2.0 : 3.0;

    std::vector<std::vector<double>> w(total, std::vector<double>(total, far_w));
    for (const Edge& e : g.edges()) w[e.u][e.v] = w[e.v][e.u] = original_w;
    for (int ti = 0; ti < R; ++ti) {
        for (int s = 0; s < X; ++s) {
            int nv = red.new_vertex(ti, s);
            int anchor = paths ? (s == 0 ? terminals[ti] : red.new_vertex(ti, s - 1))
                               : terminals[ti];
            w[nv][anchor] = w[anchor][nv] = attach_w;
        }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) edges.emplace_back(i, j, w[i][j]);
    red.graph = WeightedGraph(total, std::move(edges));
    red.k = paths ? R * X : R * X + max_edges + 1;
    red.budget = paths ? static_cast<double>(max_edges)
                       : static_cast<double>(R * X + 2 * max_edges);

    WeightedGraph source = g;
    std::vector<int> terms = terminals;
    WeightedGraph big = red.graph;
    int k = red.k;
    red.certificate.forward = [source, terms, X, n, paths, big, k,
                               max_edges](const std::vector<Edge>& steiner) -> std::vector<Edge> {
        std::vector<Edge> out;
        std::set<int> vs(terms.begin(), terms.end());
        for (const Edge& e : steiner) {
            out.emplace_back(e.u, e.v, paths ? 1.0 : 2.0);
            vs.insert(e.u);
            vs.insert(e.v);
        }
        const int R = static_cast<int>(terms.size());
        for (int ti = 0; ti < R; ++ti)
            for (int s = 0; s < X; ++s) {
                int nv = n + ti * X + s;
                int anchor = paths ? (s == 0 ? terms[ti] : nv - 1) : terms[ti];
                out.emplace_back(anchor, nv, paths ? 0.0 : 1.0);
                vs.insert(nv);
            }
        if (!paths) {
            // Grow with weight-2 edges until the tree holds k vertices.
            while (static_cast<int>(vs.size()) < k) {
                bool grew = false;
                for (const Edge& e : source.edges()) {
                    bool hu = vs.count(e.u) > 0, hv = vs.count(e.v) > 0;
                    if (hu == hv) continue;
                    out.emplace_back(e.u, e.v, 2.0);
                    vs.insert(hu ? e.v : e.u);
                    grew = true;
                    break;
                }
                if (!grew) throw ValidationError("steiner forward map: cannot reach k vertices");
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    red.certificate.backward = [n, paths](const std::vector<Edge>& ktree) -> std::vector<Edge> {
        std::vector<Edge> out;
        for (const Edge& e : ktree)
            if (e.u < n && e.v < n) out.push_back(e);
        (void)paths;
        return out;
    };
    return red;
}

// ---------------------------------------------------------------------------
// 3SAT -> minimum-diameter-cost spanning tree gadget.
// ---------------------------------------------------------------------------

struct ThreeSatFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // +v / -v, 1-based vars
};

inline ThreeSatFormula parse_3sat(const std::string& text) {
    ThreeSatFormula f;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> lits;
        int x;
        while (ls >> x) lits.push_back(x);
        if (lits.empty()) continue;
        if (lits.size() != 3) throw ValidationError("3sat parse: each clause needs 3 literals");
        std::array<int, 3> cl{lits[0], lits[1], lits[2]};
        for (int l : cl) {
            if (l == 0) throw ValidationError("3sat parse: zero literal");
            f.num_vars = std::max(f.num_vars, std::abs(l));
        }
        if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
            throw ValidationError("3sat parse: duplicate literal in clause");
        f.clauses.push_back(cl);
    }
    if (f.clauses.empty()) throw ValidationError("3sat parse: empty formula");
    return f;
}

inline bool sat_satisfies(const ThreeSatFormula& f, const std::vector<bool>& assignment) {
    for (const auto& cl : f.clauses) {
        bool ok = false;
        for (int l : cl) {
            bool val = assignment[std::abs(l) - 1];
            if ((l > 0 && val) || (l < 0 && !val)) ok = true;
        }
        if (!ok) return false;
    }
    return true;
}

struct SatReduction {
    HuInstance instance;
    double threshold = 0.0;  // 4 * a * c
    ThreeSatFormula formula;
    double a = 1.0, c = 1.0, d_far = 5.0;
    ReductionCertificate<std::vector<bool>, std::vector<Edge>> certificate;

    // Node layout: 0 = true node; variable v: positive literal 2v-1,
    // negative literal 2v; clause i: 2*num_vars + 1 + i.
    int lit_node(int literal) const {
        int v = std::abs(literal);
        return literal > 0 ? 2 * v - 1 : 2 * v;
    }
    int clause_node(int i) const { return 2 * formula.num_vars + 1 + i; }
    int node_count() const {
        return 1 + 2 * formula.num_vars + static_cast<int>(formula.clauses.size());
    }
};

inline SatReduction gen_3sat_diamcost(const ThreeSatFormula& f, double a = 1.0, double c = 1.0,
                                      double d_far = 5.0) {
    if (a <= 0.0 || c <= 0.0) throw ArgumentError("gen_3sat_diamcost: need a, c > 0");
    if (!(d_far > 4.0 * a * c))
        throw ArgumentError("gen_3sat_diamcost: requires d_far > 4*a*c");
    SatReduction red;
    red.formula = f;
    red.a = a;
    red.c = c;
    red.d_far = d_far;
    red.threshold = 4.0 * a * c;
    const int n = red.node_count();
    DistanceMatrix d(n), r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                d.at(i, j) = d_far;
                r.at(i, j) = a;
            }
    for (int v = 1; v <= f.num_vars; ++v) {
        int p = red.lit_node(v), q = red.lit_node(-v);
        d.set(p, q, c);
        r.set(p, q, 4.0 * a);
        d.set(0, p, c);
        d.set(0, q, c);
    }
    for (int i = 0; i < static_cast<int>(f.clauses.size()); ++i)
        for (int l : f.clauses[i]) d.set(red.clause_node(i), red.lit_node(l), c);
    red.instance = HuInstance(std::move(d), std::move(r));

    SatReduction meta = red;  // layout helpers for the closures
    ThreeSatFormula formula = f;
    red.certificate.forward = [meta, formula, c](const std::vector<bool>& assignment) {
        if (!sat_satisfies(formula, assignment))
            throw ArgumentError("sat forward map: assignment does not satisfy the formula");
        std::vector<Edge> edges;
        for (int v = 1; v <= formula.num_vars; ++v) {
            int true_lit = assignment[v - 1] ? v : -v;
            edges.emplace_back(0, meta.lit_node(true_lit), c);
            edges.emplace_back(meta.lit_node(true_lit), meta.lit_node(-true_lit), c);
        }
        for (int i = 0; i < static_cast<int>(formula.clauses.size()); ++i) {
            for (int l : formula.clauses[i]) {
                bool val = assignment[std::abs(l) - 1];
                if ((l > 0 && val) || (l < 0 && !val)) {
                    edges.emplace_back(meta.clause_node(i), meta.lit_node(l), c);
                    break;
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    red.certificate.backward = [meta, formula](const std::vector<Edge>& tree) {
        // A literal is true exactly when it hangs directly off the true node.
        const int n = meta.node_count();
        std::vector<std::vector<int>> adj(n);
        for (const Edge& e : tree) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        std::vector<int> hop(n, -1);
        hop[0] = 0;
        std::vector<int> queue{0};
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int u : adj[queue[qi]])
                if (hop[u] < 0) {
                    hop[u] = hop[queue[qi]] + 1;
                    queue.push_back(u);
                }
        std::vector<bool> assignment(formula.num_vars, false);
        for (int v = 1; v <= formula.num_vars; ++v)
            assignment[v - 1] = hop[meta.lit_node(v)] == 1;
        return assignment;
    };
    return red;
}

// ---------------------------------------------------------------------------
// k-independent-set -> minimum-communication k-tree gadget.
// ---------------------------------------------------------------------------

struct IndepSetReduction {
    HuInstance instance;  // all d = 1
    int k = 0;
    double edge_requirement = 0.0;  // M*k*(k-1) + 1
    double threshold = 0.0;         // k*(k-1)
    ReductionCertificate<std::vector<int>, std::vector<int>> certificate;
    // forward: independent set -> same vertex list (star root = min member);
    // backward: k-tree vertex list -> candidate independent set.
};

inline IndepSetReduction gen_is_to_comm_ktree(const WeightedGraph& g, int k, double M) {
    const int n = g.vertex_count();
    if (k < 1 || k > n) throw ArgumentError("gen_is_to_comm_ktree: bad k");
    if (M < 1.0) throw ArgumentError("gen_is_to_comm_ktree: M must be at least 1");
    IndepSetReduction red;
    red.k = k;
    red.edge_requirement = M * k * (k - 1) + 1.0;
    red.threshold = static_cast<double>(k) * (k - 1);
    DistanceMatrix d(n), r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                d.at(i, j) = 1.0;
                r.at(i, j) = 1.0;
            }
    for (const Edge& e : g.edges()) r.set(e.u, e.v, red.edge_requirement);
    red.instance = HuInstance(std::move(d), std::move(r));
    red.certificate.forward = [](const std::vector<int>& indep) { return indep; };
    red.certificate.backward = [](const std::vector<int>& tree_vertices) { return tree_vertices; };
    return red;
}

// ---------------------------------------------------------------------------
// Worst-case family for the merge/collect heuristic: a zero-run path crossed
// by sqrt(k) heavy edges, far bottom clusters of size sqrt(k)+1, and (for
// large k) a cheap climbable path that bloats the greedy tree.
// ---------------------------------------------------------------------------

struct Fig2Instance {
    WeightedGraph graph;
    double known_opt = 0.0;
    std::vector<Edge> witness;  // the horizontal k-vertex path
    int heavy_edge_count = 0;
    double heavy_weight = 0.0;
    double upward_weight = 0.0;
    int upward_edge_count = 0;
    std::vector<std::vector<int>> bottom_clusters;
};

inline Fig2Instance gen_fig2(int k, double opt_scale) {
    int s = static_cast<int>(std::llround(std::sqrt(static_cast<double>(k))));
    if (k < 4 || s * s != k) throw ArgumentError("gen_fig2: k must be a perfect square >= 4");
    Fig2Instance out;
    out.heavy_weight = opt_scale / s;
    out.upward_weight = opt_scale / (4.0 * s);

    std::vector<Edge> edges;
    // Horizontal path: runs of sizes {s, s-1, ..., s-1} joined by s heavy
    // edges; exactly k vertices, total heavy weight = opt_scale.
    std::vector<int> run_sizes{s};
    for (int i = 0; i < s; ++i) run_sizes.push_back(s - 1);
    int id = 0;
    int prev_tail = -1;
    for (int size : run_sizes) {
        int head = id;
        for (int i = 1; i < size; ++i) {
            edges.emplace_back(id, id + 1, 0.0);
            out.witness.emplace_back(id, id + 1, 0.0);
            ++id;
        }
        int tail = id++;
        if (prev_tail >= 0) {
            edges.emplace_back(prev_tail, head, out.heavy_weight);
            out.witness.emplace_back(prev_tail, head, out.heavy_weight);
            out.heavy_edge_count++;
        }
        prev_tail = tail;
    }
    const int h_count = id;  // == k

    // Bottom clusters: s zero-weight paths of s+1 vertices, chained far away.
    int prev_anchor = 0;  // first chain link hangs off horizontal vertex 0
    for (int b = 0; b < s; ++b) {
        std::vector<int> cluster;
        for (int i = 0; i <= s; ++i) {
            cluster.push_back(id + i);
            if (i > 0) edges.emplace_back(id + i - 1, id + i, 0.0);
        }
        edges.emplace_back(prev_anchor, cluster.front(), opt_scale);
        prev_anchor = cluster.front();
        out.bottom_clusters.push_back(cluster);
        id += s + 1;
    }

    // Climbable path of cheap edges off the last run; only for large k where
    // it cannot undercut the horizontal optimum.
    if (s >= 5) {
        out.upward_edge_count = k - (s - 1);
        int base = h_count - 1;  // tail of the last run
        for (int i = 0; i < out.upward_edge_count; ++i) {
            edges.emplace_back(i == 0 ? base : id - 1, id, out.upward_weight);
            ++id;
        }
    }
    out.graph = WeightedGraph(id, std::move(edges));
    out.known_opt = opt_scale;
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

// ---------------------------------------------------------------------------
// Worst-case family for the planar heuristic: tight clusters along the
// diagonal of a sigma-square against uniformly spread decoy cells.
// ---------------------------------------------------------------------------

struct Fig4Instance {
    PointSet2D points;
    double known_opt_bound = 0.0;  // 2 * sigma
    std::vector<int> diagonal_indices;
    std::vector<Edge> witness;  // MST of the diagonal clusters
    double cell_side = 0.0;
};

inline Fig4Instance gen_fig4(int k, double sigma, uint64_t seed) {
    int s = static_cast<int>(std::llround(std::sqrt(static_cast<double>(k))));
    if (k < 4 || s * s != k) throw ArgumentError("gen_fig4: k must be a perfect square >= 4");
    if (!(sigma > 0.0)) throw ArgumentError("gen_fig4: sigma must be positive");
    Rng rng(seed);
    Fig4Instance out;
    out.cell_side = sigma / s;
    const double cluster_radius = sigma / (1000.0 * k);

    std::vector<Point> pts;
    for (int i = 0; i < s; ++i) {
        double cx = (i + 0.5) * out.cell_side;
        double cy = (i + 0.5) * out.cell_side;
        for (int j = 0; j < s; ++j) {
            double ang = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
            double rad = cluster_radius * rng.uniform();
            out.diagonal_indices.push_back(static_cast<int>(pts.size()));
            pts.push_back({cx + rad * std::cos(ang), cy + rad * std::sin(ang)});
        }
    }
    for (int i = 0; i < s; ++i) {
        int row = i;
        int col = (i + (s + 1) / 2) % s;  // shifted off the diagonal, one per row
        double x0 = col * out.cell_side, y0 = row * out.cell_side;
        for (int j = 0; j < s; ++j)
            pts.push_back({x0 + out.cell_side * rng.uniform(), y0 + out.cell_side * rng.uniform()});
    }
    out.points = PointSet2D(std::move(pts), Metric::euclidean);
    out.known_opt_bound = 2.0 * sigma;
    out.witness = point_mst_edges(out.points, out.diagonal_indices);
    return out;
}

// ---------------------------------------------------------------------------
// Seeded random instances.
// ---------------------------------------------------------------------------

inline WeightedGraph gen_random_graph(int n, double edge_prob, double wlo, double whi,
                                      uint64_t seed, bool ensure_connected = true) {
    if (n < 1) throw ArgumentError("gen_random_graph: n must be positive");
    Rng rng(seed);
    std::set<std::pair<int, int>> have;
    std::vector<Edge> edges;
    auto add = [&](int u, int v, double w) {
        if (u > v) std::swap(u, v);
        if (have.insert({u, v}).second) edges.emplace_back(u, v, w);
    };
    if (ensure_connected)
        for (int v = 1; v < n; ++v) add(rng.uniform_int(0, v - 1), v, rng.uniform(wlo, whi));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(edge_prob)) add(u, v, rng.uniform(wlo, whi));
    return WeightedGraph(n, std::move(edges));
}

inline PointSet2D gen_random_points(int n, uint64_t seed, Metric metric = Metric::euclidean) {
    if (n < 1) throw ArgumentError("gen_random_points: n must be positive");
    Rng rng(seed);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    return PointSet2D(std::move(pts), metric);
}

namespace gen_detail {

inline std::unique_ptr<SPParseTree> random_sp(Rng& rng, int t1, int t2, int depth, int& next_id,
                                              bool force_series) {
    bool leaf = depth <= 0 || (!force_series && rng.coin(0.4));
    if (leaf && !force_series) return SPParseTree::make_edge(t1, t2, rng.uniform(0.0, 10.0));
    bool series = force_series || rng.coin();
    if (series) {
        int mid = next_id++;
        auto l = random_sp(rng, t1, mid, depth - 1, next_id, false);
        auto r = random_sp(rng, mid, t2, depth - 1, next_id, false);
        return SPParseTree::make(SPParseTree::Kind::series, std::move(l), std::move(r));
    }
    // Parallel: the left branch must be composite so terminals stay the only
    // shared vertices and no duplicate edge appears.
    auto l = random_sp(rng, t1, t2, depth - 1, next_id, true);
    auto r = random_sp(rng, t1, t2, depth - 1, next_id, false);
    return SPParseTree::make(SPParseTree::Kind::parallel, std::move(l), std::move(r));
}

}  // namespace gen_detail

inline std::unique_ptr<SPParseTree> gen_random_sp_parse(int depth, uint64_t seed) {
    if (depth < 1) throw ArgumentError("gen_random_sp_parse: depth must be positive");
    Rng rng(seed);
    int next_id = 2;
    auto root = gen_detail::random_sp(rng, 0, 1, depth, next_id, true);
    sp_validate(*root);
    return root;
}

inline PointSet2D gen_random_convex(int n, uint64_t seed) {
    if (n < 3) throw ArgumentError("gen_random_convex: need n >= 3");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        double ax = 0.5 + rng.uniform(), by = 0.5 + rng.uniform();
        std::vector<double> angles;
        for (int i = 0; i < n; ++i) angles.push_back(rng.uniform(0.0, 2.0 * 3.14159265358979323846));
        std::sort(angles.begin(), angles.end());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            double gap = (i + 1 < n ? angles[i + 1] : angles[0] + 2.0 * 3.14159265358979323846) -
                         angles[i];
            if (gap < 1e-3) ok = false;
        }
        if (!ok) continue;
        std::vector<Point> pts;
        for (double a : angles) pts.push_back({ax * std::cos(a), by * std::sin(a)});
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                for (int c = b + 1; c < n && ok; ++c)
                    if (orientation(pts[a], pts[b], pts[c]) == 0) ok = false;
        if (!ok) continue;
        PointSet2D ps(std::move(pts), Metric::euclidean);
        if (static_cast<int>(convex_hull(ps.points).size()) == n) return ps;
    }
    throw ValidationError("gen_random_convex: failed to build a strictly convex set");
}

inline PointSet2D gen_random_circle(int n, uint64_t seed) {
    if (n < 3) throw ArgumentError("gen_random_circle: need n >= 3");
    Rng rng(seed);
    const double pi = 3.14159265358979323846;
    for (int attempt = 0; attempt < 64; ++attempt) {
        double radius = 0.5 + rng.uniform();
        std::vector<double> angles;
        for (int i = 0; i < n; ++i) angles.push_back(rng.uniform(0.0, 2.0 * pi));
        std::sort(angles.begin(), angles.end());
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                double diff = std::abs(angles[i] - angles[j]);
                diff = std::min(diff, 2.0 * pi - diff);
                if (diff < 5e-3) ok = false;                 // distinct points
                if (std::abs(diff - pi) < 5e-2) ok = false;  // no near-diametral pair
            }
        if (!ok) continue;
        std::vector<Point> pts;
        for (double a : angles) pts.push_back({radius * std::cos(a), radius * std::sin(a)});
        return PointSet2D(std::move(pts), Metric::euclidean);
    }
    throw ValidationError("gen_random_circle: failed to build a diametral-free circle set");
}

enum class HuPreset { uniform_d, arbitrary_d, two_r_zero_c, two_r_two_d };

inline HuInstance gen_random_hu(int n, HuPreset preset, uint64_t seed) {
    if (n < 2) throw ArgumentError("gen_random_hu: need n >= 2");
    Rng rng(seed);
    DistanceMatrix d(n), r(n);
    auto fill = [&](DistanceMatrix& m, const std::function<double()>& pick) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m.set(i, j, pick());
    };
    switch (preset) {
        case HuPreset::uniform_d: {
            double a = rng.uniform(0.5, 2.0);
            fill(d, [&] { return a; });
            fill(r, [&] { return rng.uniform(0.0, 5.0); });
            break;
        }
        case HuPreset::arbitrary_d: {
            double a = rng.uniform(0.5, 2.0);
            fill(d, [&] { return rng.uniform(0.0, 5.0); });
            fill(r, [&] { return a; });
            break;
        }
        case HuPreset::two_r_zero_c: {
            double c = rng.uniform(0.5, 2.0);
            double ra = rng.uniform(2.0, 4.0), rb = rng.uniform(0.0, 2.0);
            fill(d, [&] { return rng.coin(0.35) ? 0.0 : c; });
            fill(r, [&] { return rng.coin() ? ra : rb; });
            break;
        }
        case HuPreset::two_r_two_d: {
            double a = rng.uniform(0.5, 2.0);
            double c = rng.uniform(0.5, 1.0), dd = c + rng.uniform(0.5, 2.0);
            fill(d, [&] { return rng.coin() ? c : dd; });
            fill(r, [&] { return rng.coin() ? a : 4.0 * a; });
            break;
        }
    }
    return HuInstance(std::move(d), std::move(r));
}

}  // namespace treekit
