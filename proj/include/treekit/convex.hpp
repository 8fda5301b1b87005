#pragma once

#include "core.hpp"
#include "geometry.hpp"
#include "plane.hpp"

namespace treekit {

// Exact kMST for points in strict convex position (and the faster path DP
// for concyclic points). Euclidean only.

struct ConvexInstance {
    PointSet2D points;                       // original set
    std::vector<int> order;                  // clockwise boundary order (original indices)
    std::vector<std::vector<double>> dist;   // pairwise distances in order space
};

inline ConvexInstance build_convex_instance(const PointSet2D& ps) {
    const int n = ps.size();
    if (ps.metric != Metric::euclidean)
        throw ApplicabilityError("convex solver: Euclidean points only");
    if (n < 3) throw ArgumentError("convex solver: need at least 3 points");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (orientation(ps.points[a], ps.points[b], ps.points[c]) == 0)
                    throw ApplicabilityError("convex solver: collinear triple; not strictly convex");
    std::vector<int> hull = convex_hull(ps.points);
    if (static_cast<int>(hull.size()) != n)
        throw ApplicabilityError(
            "convex solver: a point lies strictly inside the hull; use the approximate or "
            "planar solver");
    std::reverse(hull.begin(), hull.end());  // counter-clockwise -> clockwise
    auto anchor = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), anchor, hull.end());

    ConvexInstance inst;
    inst.points = ps;
    inst.order = std::move(hull);
    inst.dist.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inst.dist[i][j] = ps.euclid(inst.order[i], inst.order[j]);
    return inst;
}

// Subproblem identity: tree size s, apex position i (order space), apex
// degree d <= 4, and a contiguous circular segment (start, len) not
// containing i.
struct SubproblemKey {
    int s = 0, apex = 0, degree = 0, start = 0, len = 0;
};

namespace convex_detail {

struct Back {
    int8_t kind = -1;  // 0 leaf, 1 degree-one branch, 2 split branch
    int16_t a = 0;     // kind 1: neighbor position; kind 2: first part length
    int8_t b = 0, c = 0;  // kind 1: child degrees
    int16_t s1 = 0;
};

struct Solver {
    const ConvexInstance& inst;
    int n, k;
    std::vector<double> val;
    std::vector<Back> back;
    std::vector<char> seen;

    Solver(const ConvexInstance& ci, int k_)
        : inst(ci), n(static_cast<int>(ci.order.size())), k(k_) {
        size_t cells = static_cast<size_t>(k + 1) * n * 5 * n * n;
        val.assign(cells, 0.0);
        back.assign(cells, {});
        seen.assign(cells, 0);
    }

    size_t id(int s, int i, int d, int start, int len) const {
        if (len == 0) start = 0;  // canonical empty segment
        return ((((static_cast<size_t>(s) * n + i) * 5 + d) * n + start) * n) + len;
    }

    double soln(int s, int i, int d, int start, int len) {
        if (d == 0) return s == 1 ? 0.0 : kInf;
        if (s < d + 1 || len + 1 < s) return kInf;
        size_t key = id(s, i, d, start, len);
        if (seen[key]) return val[key];
        seen[key] = 1;
        double best = kInf;
        Back bb;
        if (d == 1) {
            for (int t = 0; t < len; ++t) {
                int j1 = (start + t) % n;
                double w = inst.dist[i][j1];
                int lstart = start, llen = t;
                int rstart = (start + t + 1) % n, rlen = len - t - 1;
                for (int d1 = 0; d1 <= 3; ++d1) {
                    for (int d2 = 0; d1 + d2 <= 3; ++d2) {
                        for (int s1 = 1; s1 <= s - 1; ++s1) {
                            int s2 = s - s1;
                            double a = soln(s1, j1, d1, lstart, llen);
                            if (std::isinf(a)) continue;
                            double b = soln(s2, j1, d2, rstart, rlen);
                            if (std::isinf(b)) continue;
                            double cand = w + a + b;
                            if (cand < best) {
                                best = cand;
                                bb = {1, static_cast<int16_t>(j1), static_cast<int8_t>(d1),
                                      static_cast<int8_t>(d2), static_cast<int16_t>(s1)};
                            }
                        }
                    }
                }
            }
        } else {
            // First contiguous part takes one apex edge, the rest keeps
            // degree d-1; the apex is shared, so sizes overlap by one.
            for (int len1 = 1; len1 < len; ++len1) {
                int rstart = (start + len1) % n;
                for (int s1 = 2; s1 <= s - 1; ++s1) {
                    int s2 = s - s1 + 1;
                    double a = soln(s1, i, 1, start, len1);
                    if (std::isinf(a)) continue;
                    double b = soln(s2, i, d - 1, rstart, len - len1);
                    if (std::isinf(b)) continue;
                    double cand = a + b;
                    if (cand < best) {
                        best = cand;
                        bb = {2, static_cast<int16_t>(len1), 0, 0, static_cast<int16_t>(s1)};
                    }
                }
            }
        }
        val[key] = best;
        back[key] = bb;
        return best;
    }

    void rebuild(int s, int i, int d, int start, int len, std::vector<Edge>& out) {
        if (d == 0) return;
        size_t key = id(s, i, d, start, len);
        const Back& bb = back[key];
        if (bb.kind == 1) {
            int j1 = bb.a;
            int t = (j1 - start + n) % n;
            out.emplace_back(inst.order[i], inst.order[j1], inst.dist[i][j1]);
            rebuild(bb.s1, j1, bb.b, start, t, out);
            rebuild(s - bb.s1, j1, bb.c, (start + t + 1) % n, len - t - 1, out);
        } else if (bb.kind == 2) {
            rebuild(bb.s1, i, 1, start, bb.a, out);
            rebuild(s - bb.s1 + 1, i, d - 1, (start + bb.a) % n, len - bb.a, out);
        }
    }
};

}  // namespace convex_detail

inline KTreeSolution convex_kmst(const PointSet2D& ps, int k) {
    const int n = ps.size();
    if (n == 0) throw ArgumentError("convex_kmst: empty point set");
    if (ps.metric != Metric::euclidean)
        throw ApplicabilityError("convex_kmst: Euclidean points only");
    if (k < 1 || k > n) throw ArgumentError("convex_kmst: bad k");
    if (n > 25) throw ResourceError("convex_kmst: guarded to n <= 25");
    if (k == 1) return make_geo_solution(ps, {0}, {}, "convex-dp");

    ConvexInstance inst = build_convex_instance(ps);
    convex_detail::Solver solver(inst, k);
    double best = kInf;
    int best_i = -1, best_d = 0;
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= std::min(4, k - 1); ++d) {
            double c = solver.soln(k, i, d, (i + 1) % n, n - 1);
            if (c < best) {
                best = c;
                best_i = i;
                best_d = d;
            }
        }
    }
    if (best_i < 0) throw InfeasibleError("convex_kmst: no k-vertex tree");
    std::vector<Edge> edges;
    solver.rebuild(k, best_i, best_d, (best_i + 1) % n, n - 1, edges);
    for (Edge& e : edges) e.w = ps.euclid(e.u, e.v);
    std::vector<int> vs;
    for (const Edge& e : edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return make_geo_solution(ps, std::move(vs), std::move(edges), "convex-dp");
}

// ---------------------------------------------------------------------------
// Concyclic points: the optimum is a path visiting its points in circular
// order, so a start/last/count DP over the circle suffices.
// ---------------------------------------------------------------------------

struct CircleFit {
    Circle circle;
    bool has_diametral_pair = false;
    std::vector<int> circular_order;  // original indices, by angle
};

inline CircleFit fit_circle(const PointSet2D& ps) {
    const int n = ps.size();
    if (ps.metric != Metric::euclidean)
        throw ApplicabilityError("circle solver: Euclidean points only");
    if (n < 3) throw ArgumentError("circle fit: need at least 3 points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ps.points[i] == ps.points[j])
                throw ApplicabilityError("circle solver: duplicate points");

    // Spread anchors: the farthest pair plus the point farthest off their line.
    int a = 0, b = 1;
    double dmax = -1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ps.euclid(i, j) > dmax) {
                dmax = ps.euclid(i, j);
                a = i;
                b = j;
            }
    int c = -1;
    double off = -1.0;
    for (int i = 0; i < n; ++i) {
        if (i == a || i == b) continue;
        double h = std::abs(cross(ps.points[a], ps.points[b], ps.points[i]));
        if (h > off) {
            off = h;
            c = i;
        }
    }
    auto circ = circumcircle(ps.points[a], ps.points[b], ps.points[c]);
    if (!circ) throw ApplicabilityError("circle solver: points are collinear");

    CircleFit fit;
    fit.circle = *circ;
    double tol = 1e-9 * std::max(1.0, circ->radius);
    for (int i = 0; i < n; ++i) {
        double r = std::hypot(ps.points[i].x - circ->center.x, ps.points[i].y - circ->center.y);
        if (std::abs(r - circ->radius) > tol)
            throw ApplicabilityError("circle solver: points are not concyclic");
    }
    double dtol = 1e-9 * std::max(1.0, 2.0 * circ->radius);
    for (int i = 0; i < n && !fit.has_diametral_pair; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(ps.euclid(i, j) - 2.0 * circ->radius) <= dtol) {
                fit.has_diametral_pair = true;
                break;
            }
    fit.circular_order.resize(n);
    std::iota(fit.circular_order.begin(), fit.circular_order.end(), 0);
    std::sort(fit.circular_order.begin(), fit.circular_order.end(), [&](int i, int j) {
        double ai = std::atan2(ps.points[i].y - circ->center.y, ps.points[i].x - circ->center.x);
        double aj = std::atan2(ps.points[j].y - circ->center.y, ps.points[j].x - circ->center.x);
        if (ai != aj) return ai < aj;
        return i < j;
    });
    return fit;
}

inline KTreeSolution circle_kmst(const PointSet2D& ps, int k) {
    const int n = ps.size();
    if (n == 0) throw ArgumentError("circle_kmst: empty point set");
    if (ps.metric != Metric::euclidean)
        throw ApplicabilityError("circle_kmst: Euclidean points only");
    if (k < 1 || k > n) throw ArgumentError("circle_kmst: bad k");
    if (k == 1) return make_geo_solution(ps, {0}, {}, "circle-dp");
    if (n == 2) {
        return make_geo_solution(ps, {0, 1}, {Edge(0, 1, ps.euclid(0, 1))}, "circle-dp");
    }
    CircleFit fit = fit_circle(ps);
    std::string tag = fit.has_diametral_pair ? "circle-dp[unverified]" : "circle-dp";

    const auto& circ = fit.circular_order;
    double best = kInf;
    std::vector<Edge> best_edges;
    std::vector<double> dp(static_cast<size_t>(n) * (k + 1), kInf);
    std::vector<int> prev(static_cast<size_t>(n) * (k + 1), -1);
    auto at = [&](int t, int c) -> size_t { return static_cast<size_t>(t) * (k + 1) + c; };
    for (int s0 = 0; s0 < n; ++s0) {
        std::fill(dp.begin(), dp.end(), kInf);
        std::fill(prev.begin(), prev.end(), -1);
        dp[at(0, 1)] = 0.0;
        for (int t = 1; t < n; ++t) {
            int pt = circ[(s0 + t) % n];
            for (int c = 2; c <= std::min(k, t + 1); ++c) {
                for (int t2 = c - 2; t2 < t; ++t2) {
                    if (std::isinf(dp[at(t2, c - 1)])) continue;
                    int pt2 = circ[(s0 + t2) % n];
                    double cand = dp[at(t2, c - 1)] + PointSet2D::distance(ps.points[pt2], ps.points[pt],
                                                                           Metric::euclidean);
                    if (cand < dp[at(t, c)]) {
                        dp[at(t, c)] = cand;
                        prev[at(t, c)] = t2;
                    }
                }
            }
        }
        for (int t = k - 1; t < n; ++t) {
            if (dp[at(t, k)] < best) {
                best = dp[at(t, k)];
                std::vector<Edge> edges;
                int cur = t;
                for (int c = k; c >= 2; --c) {
                    int p = prev[at(cur, c)];
                    int x = circ[(s0 + cur) % n], y = circ[(s0 + p) % n];
                    edges.emplace_back(x, y, ps.euclid(x, y));
                    cur = p;
                }
                best_edges = std::move(edges);
            }
        }
    }
    std::vector<int> vs;
    for (const Edge& e : best_edges) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return make_geo_solution(ps, std::move(vs), std::move(best_edges), tag);
}

}  // namespace treekit
