#pragma once

#include <cmath>

#include "core.hpp"

namespace treekit {

enum class Metric { euclidean, rectilinear };

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

struct PointSet2D {
    std::vector<Point> points;
    Metric metric = Metric::euclidean;

    PointSet2D() = default;
    PointSet2D(std::vector<Point> pts, Metric m = Metric::euclidean)
        : points(std::move(pts)), metric(m) {
        for (const Point& p : points)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw ArgumentError("PointSet2D: coordinates must be finite");
    }

    int size() const { return static_cast<int>(points.size()); }

    double dist(int i, int j) const { return distance(points[i], points[j], metric); }
    double euclid(int i, int j) const { return distance(points[i], points[j], Metric::euclidean); }

    static double distance(const Point& a, const Point& b, Metric m) {
        double dx = a.x - b.x, dy = a.y - b.y;
        return m == Metric::euclidean ? std::hypot(dx, dy) : std::abs(dx) + std::abs(dy);
    }
};

inline double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Orientation with a scale-aware tolerance: -1 clockwise, 0 collinear, +1
// counter-clockwise.
inline int orientation(const Point& o, const Point& a, const Point& b, double tol = 1e-9) {
    double c = cross(o, a, b);
    double scale = std::max({1.0, std::abs(a.x - o.x) + std::abs(a.y - o.y),
                             std::abs(b.x - o.x) + std::abs(b.y - o.y)});
    if (std::abs(c) <= tol * scale * scale) return 0;
    return c > 0 ? 1 : -1;
}

inline bool strictly_between(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// True when open segments (a,b) and (c,d) cross at an interior point.
// Shared endpoints do not count as a crossing.
inline bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == c || a == d || b == c || b == d) return false;
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    // Collinear overlap counts as self-intersection too.
    if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
        if (strictly_between(a, b, c) || strictly_between(a, b, d) ||
            strictly_between(c, d, a) || strictly_between(c, d, b))
            return true;
    }
    return false;
}

// Andrew monotone chain; returns hull point indices in counter-clockwise
// order starting from the lexicographically smallest point. Collinear points
// on the hull boundary are kept only if include_collinear.
inline std::vector<int> convex_hull(const std::vector<Point>& pts, bool include_collinear = false) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
        return a < b;
    });
    if (n <= 2) return idx;
    auto bad = [&](int o, int a, int b) {
        int s = orientation(pts[o], pts[a], pts[b]);
        return include_collinear ? s < 0 : s <= 0;
    };
    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
        size_t base = hull.size();
        for (int i : idx) {
            while (hull.size() >= base + 2 &&
                   bad(hull[hull.size() - 2], hull[hull.size() - 1], i))
                hull.pop_back();
            hull.push_back(i);
        }
        hull.pop_back();
        std::reverse(idx.begin(), idx.end());
    }
    return hull;
}

// Prim MST over the chosen point indices under the set's metric; O(k^2).
inline std::vector<Edge> point_mst_edges(const PointSet2D& ps, const std::vector<int>& chosen) {
    const int k = static_cast<int>(chosen.size());
    std::vector<Edge> tree;
    if (k <= 1) return tree;
    std::vector<char> in(k, 0);
    std::vector<double> best(k, kInf);
    std::vector<int> from(k, -1);
    in[0] = 1;
    for (int j = 1; j < k; ++j) {
        best[j] = ps.dist(chosen[0], chosen[j]);
        from[j] = 0;
    }
    for (int step = 1; step < k; ++step) {
        int pick = -1;
        for (int j = 0; j < k; ++j) {
            if (in[j]) continue;
            if (pick == -1 || best[j] < best[pick] ||
                (best[j] == best[pick] && chosen[j] < chosen[pick]))
                pick = j;
        }
        in[pick] = 1;
        tree.emplace_back(chosen[from[pick]], chosen[pick], best[pick]);
        for (int j = 0; j < k; ++j) {
            if (in[j]) continue;
            double d = ps.dist(chosen[pick], chosen[j]);
            if (d < best[j]) {
                best[j] = d;
                from[j] = pick;
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

inline double edges_length(const std::vector<Edge>& edges) {
    double s = 0.0;
    for (const Edge& e : edges) s = checked_add(s, e.w);
    return s;
}

// Complete geometric graph (edge weights under the set's metric); the carrier
// used when graph algorithms and oracles run on point sets.
inline WeightedGraph complete_graph(const PointSet2D& ps) {
    std::vector<Edge> es;
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j) es.emplace_back(i, j, ps.dist(i, j));
    return WeightedGraph(ps.size(), std::move(es));
}

struct Circle {
    Point center;
    double radius = 0.0;
};

// Circumcircle of three non-collinear points.
inline std::optional<Circle> circumcircle(const Point& a, const Point& b, const Point& c) {
    double d = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (d == 0.0) return std::nullopt;
    double a2 = a.x * a.x + a.y * a.y;
    double b2 = b.x * b.x + b.y * b.y;
    double c2 = c.x * c.x + c.y * c.y;
    Circle out;
    out.center.x = (a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d;
    out.center.y = (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d;
    out.radius = std::hypot(a.x - out.center.x, a.y - out.center.y);
    return out;
}

}  // namespace treekit
