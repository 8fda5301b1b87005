#pragma once

#include "core.hpp"
#include "geometry.hpp"

namespace treekit {

// O(k^(1/4)) kMST heuristic for planar point sets: for every anchor pair,
// window the points with a disk of diameter sqrt(3) * d(i,j), bucket the
// window into a ceil(sqrt(k))^2 grid, keep the fullest cells, and take the
// best MST over all windows. Window geometry is always Euclidean; only the
// final MST uses the set's metric.

struct CandidateWindow {
    int anchor_i = -1;
    int anchor_j = -1;
    double delta = 0.0;          // disk diameter = sqrt(3) * d(i, j)
    Point center;                // midpoint of the anchor segment
    std::vector<int> contained;  // indices inside the closed disk (1e-9 slack)
};

inline CandidateWindow circle_filter(const PointSet2D& ps, int i, int j) {
    if (i == j) throw ArgumentError("circle_filter: anchors must be distinct");
    CandidateWindow w;
    w.anchor_i = i;
    w.anchor_j = j;
    const Point& a = ps.points[i];
    const Point& b = ps.points[j];
    w.delta = std::sqrt(3.0) * ps.euclid(i, j);
    w.center = {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    double r = w.delta / 2.0 + 1e-9;
    for (int p = 0; p < ps.size(); ++p)
        if (std::hypot(ps.points[p].x - w.center.x, ps.points[p].y - w.center.y) <= r)
            w.contained.push_back(p);
    return w;
}

struct CellGrid {
    int dim = 1;            // cells per side, ceil(sqrt(k))
    double cell_side = 0.0;
    std::vector<std::vector<int>> cells;  // row-major, each list ascending

    int cell_count() const { return dim * dim; }
};

inline CellGrid build_cell_grid(const CandidateWindow& w, const PointSet2D& ps, int k) {
    CellGrid grid;
    grid.dim = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max(k, 1)))));
    grid.cells.assign(static_cast<size_t>(grid.dim) * grid.dim, {});
    grid.cell_side = w.delta / grid.dim;
    double x0 = w.center.x - w.delta / 2.0;
    double y0 = w.center.y - w.delta / 2.0;
    for (int p : w.contained) {
        int ix = 0, iy = 0;
        if (w.delta > 0.0) {
            // Half-open cells; the last row/column absorbs the top boundary
            // and any 1e-9 disk slack.
            ix = std::clamp(static_cast<int>(std::floor((ps.points[p].x - x0) / grid.cell_side)),
                            0, grid.dim - 1);
            iy = std::clamp(static_cast<int>(std::floor((ps.points[p].y - y0) / grid.cell_side)),
                            0, grid.dim - 1);
        }
        grid.cells[static_cast<size_t>(iy) * grid.dim + ix].push_back(p);
    }
    return grid;
}

struct GridSelection {
    std::vector<int> chosen;  // exactly k point indices, ascending
    int cells_used = 0;
};

// Fullest cells first (ties by row-major index); the surplus in the last cell
// is discarded in ascending point-index order.
inline GridSelection grid_select(const CandidateWindow& w, const PointSet2D& ps, int k) {
    if (static_cast<int>(w.contained.size()) < k)
        throw ArgumentError("grid_select: window holds fewer than k points");
    CellGrid grid = build_cell_grid(w, ps, k);
    std::vector<int> order(grid.cell_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return grid.cells[a].size() > grid.cells[b].size();
    });
    GridSelection sel;
    int need = k;
    for (int c : order) {
        if (need <= 0) break;
        const auto& pts = grid.cells[c];
        if (pts.empty()) break;
        sel.cells_used++;
        if (static_cast<int>(pts.size()) <= need) {
            sel.chosen.insert(sel.chosen.end(), pts.begin(), pts.end());
            need -= static_cast<int>(pts.size());
        } else {
            // Drop the surplus starting from the smallest index.
            int surplus = static_cast<int>(pts.size()) - need;
            sel.chosen.insert(sel.chosen.end(), pts.begin() + surplus, pts.end());
            need = 0;
        }
    }
    std::sort(sel.chosen.begin(), sel.chosen.end());
    return sel;
}

// Geometric solution builder: edges must carry the set's metric distances.
inline KTreeSolution make_geo_solution(const PointSet2D& ps, std::vector<int> vertices,
                                       std::vector<Edge> edges, std::string tag) {
    for (const Edge& e : edges)
        if (!approx_eq(e.w, ps.dist(e.u, e.v)))
            throw ValidationError("geometric solution edge weight mismatch");
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    TreeMetrics m = tree_metrics(vertices, edges);
    KTreeSolution s;
    s.vertices = std::move(vertices);
    s.edges = std::move(edges);
    s.cost = m.cost;
    s.diameter = m.diameter;
    s.solver_tag = std::move(tag);
    return s;
}

inline KTreeSolution plane_kmst(const PointSet2D& ps, int k) {
    const int n = ps.size();
    if (n == 0) throw ArgumentError("plane_kmst: empty point set");
    if (k < 1) throw ArgumentError("plane_kmst: k must be positive");
    if (k > n) throw InfeasibleError("plane_kmst: k exceeds the number of points");
    if (k == 1) return make_geo_solution(ps, {0}, {}, "plane");

    std::optional<KTreeSolution> best;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            CandidateWindow w = circle_filter(ps, i, j);
            if (static_cast<int>(w.contained.size()) < k) continue;
            GridSelection sel = grid_select(w, ps, k);
            auto edges = point_mst_edges(ps, sel.chosen);
            KTreeSolution cand = make_geo_solution(ps, sel.chosen, std::move(edges), "plane");
            if (!best || cand.cost < best->cost) best = std::move(cand);
        }
    }
    if (!best) throw InfeasibleError("plane_kmst: no window holds k points");
    return *best;
}

}  // namespace treekit
