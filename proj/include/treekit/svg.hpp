#pragma once

#include "core.hpp"
#include "geometry.hpp"
#include "io.hpp"

namespace treekit {

// Standalone SVG rendering of a geometric solution: one circle per point,
// one line per tree edge (rectilinear edges become two axis-parallel
// segments). Output is byte-deterministic for fixed inputs.
inline std::string solution_to_svg(const KTreeSolution& sol, const PointSet2D& ps) {
    if (ps.size() == 0) throw ArgumentError("emit_svg: empty point set");
    for (int v : sol.vertices)
        if (v < 0 || v >= ps.size())
            throw ArgumentError("emit_svg: solution is not over the given points");

    double xmin = kInf, xmax = -kInf, ymin = kInf, ymax = -kInf;
    for (const Point& p : ps.points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double w = xmax - xmin, h = ymax - ymin;
    if (w <= 0.0) w = 1.0;
    if (h <= 0.0) h = 1.0;
    double mx = 0.05 * w, my = 0.05 * h;
    double r = 0.01 * std::max(w, h);
    double stroke = 0.005 * std::max(w, h);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_exact(xmin - mx)
        << ' ' << format_exact(ymin - my) << ' ' << format_exact(w + 2 * mx) << ' '
        << format_exact(h + 2 * my) << "\">\n";
    for (const Edge& e : sol.edges) {
        const Point& a = ps.points[e.u];
        const Point& b = ps.points[e.v];
        if (ps.metric == Metric::rectilinear && a.x != b.x && a.y != b.y) {
            out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\""
                << format_exact(stroke) << "\" points=\"" << format_exact(a.x) << ','
                << format_exact(a.y) << ' ' << format_exact(b.x) << ',' << format_exact(a.y)
                << ' ' << format_exact(b.x) << ',' << format_exact(b.y) << "\"/>\n";
        } else {
            out << "  <line stroke=\"black\" stroke-width=\"" << format_exact(stroke)
                << "\" x1=\"" << format_exact(a.x) << "\" y1=\"" << format_exact(a.y)
                << "\" x2=\"" << format_exact(b.x) << "\" y2=\"" << format_exact(b.y)
                << "\"/>\n";
        }
    }
    std::vector<char> chosen(ps.size(), 0);
    for (int v : sol.vertices) chosen[v] = 1;
    for (int i = 0; i < ps.size(); ++i) {
        out << "  <circle cx=\"" << format_exact(ps.points[i].x) << "\" cy=\""
            << format_exact(ps.points[i].y) << "\" r=\"" << format_exact(r) << "\" fill=\""
            << (chosen[i] ? "black" : "silver") << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

inline void emit_svg(const KTreeSolution& sol, const PointSet2D& ps, const std::string& path) {
    write_file(path, solution_to_svg(sol, ps));
}

}  // namespace treekit
