#pragma once

#include <fstream>
#include <sstream>

#include "core.hpp"
#include "geometry.hpp"
#include "short_trees.hpp"

namespace treekit {

// Plain text instance formats. Numbers are written with shortest round-trip
// precision so write/read is exact.
//
//   graph:  "n m" then m lines "u v w"
//   points: "n euclidean|rectilinear" then n lines "x y"
//   hu:     "n" then a line "i j d r" for every pair i < j

inline std::string graph_to_text(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << format_exact(e.w) << '\n';
    return out.str();
}

inline WeightedGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw ValidationError("graph parse: expected 'n m' header");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int u, v;
        double w;
        if (!(in >> u >> v >> w)) throw ValidationError("graph parse: bad edge line");
        edges.emplace_back(u, v, w);
    }
    return WeightedGraph(n, std::move(edges));
}

inline std::string points_to_text(const PointSet2D& ps) {
    std::ostringstream out;
    out << ps.size() << ' ' << (ps.metric == Metric::euclidean ? "euclidean" : "rectilinear")
        << '\n';
    for (const Point& p : ps.points)
        out << format_exact(p.x) << ' ' << format_exact(p.y) << '\n';
    return out.str();
}

inline PointSet2D points_from_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    std::string metric;
    if (!(in >> n >> metric)) throw ValidationError("points parse: expected 'n metric' header");
    Metric m;
    if (metric == "euclidean")
        m = Metric::euclidean;
    else if (metric == "rectilinear")
        m = Metric::rectilinear;
    else
        throw ValidationError("points parse: metric must be euclidean or rectilinear");
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        double x, y;
        if (!(in >> x >> y)) throw ValidationError("points parse: bad point line");
        pts.push_back({x, y});
    }
    return PointSet2D(std::move(pts), m);
}

inline std::string hu_to_text(const HuInstance& inst) {
    std::ostringstream out;
    out << inst.n << '\n';
    for (int i = 0; i < inst.n; ++i)
        for (int j = i + 1; j < inst.n; ++j)
            out << i << ' ' << j << ' ' << format_exact(inst.d.at(i, j)) << ' '
                << format_exact(inst.r.at(i, j)) << '\n';
    return out.str();
}

inline HuInstance hu_from_text(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n)) throw ValidationError("hu parse: expected vertex count");
    DistanceMatrix d(n), r(n);
    for (int c = 0; c < n * (n - 1) / 2; ++c) {
        int i, j;
        double dv, rv;
        if (!(in >> i >> j >> dv >> rv)) throw ValidationError("hu parse: bad pair line");
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw ValidationError("hu parse: pair out of range");
        d.set(i, j, dv);
        r.set(i, j, rv);
    }
    return HuInstance(std::move(d), std::move(r));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write file: " + path);
    out << content;
}

}  // namespace treekit
