#include "test_support.hpp"

namespace {

tk::PointSet2D regular_polygon(int n, double radius) {
    std::vector<tk::Point> pts;
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * 3.14159265358979323846 * i / n;
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return tk::PointSet2D(pts);
}

double geometric_oracle(const tk::PointSet2D& ps, int k) {
    return tk::oracle_kmst(tk::complete_graph(ps), k).value;
}

// Minimum over k-subsets and all labeled trees on them (the heavier oracle
// kept for one pinned case).
double labeled_tree_oracle(const tk::PointSet2D& ps, int k) {
    const int n = ps.size();
    double best = tk::kInf;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        tk::for_each_labeled_tree(k, [&](const std::vector<tk::Edge>& shape) {
            double len = 0.0;
            for (const tk::Edge& e : shape) len += ps.euclid(vs[e.u], vs[e.v]);
            best = std::min(best, len);
        });
    }
    return best;
}

void check_non_crossing(const tk::PointSet2D& ps, const tk::KTreeSolution& sol) {
    for (size_t a = 0; a < sol.edges.size(); ++a)
        for (size_t b = a + 1; b < sol.edges.size(); ++b) {
            const tk::Edge& e1 = sol.edges[a];
            const tk::Edge& e2 = sol.edges[b];
            CHECK_FALSE(tk::segments_cross(ps.points[e1.u], ps.points[e1.v], ps.points[e2.u],
                                           ps.points[e2.v]));
        }
}

int max_degree(const tk::KTreeSolution& sol) {
    std::map<int, int> deg;
    for (const tk::Edge& e : sol.edges) {
        deg[e.u]++;
        deg[e.v]++;
    }
    int mx = 0;
    for (auto& [v, d] : deg) mx = std::max(mx, d);
    return mx;
}

}  // namespace

TEST_CASE("convex_kmst pinned small cases") {
    auto tri = regular_polygon(3, 1.0 / std::sqrt(3.0));  // side length 1
    auto s2 = tk::convex_kmst(tri, 2);
    CHECK(tk::approx_eq(s2.cost, 1.0));

    std::vector<tk::Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    auto s3 = tk::convex_kmst(tk::PointSet2D(square), 3);
    CHECK(tk::approx_eq(s3.cost, 2.0));

    auto hex = regular_polygon(6, 1.0);
    auto s4 = tk::convex_kmst(hex, 4);
    CHECK(tk::approx_eq(s4.cost, labeled_tree_oracle(hex, 4)));
}

TEST_CASE("convex_kmst rejects interior points and big inputs") {
    std::vector<tk::Point> with_interior{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}};
    CHECK_THROWS_AS(tk::convex_kmst(tk::PointSet2D(with_interior), 3), tk::ApplicabilityError);

    auto big = tk::gen_random_convex(26, 99);
    CHECK_THROWS_AS(tk::convex_kmst(big, 5), tk::ResourceError);

    auto rect = tk::gen_random_convex(6, 1);
    rect.metric = tk::Metric::rectilinear;
    CHECK_THROWS_AS(tk::convex_kmst(rect, 3), tk::ApplicabilityError);
}

TEST_CASE("convex_kmst equals the oracle with legal structure") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        auto ps = tk::gen_random_convex(n, seed);
        for (int k = 2; k <= n; ++k) {
            auto sol = tk::convex_kmst(ps, k);
            CHECK(static_cast<int>(sol.vertices.size()) == k);
            CHECK(tk::approx_eq(sol.cost, geometric_oracle(ps, k)));
            CHECK(max_degree(sol) <= 4);
            check_non_crossing(ps, sol);
        }
    }
}

TEST_CASE("circle_kmst pinned small cases") {
    auto hex = regular_polygon(6, 1.0);
    auto full = tk::circle_kmst(hex, 6);
    CHECK(tk::approx_eq(full.cost, 5.0));  // perimeter minus one side

    // k = 2 returns the minimum chord.
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto ps = tk::gen_random_circle(7, seed);
        double mn = tk::kInf;
        for (int i = 0; i < ps.size(); ++i)
            for (int j = i + 1; j < ps.size(); ++j) mn = std::min(mn, ps.euclid(i, j));
        CHECK(tk::approx_eq(tk::circle_kmst(ps, 2).cost, mn));
    }
}

TEST_CASE("circle_kmst applicability") {
    std::vector<tk::Point> skew{{0, 0}, {1, 0}, {0, 1}, {0.2, 0.2}};
    CHECK_THROWS_AS(tk::circle_kmst(tk::PointSet2D(skew), 3), tk::ApplicabilityError);

    std::vector<tk::Point> collinear{{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(tk::circle_kmst(tk::PointSet2D(collinear), 2), tk::ApplicabilityError);

    // A diametral pair still solves, but the tag flags it.
    std::vector<tk::Point> diam{{1, 0}, {-1, 0}, {0, 1}, {std::cos(0.5), std::sin(0.5)}};
    auto sol = tk::circle_kmst(tk::PointSet2D(diam), 3);
    CHECK(sol.solver_tag == "circle-dp[unverified]");
}

TEST_CASE("circle_kmst structure: a path in circular order") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        int n = 5 + static_cast<int>(seed % 6);
        auto ps = tk::gen_random_circle(n, seed);
        int k = 2 + static_cast<int>(seed % (n - 2));
        auto sol = tk::circle_kmst(ps, k);
        CHECK(static_cast<int>(sol.vertices.size()) == k);
        CHECK(max_degree(sol) <= 2);
        check_non_crossing(ps, sol);

        // Every edge joins circularly consecutive chosen points.
        auto fit = tk::fit_circle(ps);
        std::map<int, int> pos;
        for (int i = 0; i < n; ++i) pos[fit.circular_order[i]] = i;
        std::vector<int> chosen_pos;
        for (int v : sol.vertices) chosen_pos.push_back(pos[v]);
        std::sort(chosen_pos.begin(), chosen_pos.end());
        auto consecutive = [&](int a, int b) {
            auto ia = std::find(chosen_pos.begin(), chosen_pos.end(), pos[a]);
            auto ib = std::find(chosen_pos.begin(), chosen_pos.end(), pos[b]);
            int da = static_cast<int>(ia - chosen_pos.begin());
            int db = static_cast<int>(ib - chosen_pos.begin());
            int diff = std::abs(da - db);
            return diff == 1 || diff == static_cast<int>(chosen_pos.size()) - 1;
        };
        for (const tk::Edge& e : sol.edges) CHECK(consecutive(e.u, e.v));
    }
}

TEST_CASE("circle_kmst agrees with convex_kmst and the oracle") {
    for (uint64_t seed = 1; seed <= 50; ++seed) {
        int n = 5 + static_cast<int>(seed % 5);
        auto ps = tk::gen_random_circle(n, seed);
        for (int k = 2; k <= n; ++k) {
            double circle = tk::circle_kmst(ps, k).cost;
            double convex = tk::convex_kmst(ps, k).cost;
            double oracle = geometric_oracle(ps, k);
            CHECK(tk::approx_eq(circle, convex));
            CHECK(tk::approx_eq(circle, oracle));
        }
    }
}

TEST_CASE("nine concyclic points, k = 5: cross-solver agreement") {
    auto ps = tk::gen_random_circle(9, 4242);
    CHECK(tk::approx_eq(tk::circle_kmst(ps, 5).cost, tk::convex_kmst(ps, 5).cost));
}
