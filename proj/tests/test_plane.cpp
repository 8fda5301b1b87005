#include "test_support.hpp"

namespace {

// Brute-force diameter pair of a point set.
std::pair<int, int> diameter_pair(const tk::PointSet2D& ps) {
    std::pair<int, int> best{0, 1};
    double d = -1.0;
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            if (ps.euclid(i, j) > d) {
                d = ps.euclid(i, j);
                best = {i, j};
            }
    return best;
}

double geometric_oracle(const tk::PointSet2D& ps, int k) {
    return tk::oracle_kmst(tk::complete_graph(ps), k).value;
}

}  // namespace

TEST_CASE("plane_kmst picks coincident points for free") {
    std::vector<tk::Point> pts{{2, 2}, {2, 2}, {2, 2}, {40, 0}, {0, 40}};
    tk::PointSet2D ps(pts);
    auto sol = tk::plane_kmst(ps, 3);
    CHECK(sol.cost == 0.0);
}

TEST_CASE("plane_kmst finds the square despite a far decoy") {
    std::vector<tk::Point> pts{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {100, 100}};
    tk::PointSet2D ps(pts);
    auto sol = tk::plane_kmst(ps, 4);
    CHECK(tk::approx_eq(sol.cost, 3.0));
    CHECK(tk::approx_eq(geometric_oracle(ps, 4), 3.0));
}

TEST_CASE("plane_kmst argument handling") {
    tk::PointSet2D empty(std::vector<tk::Point>{});
    CHECK_THROWS_AS(tk::plane_kmst(empty, 1), tk::ArgumentError);
    tk::PointSet2D two(std::vector<tk::Point>{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(tk::plane_kmst(two, 3), tk::InfeasibleError);
}

TEST_CASE("circle_filter membership") {
    std::vector<tk::Point> pts{{0, 0}, {1, 0}, {0.5, 0.86}, {2, 0}};
    tk::PointSet2D ps(pts);
    auto w = tk::circle_filter(ps, 0, 1);
    CHECK(tk::approx_eq(w.delta, std::sqrt(3.0)));
    CHECK(std::find(w.contained.begin(), w.contained.end(), 2) != w.contained.end());
    CHECK(std::find(w.contained.begin(), w.contained.end(), 3) == w.contained.end());
    CHECK_THROWS_AS(tk::circle_filter(ps, 1, 1), tk::ArgumentError);
}

TEST_CASE("diameter-pair window contains the whole set") {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        auto ps = tk::gen_random_points(4 + static_cast<int>(seed % 9), seed);
        auto [a, b] = diameter_pair(ps);
        auto w = tk::circle_filter(ps, a, b);
        CHECK(static_cast<int>(w.contained.size()) == ps.size());
    }
}

TEST_CASE("grid_select counts and surplus rule") {
    // Seven points in three grid cells (3 + 3 + 1) of a manually built window.
    std::vector<tk::Point> pts{{0.0, -0.5}, {0.1, -0.5}, {0.2, -0.5},
                               {0.7, -0.5}, {0.8, -0.5}, {0.9, -0.5},
                               {0.0, 0.5}};
    tk::PointSet2D ps(pts);
    tk::CandidateWindow w;
    w.anchor_i = 0;
    w.anchor_j = 1;
    w.delta = std::sqrt(3.0);
    w.center = {0.5, 0.0};
    w.contained = {0, 1, 2, 3, 4, 5, 6};

    auto grid = tk::build_cell_grid(w, ps, 4);
    REQUIRE(grid.dim == 2);
    CHECK(grid.cells[0].size() == 3);
    CHECK(grid.cells[1].size() == 3);
    CHECK(grid.cells[2].size() == 1);

    auto sel = tk::grid_select(w, ps, 4);
    CHECK(sel.cells_used == 2);
    CHECK(sel.chosen == std::vector<int>{0, 1, 2, 5});  // surplus 3, 4 discarded

    // All k in one cell.
    auto one = tk::grid_select(w, ps, 3);
    CHECK(one.cells_used == 1);
    CHECK(one.chosen == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(tk::grid_select(w, ps, 8), tk::ArgumentError);  // only 7 contained
}

TEST_CASE("grid_select uses a minimal number of cells") {
    for (uint64_t seed = 1; seed <= 100; ++seed) {
        auto ps = tk::gen_random_points(10, seed);
        int k = 2 + static_cast<int>(seed % 8);
        auto [a, b] = diameter_pair(ps);
        auto w = tk::circle_filter(ps, a, b);
        if (static_cast<int>(w.contained.size()) < k) continue;
        auto grid = tk::build_cell_grid(w, ps, k);
        auto sel = tk::grid_select(w, ps, k);
        std::vector<int> counts;
        for (auto& cell : grid.cells) counts.push_back(static_cast<int>(cell.size()));
        std::sort(counts.rbegin(), counts.rend());
        long long top = 0;
        for (int i = 0; i + 1 < sel.cells_used; ++i) top += counts[i];
        CHECK(top < k);  // no g-1 cells can reach k
    }
}

TEST_CASE("square MST stays below 5*sigma*sqrt(q)") {
    for (uint64_t seed = 1; seed <= 300; ++seed) {
        tk::Rng rng(seed);
        double sigma = rng.uniform(0.5, 4.0);
        int q = 1 + static_cast<int>(seed % 25);
        std::vector<tk::Point> pts;
        for (int i = 0; i < q; ++i)
            pts.push_back({sigma * rng.uniform(), sigma * rng.uniform()});
        tk::PointSet2D ps(pts);
        std::vector<int> all(q);
        std::iota(all.begin(), all.end(), 0);
        double len = tk::edges_length(tk::point_mst_edges(ps, all));
        CHECK(len <= 5.0 * sigma * std::sqrt(static_cast<double>(q)) + 1e-9);
    }
}

TEST_CASE("one point per grid cell forces MST length") {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        tk::Rng rng(seed);
        double sigma = rng.uniform(0.5, 3.0);
        int grid_dim = 3 + static_cast<int>(seed % 4);
        int t = 2 + static_cast<int>(rng.next() % (grid_dim * grid_dim - 1));
        // t distinct cells, one random point in each.
        std::vector<int> cells(grid_dim * grid_dim);
        std::iota(cells.begin(), cells.end(), 0);
        for (int i = static_cast<int>(cells.size()) - 1; i > 0; --i)
            std::swap(cells[i], cells[rng.uniform_int(0, i)]);
        cells.resize(t);
        std::vector<tk::Point> pts;
        for (int c : cells) {
            double x0 = (c % grid_dim) * sigma, y0 = (c / grid_dim) * sigma;
            pts.push_back({x0 + sigma * rng.uniform(), y0 + sigma * rng.uniform()});
        }
        tk::PointSet2D ps(pts);
        std::vector<int> all(t);
        std::iota(all.begin(), all.end(), 0);
        double len = tk::edges_length(tk::point_mst_edges(ps, all));
        CHECK(len >= std::floor(t / 9.0) * sigma / 2.0 - 1e-9);
    }
}

TEST_CASE("plane_kmst tracks the oracle within 8 * k^(1/4)") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        auto ps = tk::gen_random_points(5 + static_cast<int>(seed % 6), seed);
        for (int k = 2; k <= ps.size(); ++k) {
            auto sol = tk::plane_kmst(ps, k);
            CHECK(static_cast<int>(sol.vertices.size()) == k);
            double opt = geometric_oracle(ps, k);
            CHECK(sol.cost <= 8.0 * std::pow(k, 0.25) * opt + 1e-9);
            CHECK(sol.cost >= opt - 1e-9);
        }
    }
}

TEST_CASE("window-count lower bound stays consistent with the oracle") {
    // For the window anchored at the optimal set's diameter pair, with g*
    // chosen cells: oracle-OPT >= max(diam, g* * diam / (18 * sqrt(k))).
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        auto ps = tk::gen_random_points(6 + static_cast<int>(seed % 7), seed);
        int k = 3 + static_cast<int>(seed % 4);
        if (k > ps.size()) continue;
        auto opt = tk::oracle_kmst(tk::complete_graph(ps), k);
        int da = opt.vertices[0], db = opt.vertices[1];
        double diam = -1.0;
        for (size_t i = 0; i < opt.vertices.size(); ++i)
            for (size_t j = i + 1; j < opt.vertices.size(); ++j) {
                double dd = ps.euclid(opt.vertices[i], opt.vertices[j]);
                if (dd > diam) {
                    diam = dd;
                    da = opt.vertices[i];
                    db = opt.vertices[j];
                }
            }
        if (diam <= 0.0) continue;
        auto w = tk::circle_filter(ps, da, db);
        if (static_cast<int>(w.contained.size()) < k) continue;  // cannot happen per containment
        auto sel = tk::grid_select(w, ps, k);
        double bound = std::max(diam, sel.cells_used * diam / (18.0 * std::sqrt(double(k))));
        CHECK(opt.value >= bound - 1e-9);
    }
}

TEST_CASE("rectilinear output length dominates the euclidean length") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto ps = tk::gen_random_points(8, seed, tk::Metric::rectilinear);
        auto sol = tk::plane_kmst(ps, 5);
        double rect = 0.0, euc = 0.0;
        for (const tk::Edge& e : sol.edges) {
            rect += e.w;
            euc += ps.euclid(e.u, e.v);
        }
        CHECK(rect >= euc - 1e-12);
    }
}

TEST_CASE("rectilinear solver matches the rectilinear oracle bound") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        auto ps = tk::gen_random_points(8, seed, tk::Metric::rectilinear);
        for (int k : {3, 5, 7}) {
            auto sol = tk::plane_kmst(ps, k);
            double opt = geometric_oracle(ps, k);
            CHECK(sol.cost <= 8.0 * std::pow(k, 0.25) * opt + 1e-9);
            CHECK(sol.cost >= opt - 1e-9);
        }
    }
}
