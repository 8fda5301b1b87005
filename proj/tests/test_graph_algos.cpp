#include "test_support.hpp"

TEST_CASE("sssp on a path and with unreachable vertices") {
    tk::WeightedGraph path(3, {{0, 1, 2.0}, {1, 2, 3.0}});
    auto r = tk::sssp(path, 0);
    CHECK(r.dist == std::vector<double>{0.0, 2.0, 5.0});
    CHECK(r.parent[2] == 1);

    tk::WeightedGraph lonely(3, {{0, 1, 1.0}});
    auto r2 = tk::sssp(lonely, 0);
    CHECK(std::isinf(r2.dist[2]));
    CHECK(r2.parent[2] == -1);

    CHECK_THROWS_AS(tk::sssp(path, 7), tk::ArgumentError);
}

TEST_CASE("sssp agrees with Bellman-Ford on random graphs") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = tk::gen_random_graph(3 + static_cast<int>(seed % 8), 0.4, 0.0, 8.0, seed, false);
        for (int s = 0; s < g.vertex_count(); ++s) {
            auto got = tk::sssp(g, s);
            auto want = bellman_ford(g, s);
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (std::isinf(want[v]))
                    CHECK(std::isinf(got.dist[v]));
                else
                    CHECK(tk::approx_eq(got.dist[v], want[v]));
            }
        }
    }
}

TEST_CASE("mst basics") {
    tk::WeightedGraph tri(3, {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}});
    auto t = tk::mst(tri);
    CHECK(t.cost == 3.0);
    CHECK(t.edges == std::vector<tk::Edge>{{0, 1, 1.0}, {1, 2, 2.0}});

    tk::WeightedGraph single(1, {});
    auto s = tk::mst(single);
    CHECK(s.cost == 0.0);
    CHECK(s.edges.empty());

    tk::WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(tk::mst(split), tk::InfeasibleError);
    CHECK(tk::mst_forest(split).size() == 2);
}

TEST_CASE("mst cost matches spanning-tree enumeration") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        auto g = tk::gen_random_graph(3 + static_cast<int>(seed % 6), 0.5, 0.1, 9.0, seed);
        double best = tk::kInf;
        tk::for_each_spanning_tree(g, [&](const std::vector<int>& ids) {
            double c = 0.0;
            for (int id : ids) c += g.edge(id).w;
            best = std::min(best, c);
        });
        CHECK(tk::approx_eq(tk::mst(g).cost, best));
    }
}

TEST_CASE("metric closure distances, witness paths and triangle inequality") {
    tk::WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto mc = tk::metric_closure(path, {0, 2});
    REQUIRE(mc.graph.vertex_count() == 2);
    CHECK(mc.graph.edge(0).w == 2.0);
    CHECK(mc.path(0, 1) == std::vector<int>{0, 1, 2});

    tk::WeightedGraph split(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(tk::metric_closure(split, {0, 2}), tk::InfeasibleError);

    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = tk::gen_random_graph(4 + static_cast<int>(seed % 6), 0.5, 0.1, 5.0, seed);
        auto closure = tk::metric_closure(g, {});
        const int m = closure.graph.vertex_count();
        // Closure weights never exceed direct edges and are an exact metric.
        for (const tk::Edge& e : g.edges()) {
            auto w = closure.graph.weight_between(e.u, e.v);
            REQUIRE(w);
            CHECK(*w <= e.w + 1e-12);
        }
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    if (a == b || b == c || a == c) continue;
                    double ab = *closure.graph.weight_between(std::min(a, b), std::max(a, b));
                    double bc = *closure.graph.weight_between(std::min(b, c), std::max(b, c));
                    double ac = *closure.graph.weight_between(std::min(a, c), std::max(a, c));
                    CHECK(ac <= ab + bc + 1e-9);
                }
        // Witness paths have the promised length.
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                auto p = closure.path(a, b);
                double len = 0.0;
                for (size_t i = 0; i + 1 < p.size(); ++i)
                    len += *g.weight_between(p[i], p[i + 1]);
                CHECK(tk::approx_eq(len, *closure.graph.weight_between(a, b)));
            }
    }
}

TEST_CASE("operations are deterministic across repeated runs") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = tk::gen_random_graph(8, 0.5, 0.0, 4.0, seed);
        auto a = tk::mst(g);
        auto b = tk::mst(g);
        CHECK(a.edges == b.edges);
        auto s1 = tk::sssp(g, 0);
        auto s2 = tk::sssp(g, 0);
        CHECK(s1.dist == s2.dist);
        CHECK(s1.parent == s2.parent);
    }
}
