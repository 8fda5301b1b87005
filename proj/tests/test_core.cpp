#include "test_support.hpp"

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(tk::WeightedGraph(2, {{0, 0, 1.0}}), tk::ArgumentError);
    CHECK_THROWS_AS(tk::WeightedGraph(2, {{0, 2, 1.0}}), tk::ArgumentError);
    CHECK_THROWS_AS(tk::WeightedGraph(2, {{0, 1, -1.0}}), tk::ArgumentError);
    CHECK_THROWS_AS(tk::WeightedGraph(2, {{0, 1, tk::kInf}}), tk::ArgumentError);
    CHECK_THROWS_AS(tk::WeightedGraph(2, {{0, 1, 1.0}, {1, 0, 2.0}}), tk::ArgumentError);

    tk::GraphOptions keep;
    keep.keep_min_parallel = true;
    tk::WeightedGraph g(2, {{0, 1, 3.0}, {1, 0, 2.0}}, keep);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0).w == 2.0);
}

TEST_CASE("edges normalize endpoints") {
    tk::Edge e(5, 2, 1.0);
    CHECK(e.u == 2);
    CHECK(e.v == 5);
}

TEST_CASE("tree_metrics on simple shapes") {
    // Star with three unit legs: diameter 2.
    auto star = tk::tree_metrics({0, 1, 2, 3}, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}});
    CHECK(star.cost == 3.0);
    CHECK(star.diameter == 2.0);
    CHECK(star.degree_sequence == std::vector<int>{3, 1, 1, 1});

    auto single = tk::tree_metrics({4, 9}, {{4, 9, 7.0}});
    CHECK(single.cost == 7.0);
    CHECK(single.diameter == 7.0);

    CHECK_THROWS_AS(tk::tree_metrics({0, 1, 2}, {{0, 1, 1.0}}), tk::ValidationError);
    CHECK_THROWS_AS(tk::tree_metrics({0, 1, 2, 3}, {{0, 1, 1.0}, {0, 1, 1.0}, {2, 3, 1.0}}),
                    tk::ValidationError);
}

TEST_CASE("tree_metrics diameter equals brute-force path maximum") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        tk::Rng rng(seed);
        int n = 2 + static_cast<int>(seed % 9);
        // Random tree: attach each vertex to a random earlier one.
        std::vector<tk::Edge> edges;
        for (int v = 1; v < n; ++v)
            edges.emplace_back(rng.uniform_int(0, v - 1), v, rng.uniform(0.0, 5.0));
        std::vector<int> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        auto m = tk::tree_metrics(vs, edges);
        double brute = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                brute = std::max(brute, tree_path_length(edges, a, b));
        CHECK(tk::approx_eq(m.diameter, brute));
    }
}

TEST_CASE("format_exact round-trips doubles") {
    tk::Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.uniform(-1e6, 1e6);
        CHECK(std::stod(tk::format_exact(x)) == x);
    }
}

TEST_CASE("distance matrix validation") {
    tk::DistanceMatrix m(3);
    m.set(0, 1, 2.0);
    m.set(1, 2, 1.0);
    m.set(0, 2, 5.0);
    CHECK_NOTHROW(m.validate());
    m.at(0, 1) = 3.0;  // breaks symmetry
    CHECK_THROWS_AS(m.validate(), tk::ValidationError);
}

TEST_CASE("checked_add refuses infinity") {
    CHECK(tk::checked_add(1.0, 2.0) == 3.0);
    CHECK_THROWS_AS(tk::checked_add(1.0, tk::kInf), tk::ValidationError);
}
