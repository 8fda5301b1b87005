#include "test_support.hpp"

namespace {

tk::WeightedGraph unit_path(int n) {
    std::vector<tk::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1, 1.0);
    return tk::WeightedGraph(n, std::move(edges));
}

// Drives a full merge run, checking the exposed-edge weight bound against a
// fixed optimal tree at every step.
void check_exposed_edge_invariant(const tk::WeightedGraph& g, int k) {
    auto opt = tk::oracle_kmst(g, k);
    auto state = tk::ClusterState::singletons(g.vertex_count());
    while (state.max_cluster_size() < k) {
        int exposed = 0;
        for (const tk::Edge& e : opt.edges)
            if (state.cluster_of[e.u] != state.cluster_of[e.v]) ++exposed;
        auto merged = tk::merge_step(state, g);
        if (!merged) break;
        if (exposed > 0) {
            double bound = opt.value / exposed + 1e-9;
            for (auto& [id, tree] : state.trees)
                for (const tk::Edge& e : tree) CHECK(e.w <= bound);
        }
    }
}

}  // namespace

TEST_CASE("merge_collect basics") {
    auto p5 = unit_path(5);
    auto sol = tk::merge_collect(p5, 3);
    CHECK(sol.cost == 2.0);
    CHECK(sol.vertices.size() == 3);

    auto one = tk::merge_collect(p5, 1);
    CHECK(one.cost == 0.0);
    CHECK(one.vertices == std::vector<int>{0});

    CHECK_THROWS_AS(tk::merge_collect(p5, 0), tk::ArgumentError);
    CHECK_THROWS_AS(tk::merge_collect(p5, 9), tk::InfeasibleError);
}

TEST_CASE("merge_collect on the worst-case family stays inside the guarantee") {
    auto inst = tk::gen_fig2(16, 1.0);
    auto sol = tk::merge_collect(inst.graph, 16);
    CHECK(sol.cost >= inst.known_opt - 1e-9);
    CHECK(sol.cost <= 2.0 * 4.0 * inst.known_opt + 1e-9);
}

TEST_CASE("merge_step picks the cheapest inter-cluster edge") {
    tk::WeightedGraph g(3, {{0, 1, 1.0}, {1, 2, 2.0}});
    auto state = tk::ClusterState::singletons(3);
    auto e = tk::merge_step(state, g);
    REQUIRE(e);
    CHECK(e->u == 0);
    CHECK(e->v == 1);
    CHECK(state.cluster_count() == 2);

    // Equal weights: the smaller endpoint pair wins.
    tk::WeightedGraph tie(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto st = tk::ClusterState::singletons(3);
    auto te = tk::merge_step(st, tie);
    REQUIRE(te);
    CHECK(te->u == 0);
    CHECK(te->v == 1);
}

TEST_CASE("merge_step stalls without inter-cluster edges") {
    tk::WeightedGraph split(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    auto state = tk::ClusterState::singletons(4);
    REQUIRE(tk::merge_step(state, split));
    REQUIRE(tk::merge_step(state, split));
    CHECK_FALSE(tk::merge_step(state, split));
}

TEST_CASE("merging a whole unit path accumulates its tree") {
    auto g = unit_path(6);
    auto state = tk::ClusterState::singletons(6);
    while (tk::merge_step(state, g)) {
    }
    REQUIRE(state.cluster_count() == 1);
    double w = 0.0;
    for (const tk::Edge& e : state.trees.begin()->second) w += e.w;
    CHECK(w == 5.0);
}

TEST_CASE("collect_phase examples") {
    // Two singleton clusters joined by weight 5.
    tk::WeightedGraph pair(2, {{0, 1, 5.0}});
    auto st = tk::ClusterState::singletons(2);
    auto oc = tk::collect_phase(st, pair, 2);
    REQUIRE(oc);
    CHECK(oc->radius == 5.0);
    CHECK(oc->solution.edges == std::vector<tk::Edge>{{0, 1, 5.0}});

    // Two 3-vertex clusters at auxiliary distance 4, k = 6.
    tk::WeightedGraph two(6, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {2, 3, 4.0}});
    auto st2 = tk::ClusterState::singletons(6);
    for (int i = 0; i < 4; ++i) REQUIRE(tk::merge_step(st2, two));
    REQUIRE(st2.cluster_count() == 2);
    auto oc2 = tk::collect_phase(st2, two, 6);
    REQUIRE(oc2);
    CHECK(oc2->radius == 4.0);
    CHECK(oc2->solution.vertices.size() == 6);

    // A cluster of size >= k blocks the phase.
    auto oc3 = tk::collect_phase(st2, two, 3);
    CHECK_FALSE(oc3);
}

TEST_CASE("prune_to_size") {
    auto p5 = unit_path(5);
    std::vector<int> vs{0, 1, 2, 3, 4};
    std::vector<tk::Edge> es = p5.edges();
    auto pruned = tk::prune_to_size(p5, vs, es, 3);
    CHECK(pruned.vertices == std::vector<int>{0, 1, 2});
    CHECK(pruned.cost == 2.0);

    auto same = tk::prune_to_size(p5, {1, 2, 3}, {{1, 2, 1.0}, {2, 3, 1.0}}, 3);
    CHECK(same.vertices == std::vector<int>{1, 2, 3});

    // Star with leaf weights 1..6 pruned to 4 keeps the three lightest legs.
    std::vector<tk::Edge> star;
    for (int leaf = 1; leaf <= 6; ++leaf) star.emplace_back(0, leaf, static_cast<double>(leaf));
    tk::WeightedGraph sg(7, star);
    std::vector<int> sv{0, 1, 2, 3, 4, 5, 6};
    auto ps = tk::prune_to_size(sg, sv, sg.edges(), 4);
    CHECK(ps.cost == 6.0);
    CHECK(ps.vertices == std::vector<int>{0, 1, 2, 3});

    CHECK_THROWS_AS(tk::prune_to_size(p5, {0, 1}, {{0, 1, 1.0}}, 3), tk::ArgumentError);
}

TEST_CASE("merge loop ends with a cluster between k and 2k") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = tk::gen_random_graph(10, 0.4, 0.0, 6.0, seed);
        for (int k : {3, 5, 7}) {
            auto state = tk::ClusterState::singletons(10);
            while (state.max_cluster_size() < k)
                if (!tk::merge_step(state, g)) break;
            CHECK(state.max_cluster_size() >= k);
            CHECK(state.max_cluster_size() < 2 * k);
        }
    }
}

TEST_CASE("exposed-edge weight bound holds along merge traces") {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
        auto g = tk::gen_random_graph(9, 0.45, 0.0, 7.0, seed);
        check_exposed_edge_invariant(g, 4);
        check_exposed_edge_invariant(g, 7);
    }
}

TEST_CASE("approximation ratio respects 2*sqrt(k) on random graphs") {
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = tk::gen_random_graph(5 + static_cast<int>(seed % 6), 0.45, 0.0, 8.0, seed);
        auto all = tk::oracle_kmst_all_sizes(g);
        for (int k = 1; k <= g.vertex_count(); ++k) {
            if (!all[k].feasible()) continue;
            auto sol = tk::merge_collect(g, k);
            CHECK(static_cast<int>(sol.vertices.size()) == k);
            CHECK(sol.cost <= 2.0 * std::sqrt(static_cast<double>(k)) * all[k].value + 1e-9);
            CHECK(sol.cost >= all[k].value - 1e-9);
        }
    }
}

TEST_CASE("k_steiner basics") {
    tk::WeightedGraph path(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    auto sol = tk::k_steiner(path, {0, 2}, 2);
    CHECK(sol.cost == 2.0);
    CHECK(sol.vertices == std::vector<int>{0, 1, 2});

    tk::WeightedGraph split(3, {{0, 1, 1.0}});
    CHECK_THROWS_AS(tk::k_steiner(split, {0, 2}, 2), tk::InfeasibleError);
    CHECK_THROWS_AS(tk::k_steiner(path, {0, 2}, 3), tk::ArgumentError);
}

TEST_CASE("k_steiner with all vertices as terminals stays near merge_collect") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = tk::gen_random_graph(8, 0.5, 0.1, 6.0, seed);
        std::vector<int> terms(8);
        std::iota(terms.begin(), terms.end(), 0);
        for (int k : {3, 5}) {
            auto st = tk::k_steiner(g, terms, k);
            auto mc = tk::merge_collect(g, k);
            CHECK(st.cost <= 2.0 * mc.cost + 1e-9);
            CHECK(static_cast<int>(st.vertices.size()) >= k);
        }
    }
}

TEST_CASE("k_steiner ratio against the terminal-aware oracle") {
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = tk::gen_random_graph(9, 0.45, 0.1, 6.0, seed);
        std::vector<int> terms{0, 2, 4, 6, 8};
        int k = 3;
        auto sol = tk::k_steiner(g, terms, k);
        int spanned = 0;
        for (int v : sol.vertices)
            if (std::binary_search(terms.begin(), terms.end(), v)) ++spanned;
        CHECK(spanned >= k);
        auto opt = tk::oracle_kmst_terminals(g, terms, k);
        CHECK(sol.cost <= 4.0 * std::sqrt(3.0) * opt.value + 1e-9);
    }
}

TEST_CASE("merge_collect solves disconnected graphs per component") {
    // Two components: a cheap triangle and an expensive path; k = 3 fits both.
    tk::WeightedGraph g(7, {{0, 1, 1.0},
                            {1, 2, 1.0},
                            {0, 2, 1.0},
                            {3, 4, 9.0},
                            {4, 5, 9.0},
                            {5, 6, 9.0}});
    auto sol = tk::merge_collect(g, 3);
    CHECK(sol.cost == 2.0);
    CHECK(sol.vertices == std::vector<int>{0, 1, 2});
    auto four = tk::merge_collect(g, 4);  // only the path side can host 4
    CHECK(four.cost == 27.0);
}

TEST_CASE("merge_collect is deterministic") {
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        auto g = tk::gen_random_graph(10, 0.4, 0.0, 5.0, seed);
        auto a = tk::merge_collect(g, 5);
        auto b = tk::merge_collect(g, 5);
        CHECK(a.edges == b.edges);
        CHECK(a.vertices == b.vertices);
    }
}
