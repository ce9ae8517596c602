#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oor/constructors.hpp"
#include "oor/generators.hpp"
#include "oor/verifier.hpp"

using namespace oor;

namespace {

std::vector<Vertex> vertices_of(const CircularOrder& o) { return o.sequence(); }

// Relative order of `subset` inside `order`, rotated to start at subset[0].
std::vector<Vertex> relative_order(const CircularOrder& order, const std::vector<Vertex>& subset) {
    std::vector<Vertex> out;
    for (int i = 0; i < order.size(); ++i) {
        const Vertex v = order.at(order.position(subset[0]) + i);
        if (std::find(subset.begin(), subset.end(), v) != subset.end()) out.push_back(v);
    }
    return out;
}

void check_regular(const Graph& g, const CircularOrder& order, bool reducible) {
    const auto r = verify_oor(g, regular_placement(order));
    CHECK(r.valid);
    if (reducible) CHECK(r.reducible);
}

void check_cocircular(const Graph& g, const CircularOrder& order, int placements) {
    for (int s = 0; s < placements; ++s) CHECK(verify_oor(g, cocircular_placement(order, true, 1000 + s)).valid);
}

}  // namespace

TEST_CASE("two-tree construction on a triangle") {
    const auto plan = two_tree_plan(complete_graph(3));
    const auto [pl, trace] = construct_two_tree(plan);
    const auto r = verify_oor(complete_graph(3), pl);
    CHECK(r.valid);
    CHECK(r.reducible);
    CHECK(r.vertices_on_outer_face);
    CHECK(pl.coords[plan.base.first][1] == pl.coords[plan.base.second][1]);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].expanded == -1);
    CHECK(two_tree_invariant_violations(plan.replay(), trace.steps[0]).empty());
}

TEST_CASE("two-tree construction keeps its invariants on random 2-trees") {
    Rng rng(2024);
    for (int n : {4, 6, 9, 13, 18, 25}) {
        CAPTURE(n);
        const Graph g = random_two_tree(n, rng);
        const auto plan = two_tree_plan(g);
        REQUIRE(plan.fill.empty());
        const auto [pl, trace] = construct_two_tree(plan);
        const auto r = verify_oor(g, pl);
        CHECK(r.valid);
        CHECK(r.reducible);
        CHECK(r.vertices_on_outer_face);
        // Base edge horizontal, everything else strictly above it.
        const Rat base_y = pl.coords[plan.base.first][1];
        CHECK(pl.coords[plan.base.second][1] == base_y);
        for (Vertex v = 0; v < n; ++v)
            if (v != plan.base.first && v != plan.base.second) CHECK(pl.coords[v][1] > base_y);
        const Graph tree = plan.replay();
        int expanded_or_base = 0;
        for (const auto& step : trace.steps) {
            const auto bad = two_tree_invariant_violations(tree, step);
            CHECK_MESSAGE(bad.empty(), (bad.empty() ? "" : bad.front()));
            ++expanded_or_base;
            // Each new group lies on one horizontal line.
            for (Vertex w : step.added)
                if (step.expanded >= 0) CHECK(step.coords[w][1] == step.line_height);
        }
        CHECK(trace.steps.back().present.size() == static_cast<size_t>(n));
        CHECK(expanded_or_base >= 1);
    }
}

TEST_CASE("invariant checker rejects broken scaffolds") {
    const Graph g = fan_graph(5);
    const auto plan = two_tree_plan(g);
    const auto [pl, trace] = construct_two_tree(plan);
    auto step = trace.steps.back();
    REQUIRE(!step.arcs.empty());
    // An active region swallowing the whole drawing.
    REQUIRE(step.arcs.back().active);
    step.arcs.back().arc.radius = 100;
    CHECK_FALSE(two_tree_invariant_violations(plan.replay(), step).empty());
    // A vertex moved below the base edge breaks the outer-face conditions.
    auto low = trace.steps.back();
    const Vertex top = low.arcs.back().vertex;
    low.coords[top] = {Rat(1, 2), Rat(-1)};
    CHECK_FALSE(two_tree_invariant_violations(plan.replay(), low).empty());
}

TEST_CASE("partial 2-trees through completion and deletion") {
    const auto p5 = path_graph(5);
    const auto [pl, trace] = construct_two_tree(two_tree_plan(p5));
    const auto r = verify_oor(p5, pl);
    CHECK(r.valid);
    CHECK(r.reducible);
    Rng rng(77);
    for (int t = 0; t < 8; ++t) {
        const Graph g = random_partial_two_tree(6 + t, 0.3, rng);
        const auto [q, tr] = construct_two_tree(two_tree_plan(g));
        CHECK(verify_oor(g, q).valid);
    }
    StackingPlan bad;
    bad.n = 3;
    bad.events = {{2, {0, 2}}};
    CHECK_THROWS_AS(construct_two_tree(bad), InputError);
}

TEST_CASE("cactus orders") {
    const Graph c5 = cycle_graph(5);
    const auto bd = block_cut_tree(c5);
    const auto order = construct_cactus_order(c5, bd);
    const auto& cyc = bd.blocks.at(0).vertices;
    REQUIRE(cyc.size() == 5);
    CHECK(relative_order(order, cyc) == std::vector<Vertex>{cyc[0], cyc[2], cyc[4], cyc[3], cyc[1]});
    check_regular(c5, order, true);

    const Graph edge = path_graph(2);
    CHECK(construct_cactus_order(edge, block_cut_tree(edge)).size() == 2);

    Graph bowtie(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) bowtie.add_edge(u, v);
    check_regular(bowtie, construct_cactus_order(bowtie, block_cut_tree(bowtie)), true);

    CHECK_THROWS_AS(construct_cactus_order(complete_graph(4), block_cut_tree(complete_graph(4))), DomainError);

    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_cactus(6 + t % 9, rng);
        const auto o = construct_cactus_order(g, block_cut_tree(g));
        CAPTURE(t);
        check_regular(g, o, true);
        if (t < 4) check_cocircular(g, o, 10);
    }
}

TEST_CASE("cactus forests") {
    Graph g(9);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}, {6, 7}}) g.add_edge(u, v);
    const auto o = construct_cactus_order(g, block_cut_tree(g));
    CHECK(o.size() == 9);
    check_regular(g, o, false);
}

TEST_CASE("grid orders") {
    const auto five = construct_grid_order(5, 2);
    CHECK(std::vector<Vertex>(five.sequence().begin(), five.sequence().begin() + 5) ==
          std::vector<Vertex>{4, 2, 0, 1, 3});
    const auto four = construct_grid_order(4, 2);
    CHECK(std::vector<Vertex>(four.sequence().begin(), four.sequence().begin() + 4) ==
          std::vector<Vertex>{3, 1, 0, 2});
    CHECK_THROWS_AS(construct_grid_order(1, 3), InputError);

    for (auto [k, l] : std::vector<std::pair<int, int>>{{5, 3}, {2, 2}, {3, 4}, {4, 3}, {6, 2}}) {
        CAPTURE(k);
        CAPTURE(l);
        const Graph g = grid_graph(k, l);
        const auto o = construct_grid_order(k, l);
        // Copy edges span exactly k positions.
        for (int j = 0; j + 1 < l; ++j)
            for (int i = 0; i < k; ++i) CHECK(o.steps(j * k + i, (j + 1) * k + i) == k);
        check_regular(g, o, true);
    }
}

TEST_CASE("outerpath orders") {
    const Graph tri = complete_graph(3);
    CHECK(construct_outerpath_order(validate_outerpath(tri, CircularOrder({0, 1, 2}))).size() == 3);

    const Graph fan = fan_graph(6);
    const auto fan_op = validate_outerpath(fan, CircularOrder({0, 1, 2, 3, 4, 5}));
    check_regular(fan, construct_outerpath_order(fan_op), true);

    Rng rng(99);
    for (int t = 0; t < 20; ++t) {
        const int n = 4 + t % 9;
        const Graph g = random_maximal_outerpath(n, rng);
        std::vector<Vertex> ham(n);
        std::iota(ham.begin(), ham.end(), 0);
        const auto op = validate_outerpath(g, CircularOrder(ham));
        const auto o = construct_outerpath_order(op);
        CAPTURE(t);
        check_regular(g, o, true);
        if (t < 4) check_cocircular(g, o, 10);
    }
    // Non-maximal: drop a chord; the completed structure still yields an order.
    for (int t = 0; t < 6; ++t) {
        const int n = 6 + t;
        Graph g = random_maximal_outerpath(n, rng);
        for (const auto& [u, v] : g.edges())
            if (v - u != 1 && !(u == 0 && v == n - 1)) {
                g.remove_edge(u, v);
                break;
            }
        std::vector<Vertex> ham(n);
        std::iota(ham.begin(), ham.end(), 0);
        check_regular(g, construct_outerpath_order(validate_outerpath(g, CircularOrder(ham))), false);
    }
}

TEST_CASE("caterpillar complement orders") {
    const Graph star = star_graph(4);
    const auto so = construct_caterpillar_complement_order(star);
    check_regular(complement(star), so, false);

    const Graph p6 = path_graph(6);
    const auto po = construct_caterpillar_complement_order(p6);
    const auto seq = vertices_of(po);
    CHECK((seq == std::vector<Vertex>{0, 1, 2, 3, 4, 5} || seq == std::vector<Vertex>{5, 4, 3, 2, 1, 0}));
    check_regular(complement(p6), po, false);

    CHECK_THROWS_AS(construct_caterpillar_complement_order(spider_y()), DomainError);

    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const Graph tree = random_caterpillar(5 + t % 8, rng);
        const auto o = construct_caterpillar_complement_order(tree);
        CAPTURE(t);
        check_regular(complement(tree), o, false);
        if (t < 4) check_cocircular(complement(tree), o, 10);
    }
}

TEST_CASE("complete graph minus a cycle") {
    for (int k : {3, 4, 8}) {
        CAPTURE(k);
        const auto [order, cover] = construct_kn_minus_ck_order(8, k);
        const Graph g = kn_minus_ck(8, k);
        CHECK(check_cnp(g, order, cover).holds);
        check_regular(g, order, false);
    }
    const auto four = construct_kn_minus_ck_order(8, 4);
    CHECK(std::vector<Vertex>(four.order.sequence().begin(), four.order.sequence().begin() + 4) ==
          std::vector<Vertex>{0, 1, 3, 2});
    CHECK(four.cover.size() == 6);
    const auto three = construct_kn_minus_ck_order(8, 3);
    CHECK(three.order.is_contiguous({0, 1, 2}));
    for (int n = 5; n <= 9; ++n) {
        check_regular(kn_minus_ck(n, 3), construct_kn_minus_ck_order(n, 3).order, false);
        check_regular(kn_minus_ck(n, 4), construct_kn_minus_ck_order(n, 4).order, false);
        check_regular(kn_minus_ck(n, n), construct_kn_minus_ck_order(n, n).order, false);
    }
    CHECK_THROWS_AS(construct_kn_minus_ck_order(8, 5), DomainError);
    CHECK_THROWS_AS(construct_kn_minus_ck_order(8, 2), InputError);
}

TEST_CASE("orders from consecutive-neighbour certificates") {
    // In cycle order N(0) = {1,3} is split by 0 and 2; interleaving works.
    const Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(construct_cnp_order(c4, CircularOrder({0, 1, 2, 3})), DomainError);
    check_regular(c4, construct_cnp_order(c4, CircularOrder({0, 2, 1, 3})), false);
    const Graph k5 = complete_graph(5);
    check_regular(k5, construct_cnp_order(k5, CircularOrder({3, 1, 4, 0, 2})), false);
    // Convex bipartite: U = {0,1,2,3} in order, each w in W sees an interval.
    Graph cb(7);
    for (auto [u, v] : std::vector<Edge>{{0, 4}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {2, 6}, {3, 6}}) cb.add_edge(u, v);
    bool threw = false;
    try {
        check_regular(cb, construct_cnp_order(cb, CircularOrder({0, 4, 1, 5, 2, 6, 3})), false);
    } catch (const DomainError&) {
        threw = true;
    }
    const bool holds = [&] {
        std::vector<Vertex> all(7);
        std::iota(all.begin(), all.end(), 0);
        return check_cnp(cb, CircularOrder({0, 4, 1, 5, 2, 6, 3}), all).holds;
    }();
    CHECK(threw == !holds);
    CHECK_THROWS_AS(construct_cnp_order(cycle_graph(6), CircularOrder({0, 2, 4, 1, 3, 5})), DomainError);
}
