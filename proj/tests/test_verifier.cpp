#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oor/arrangement.hpp"
#include "oor/generators.hpp"
#include "oor/verifier.hpp"

using namespace oor;

namespace {

CircularOrder identity_order(int n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    return CircularOrder(seq);
}

std::vector<std::vector<Vertex>> all_orders(int n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<std::vector<Vertex>> out;
    do out.push_back(seq);
    while (std::next_permutation(seq.begin() + 1, seq.end()));
    return out;
}

// Plain affine oracle helpers over rationals.
Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}
bool on_closed(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    return cross(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
           std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}
bool closed_meet(const RatPoint& a, const RatPoint& b, const RatPoint& c, const RatPoint& d) {
    const int d1 = cross(a, b, c).sign(), d2 = cross(a, b, d).sign(), d3 = cross(c, d, a).sign(), d4 = cross(c, d, b).sign();
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    return on_closed(c, a, b) || on_closed(d, a, b) || on_closed(a, c, d) || on_closed(b, c, d);
}
// Ray parity; the caller guarantees p is off the boundary.
bool parity_inside(const std::vector<RatPoint>& ring, const RatPoint& p) {
    bool inside = false;
    for (size_t i = 0; i < ring.size(); ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        if ((a[1] > p[1]) != (b[1] > p[1])) {
            const Rat x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
            if (x > p[0]) inside = !inside;
        }
    }
    return inside;
}
bool ring_simple(const std::vector<RatPoint>& ring) {
    const size_t k = ring.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const bool next = j == i + 1, wrap = i == 0 && j == k - 1;
            const auto &a = ring[i], &b = ring[(i + 1) % k], &c = ring[j], &d = ring[(j + 1) % k];
            if (!next && !wrap) {
                if (closed_meet(a, b, c, d)) return false;
            } else {
                // Adjacent sides may only share their common corner.
                const auto& shared = next ? b : a;
                const auto& far1 = next ? a : b;
                const auto& far2 = next ? d : c;
                if (cross(shared, far1, far2) == 0 && (far1[0] - shared[0]) * (far2[0] - shared[0]) +
                                                                  (far1[1] - shared[1]) * (far2[1] - shared[1]) >
                                                              0)
                    return false;
            }
        }
    return true;
}

void check_obstacle(const Graph& g, const Placement& pl, const VerificationReport& report, const ObstaclePolygon& obs) {
    REQUIRE(obs.ring.size() >= 7);
    CHECK(ring_simple(obs.ring));
    const auto& pts = pl.coords;
    for (const auto& [u, v] : g.edges())
        for (size_t i = 0; i < obs.ring.size(); ++i)
            CHECK_FALSE(closed_meet(pts[u], pts[v], obs.ring[i], obs.ring[(i + 1) % obs.ring.size()]));
    for (const auto& p : pts) CHECK_FALSE(parity_inside(obs.ring, p));
    for (const auto& w : report.witnesses) {
        const RatPoint p = affine_approx(point_from_json<Rat>(w.point));
        CHECK(parity_inside(obs.ring, p));
    }
}

}  // namespace

TEST_CASE("triangle is a reducible representation in every mode") {
    const Graph k3 = complete_graph(3);
    const auto r1 = verify_oor(k3, rational_placement({{Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(1), Rat(5)}}));
    const auto r2 = verify_oor(k3, regular_placement(identity_order(3)));
    const auto r3 = verify_oor(k3, cocircular_placement(identity_order(3), true));
    for (const auto* r : {&r1, &r2, &r3}) {
        CHECK(r->valid);
        CHECK(r->reducible);
        CHECK(r->vertices_on_outer_face);
        CHECK(r->failures.empty());
    }
    CHECK(r2.mode == PlacementMode::RegularNGon);
}

TEST_CASE("hexagon in cycle order misses the outer face with all nine chords") {
    const auto r = verify_oor(cycle_graph(6), regular_placement(identity_order(6)));
    CHECK_FALSE(r.valid);
    CHECK(r.failures.size() == 9);
    CHECK(r.reducible);
    const auto gaps = verify_convex_gaps(cycle_graph(6), regular_placement(identity_order(6)));
    CHECK_FALSE(gaps.valid);
    CHECK(gaps.failures.size() == 9);
}

TEST_CASE("some regular order of C6 is a representation") {
    const Graph c6 = cycle_graph(6);
    int valid = 0;
    for (const auto& seq : all_orders(6)) {
        const auto pl = regular_placement(CircularOrder(seq));
        const auto r = verify_oor(c6, pl);
        CHECK(r.valid == verify_convex_gaps(c6, pl).valid);
        valid += r.valid;
    }
    CHECK(valid > 0);
}

TEST_CASE("W6 has no regular representation and the centre argument holds") {
    const Graph w6 = wheel_graph(6);
    int centre_cases = 0;
    for (const auto& seq : all_orders(6)) {
        const auto pl = regular_placement(CircularOrder(seq));
        const auto r = verify_oor(w6, pl);
        CHECK_FALSE(r.valid);
        for (const auto& f : r.failures) {
            const int steps = (pl.slots[f.u] - pl.slots[f.v] + 6) % 6;
            centre_cases += steps == 3;
        }
    }
    CHECK(centre_cases > 0);
}

TEST_CASE("G(8,3) with the cycle consecutive on the octagon") {
    const Graph g = kn_minus_ck(8, 3);
    const auto pl = regular_placement(identity_order(8));
    const auto r = verify_oor(g, pl);
    CHECK(r.valid);
    CHECK(verify_convex_gaps(g, pl).valid);
}

TEST_CASE("consecutive neighbours property") {
    const auto any = CircularOrder({3, 1, 0, 4, 2});
    CHECK(check_cnp(complete_graph(5), any, {}).holds);

    const Graph g84 = kn_minus_ck(8, 4);
    const CircularOrder sigma({0, 1, 3, 2, 4, 5, 6, 7});
    const auto r = check_cnp(g84, sigma, {0, 2, 4, 5, 6, 7});
    CHECK(r.holds);
    CHECK(r.arcs.size() == 6);

    // Cycle order on C4: the diagonal 0-2 hides behind edges 0-1 and 0-3.
    const auto c4 = check_cnp(cycle_graph(4), identity_order(4), {0, 1, 2, 3});
    CHECK_FALSE(c4.holds);
    CHECK(c4.broken.has_value());
    CHECK_FALSE(verify_oor(cycle_graph(4), regular_placement(identity_order(4))).valid);

    const auto p4 = check_cnp(path_graph(4), CircularOrder({0, 2, 1, 3}), {0});
    CHECK_FALSE(p4.holds);
    REQUIRE(p4.uncovered);
    CHECK(*p4.uncovered == Edge{1, 3});

    // A star centre whose leaves are split by another vertex.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 3);
    const auto split = check_cnp(g, identity_order(5), {0});
    CHECK_FALSE(split.holds);
    CHECK(split.broken == std::optional<Vertex>(0));
    CHECK_THROWS_AS(check_cnp(g, identity_order(4), {0}), InputError);
}

TEST_CASE("gap regions agree with the arrangement on random cocircular placements") {
    Rng rng(4242);
    std::uniform_int_distribution<int> size(3, 7);
    std::uniform_real_distribution<double> density(0.2, 0.9);
    int agree = 0, valid = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = size(rng);
        const Graph g = random_graph(n, density(rng), rng);
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        const auto pl = cocircular_placement(CircularOrder(seq), true, trial);
        const auto a = verify_oor(g, pl);
        const auto b = verify_convex_gaps(g, pl);
        agree += a.valid == b.valid;
        valid += a.valid;
        CHECK(a.valid == b.valid);
        CHECK(a.reducible == b.reducible);
    }
    CHECK(agree == 120);
    CHECK(valid > 0);
}

TEST_CASE("report witnesses re-validate in a fresh subdivision") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(7, 0.5, rng);
        std::vector<Vertex> seq(7);
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        for (const bool regular : {false, true}) {
            const auto pl = regular ? regular_placement(CircularOrder(seq)) : cocircular_placement(CircularOrder(seq), true);
            const auto r = verify_oor(g, pl);
            CHECK(r.witnesses.size() + r.failures.size() == g.non_edges().size());
            if (regular) {
                const auto pts = pl.regular_points();
                std::vector<LabeledSegment<CycloReal>> segs;
                for (const auto& [u, v] : g.edges()) segs.push_back({{pts[u], pts[v]}, static_cast<int>(segs.size())});
                const PlanarSubdivision<CycloReal> sub(segs, pts);
                for (const auto& w : r.witnesses) {
                    const Location loc = sub.classify_point(point_from_json<CycloReal>(w.point));
                    CHECK(loc.kind == LocationKind::Face);
                    CHECK(loc.id == PlanarSubdivision<CycloReal>::kUnbounded);
                    CHECK(on_open_segment(point_from_json<CycloReal>(w.point), pts[w.u], pts[w.v]));
                }
            } else {
                const auto pts = pl.rational_points();
                std::vector<LabeledSegment<Rat>> segs;
                for (const auto& [u, v] : g.edges()) segs.push_back({{pts[u], pts[v]}, static_cast<int>(segs.size())});
                const PlanarSubdivision<Rat> sub(segs, pts);
                for (const auto& w : r.witnesses) {
                    const Location loc = sub.classify_point(point_from_json<Rat>(w.point));
                    CHECK(loc.kind == LocationKind::Face);
                    CHECK(loc.id == PlanarSubdivision<Rat>::kUnbounded);
                    CHECK(on_open_segment(point_from_json<Rat>(w.point), pts[w.u], pts[w.v]));
                }
            }
        }
    }
}

TEST_CASE("consecutive neighbours suffice for convex representations") {
    Rng rng(77);
    int tested = 0;
    for (int trial = 0; trial < 400 && tested < 40; ++trial) {
        const int n = 4 + trial % 4;
        const Graph g = random_graph(n, 0.55, rng);
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        const CircularOrder order(seq);
        std::vector<Vertex> cover;
        for (Vertex v = 0; v < n; ++v)
            if (check_cnp(g, order, {v}).arcs.size() == 1) cover.push_back(v);
        if (!check_cnp(g, order, cover).holds) continue;
        ++tested;
        CHECK(verify_oor(g, regular_placement(order)).valid);
        CHECK(verify_oor(g, cocircular_placement(order, true, trial)).valid);
    }
    CHECK(tested >= 20);
}

TEST_CASE("restriction keeps validity") {
    const Graph c6 = cycle_graph(6);
    for (const auto& seq : all_orders(6)) {
        const auto pl = regular_placement(CircularOrder(seq));
        const auto r = verify_oor(c6, pl);
        if (!r.valid || !r.reducible) continue;
        const auto [same, same_pl] = restrict_representation(c6, pl, r, {}, {});
        CHECK(same == c6);
        const auto [less, less_pl] = restrict_representation(c6, pl, r, {{0, 1}}, {});
        CHECK(less.size() == 5);
        CHECK(verify_oor(less, less_pl).valid);
        const auto [fewer, fewer_pl] = restrict_representation(c6, pl, r, {}, {2});
        CHECK(fewer.order() == 5);
        CHECK(fewer_pl.sides == 6);
        CHECK(verify_oor(fewer, fewer_pl).valid);
        CHECK_THROWS_AS(restrict_representation(c6, pl, r, {{0, 3}}, {}), InputError);
        break;
    }
    const auto bad = verify_oor(c6, regular_placement(identity_order(6)));
    CHECK_THROWS_AS(restrict_representation(c6, regular_placement(identity_order(6)), bad, {}, {}), DomainError);
}

TEST_CASE("obstacle polygon around a triangle") {
    const Graph k3 = complete_graph(3);
    const auto pl = rational_placement({{Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(4)}});
    const auto r = verify_oor(k3, pl);
    const auto obs = materialize_obstacle(k3, pl, r);
    check_obstacle(k3, pl, r, obs);
    CHECK(obs.ring.size() == 12);
    const auto j = to_json(obs);
    CHECK(j["ring"].size() == obs.ring.size());
}

TEST_CASE("obstacle polygons for valid convex representations") {
    Rng rng(31337);
    int built = 0;
    for (int trial = 0; trial < 200 && built < 15; ++trial) {
        const int n = 4 + trial % 5;
        const Graph g = random_graph(n, 0.6, rng);
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        std::shuffle(seq.begin(), seq.end(), rng);
        const auto pl = cocircular_placement(CircularOrder(seq), true, trial);
        const auto r = verify_oor(g, pl);
        if (!r.valid || !is_connected(g)) continue;
        const auto obs = materialize_obstacle(g, pl, r);
        check_obstacle(g, pl, r, obs);
        ++built;
        // Regular placements go through snapped coordinates.
        const auto reg = regular_placement(CircularOrder(seq));
        const auto rr = verify_oor(g, reg);
        if (rr.valid) CHECK(ring_simple(materialize_obstacle(g, reg, rr).ring));
    }
    CHECK(built == 15);
    const auto bad = verify_oor(cycle_graph(6), regular_placement(identity_order(6)));
    CHECK_THROWS_AS(materialize_obstacle(cycle_graph(6), regular_placement(identity_order(6)), bad), DomainError);
}

TEST_CASE("input validation") {
    const Graph k2 = complete_graph(2);
    CHECK_THROWS_AS(verify_oor(k2, rational_placement({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}})), InputError);
    CHECK_THROWS_AS(verify_oor(complete_graph(3), rational_placement({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}})), InputError);
    // Collinear points are not in convex position.
    const auto line = rational_placement({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(3)}});
    CHECK_FALSE(convex_order(line).has_value());
    CHECK_THROWS_AS(verify_convex_gaps(Graph(4), line), DomainError);
    // Overlapping edges are rejected.
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    const auto overlap = rational_placement({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(3), Rat(0)}});
    CHECK_THROWS_AS(verify_oor(g, overlap), DomainError);
}

TEST_CASE("a vertex on a non-edge does not decide visibility by itself") {
    // Path 0-1-2 on a line plus an apex: the non-edge 0-2 runs along the edges.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    const auto pl = rational_placement({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)}, {Rat(1), Rat(2)}});
    const auto r = verify_oor(g, pl);
    CHECK_FALSE(r.valid);
    // Without the middle edges the same segment lies in the outer face.
    Graph h(4);
    h.add_edge(0, 3);
    h.add_edge(2, 3);
    h.add_edge(1, 3);
    CHECK(verify_oor(h, pl).valid);
}

TEST_CASE("report json") {
    const auto r = verify_oor(path_graph(4), regular_placement(CircularOrder({0, 2, 1, 3})));
    const auto j = to_json(r);
    for (const char* key : {"valid", "failures", "reducible", "witnesses", "mode", "n", "vertices_on_outer_face", "seconds"})
        CHECK(j.contains(key));
    CHECK(j["mode"] == "regular-ngon");
    CHECK(j["n"] == 4);
    CHECK(j["failures"].size() + j["witnesses"].size() == 3);
}
