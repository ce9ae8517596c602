#include "oor/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "oor/arrangement.hpp"

namespace oor {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class S>
std::vector<HPoint<S>> points_of(const Placement& pl);
template <>
std::vector<HPoint<Rat>> points_of<Rat>(const Placement& pl) {
    return pl.rational_points();
}
template <>
std::vector<HPoint<CycloReal>> points_of<CycloReal>(const Placement& pl) {
    return pl.regular_points();
}

std::string pair_name(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

template <class S>
void require_distinct(const std::vector<HPoint<S>>& pts) {
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return compare_xy(pts[a], pts[b]) < 0; });
    for (size_t k = 1; k < idx.size(); ++k)
        if (same_point(pts[idx[k - 1]], pts[idx[k]]))
            throw InputError("vertices " + pair_name(std::min(idx[k - 1], idx[k]), std::max(idx[k - 1], idx[k])) +
                             " coincide");
}

template <class S>
std::vector<HPoint<S>> checked_points(const Graph& g, const Placement& pl) {
    if (pl.size() != g.order())
        throw InputError("placement has " + std::to_string(pl.size()) + " points for " + std::to_string(g.order()) +
                         " vertices");
    auto pts = points_of<S>(pl);
    require_distinct(pts);
    return pts;
}

template <class S>
std::vector<LabeledSegment<S>> edge_segments(const std::vector<Edge>& edges, const std::vector<HPoint<S>>& pts) {
    std::vector<LabeledSegment<S>> out;
    for (size_t i = 0; i < edges.size(); ++i)
        out.push_back({{pts[edges[i].first], pts[edges[i].second]}, static_cast<int>(i)});
    return out;
}

template <class S>
PairWitness witness(Vertex u, Vertex v, const HPoint<S>& p) {
    const auto [x, y] = p.to_double();
    return {u, v, point_to_json(p), x, y};
}

template <class S>
void outer_face_conditions(const Graph& g, const PlanarSubdivision<S>& sub, const std::vector<HPoint<S>>& pts,
                           VerificationReport& r) {
    const auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        if (const auto w = sub.segment_on_outer_face(static_cast<int>(i)))
            r.edge_witnesses.push_back(witness(edges[i].first, edges[i].second, *w));
        else
            r.edges_off_outer_face.push_back(edges[i]);
    }
    r.reducible = r.edges_off_outer_face.empty();
    for (Vertex v = 0; v < g.order(); ++v)
        if (!sub.node_on_outer_face(*sub.find_node(pts[v]))) r.vertices_off_outer_face.push_back(v);
    r.vertices_on_outer_face = r.vertices_off_outer_face.empty();
}

template <class S>
VerificationReport verify_exact(const Graph& g, const Placement& pl) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.mode = pl.mode;
    r.n = g.order();
    r.method = "arrangement";
    const auto pts = checked_points<S>(g, pl);
    const PlanarSubdivision<S> sub(edge_segments(g.edges(), pts), pts);
    for (const auto& [u, v] : g.non_edges()) {
        const auto contact = sub.segment_outer_contact(pts[u], pts[v]);
        if (contact.meets_open_outer) r.witnesses.push_back(witness(u, v, contact.witnesses.front()));
        else r.failures.push_back({u, v, "open segment does not meet the outer face"});
    }
    r.valid = r.failures.empty();
    outer_face_conditions(g, sub, pts, r);
    r.seconds = seconds_since(t0);
    return r;
}

template <class S>
VerificationReport verify_gaps_exact(const Graph& g, const Placement& pl, const CircularOrder& order) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.mode = pl.mode;
    r.n = g.order();
    r.method = "gap-regions";
    const auto pts = checked_points<S>(g, pl);
    const auto edges = g.edges();
    const auto segs = edge_segments(edges, pts);
    const int n = g.order();

    std::set<Edge> gaps;
    for (int i = 0; i < n; ++i) {
        const Vertex a = order.at(i), b = order.at(i + 1);
        if (a != b && !g.adjacent(a, b)) gaps.insert(make_edge(a, b));
    }

    struct Region {
        PlanarSubdivision<S> sub;
        int face;
    };
    std::vector<Region> regions;
    const int gap_id = static_cast<int>(edges.size());
    for (const auto& [a, b] : gaps) {
        if (n < 3) break;
        auto with_gap = segs;
        with_gap.push_back({{pts[a], pts[b]}, gap_id});
        PlanarSubdivision<S> sub(with_gap, pts);
        Vertex other = 0;
        while (other == a || other == b) ++other;
        int face = -1;
        for (int e = 0; e < sub.sub_edge_count(); ++e) {
            const auto& h = sub.half_edges()[2 * e];
            if (h.segment != gap_id) continue;
            const auto& from = sub.nodes()[h.origin].point;
            const auto& to = sub.nodes()[sub.target(2 * e)].point;
            face = orientation(from, to, pts[other]) > 0 ? h.face : sub.half_edges()[2 * e + 1].face;
        }
        regions.push_back({std::move(sub), face});
    }

    for (const auto& [u, v] : g.non_edges()) {
        if (gaps.count({u, v})) {
            r.witnesses.push_back(witness(u, v, HPoint<S>::midpoint(pts[u], pts[v])));
            continue;
        }
        std::optional<HPoint<S>> hit;
        for (const auto& region : regions) {
            for (const auto& piece : region.sub.segment_pieces(pts[u], pts[v]))
                if (piece.face == region.face) {
                    hit = HPoint<S>::midpoint(piece.from, piece.to);
                    break;
                }
            if (hit) break;
        }
        if (hit) r.witnesses.push_back(witness(u, v, *hit));
        else r.failures.push_back({u, v, "open segment misses every gap region"});
    }
    r.valid = r.failures.empty();
    const PlanarSubdivision<S> base(segs, pts);
    outer_face_conditions(g, base, pts, r);
    r.seconds = seconds_since(t0);
    return r;
}

// ------------------------------------------------------------ obstacle

template <class S>
bool inside_ring(const std::vector<HPoint<S>>& ring, const HPoint<S>& p) {
    int winding = 0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const auto& a = ring[i];
        const auto& b = ring[(i + 1) % ring.size()];
        if (same_point(a, p) || on_open_segment(p, a, b)) return false;
        if (compare_y(a, p) <= 0) {
            if (compare_y(b, p) > 0 && orientation(a, b, p) > 0) ++winding;
        } else if (compare_y(b, p) <= 0 && orientation(a, b, p) < 0) {
            --winding;
        }
    }
    return winding != 0;
}

template <class S>
bool ring_is_simple(const std::vector<HPoint<S>>& ring) {
    const size_t k = ring.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            const auto rel = segment_relation(Segment<S>{ring[i], ring[(i + 1) % k]}, Segment<S>{ring[j], ring[(j + 1) % k]});
            const bool adjacent = j == i + 1 || (i == 0 && j == k - 1);
            if (rel.kind == SegmentRelationKind::Disjoint) continue;
            if (adjacent && rel.kind == SegmentRelationKind::EndpointTouch) {
                const auto& shared = j == i + 1 ? ring[j] : ring[i];
                if (same_point(*rel.point, shared)) continue;
            }
            return false;
        }
    return true;
}

Rat linf(const RatPoint& d) { return std::max(abs(d[0]), abs(d[1])); }

RatPoint unit(const RatPoint& d) {
    const Rat m = linf(d);
    return {d[0] / m, d[1] / m};
}

template <class S>
ObstaclePolygon obstacle_exact(const Graph& g, const Placement& pl, const VerificationReport& report) {
    if (g.size() == 0) throw DomainError("obstacle needs a drawing with at least one edge");
    const auto pts = checked_points<S>(g, pl);
    const PlanarSubdivision<S> sub(edge_segments(g.edges(), pts), pts);
    if (sub.components() != 1) throw DomainError("obstacle needs a connected drawing");

    std::vector<std::vector<HPoint<S>>> witnesses;
    for (const auto& [u, v] : g.non_edges()) {
        auto contact = sub.segment_outer_contact(pts[u], pts[v]);
        if (!contact.meets_open_outer) throw DomainError("non-edge " + pair_name(u, v) + " is not blocked");
        witnesses.push_back(std::move(contact.witnesses));
    }
    // Reported witnesses must land inside too.
    std::vector<HPoint<S>> reported;
    for (const auto& w : report.witnesses) reported.push_back(point_from_json<S>(w.point));

    const auto& nodes = sub.nodes();
    const auto& half = sub.half_edges();
    std::vector<RatPoint> at(nodes.size());
    for (size_t v = 0; v < nodes.size(); ++v) at[v] = affine_approx(nodes[v].point);

    // The walk around the drawing, starting at the lexicographically largest
    // node just after the wedge holding the +x direction.
    const int top = static_cast<int>(nodes.size()) - 1;
    std::vector<int> walk;
    for (int h = nodes[top].out.back();;) {
        walk.push_back(h);
        h = half[h].next;
        if (h == walk.front()) break;
    }
    // Direction into the outer wedge at each corner of the walk.
    std::vector<RatPoint> corner_dir(walk.size());
    for (size_t i = 1; i < walk.size(); ++i) {
        const int out = walk[i], in = walk[i - 1];
        const int u = half[out].origin, fwd = sub.target(out), back = half[in].origin;
        const RatPoint a = unit({at[fwd][0] - at[u][0], at[fwd][1] - at[u][1]});
        const RatPoint b = unit({at[back][0] - at[u][0], at[back][1] - at[u][1]});
        RatPoint d;
        if (out == PlanarSubdivision<S>::twin(in)) {
            d = {-a[0], -a[1]};
        } else {
            const int turn = orientation(nodes[u].point, nodes[fwd].point, nodes[back].point);
            if (turn > 0) d = {a[0] + b[0], a[1] + b[1]};
            else if (turn < 0) d = {-(a[0] + b[0]), -(a[1] + b[1])};
            else d = {-a[1], a[0]};
        }
        corner_dir[i] = unit(d);
    }

    Rat lo_x = at[0][0], hi_x = at[0][0], lo_y = at[0][1], hi_y = at[0][1];
    for (const auto& p : at) {
        lo_x = std::min(lo_x, p[0]);
        hi_x = std::max(hi_x, p[0]);
        lo_y = std::min(lo_y, p[1]);
        hi_y = std::max(hi_y, p[1]);
    }
    const Rat extent = std::max(hi_x - lo_x, hi_y - lo_y);
    const Rat margin = extent + 1;
    const RatPoint m = at[top];
    // Sides of the slit at the top node: bisect the sweep from +x to the walk's
    // last incoming edge (counterclockwise) and to its first outgoing edge
    // (clockwise). Both sweeps stay inside the outer wedge.
    auto sweep_bisector = [&](int other, int toward) {
        const RatPoint e = unit({at[other][0] - m[0], at[other][1] - m[1]});
        const int side = compare_y(nodes[other].point, nodes[top].point);
        if (side == 0) return RatPoint{Rat(0), Rat(toward)};
        const RatPoint sum{e[0] + 1, e[1]};
        return side == toward ? unit(sum) : unit({-sum[0], -sum[1]});
    };
    const RatPoint into = sweep_bisector(half[walk.back()].origin, 1);
    const RatPoint away = sweep_bisector(sub.target(walk.front()), -1);

    auto lift = [](const RatPoint& p) { return HPoint<S>::affine(S(p[0]), S(p[1])); };

    Rat inset = extent / 16;
    for (int attempt = 0; attempt < 64; ++attempt, inset /= 2) {
        const Rat slit = inset / 8;
        std::vector<RatPoint> ring;
        ring.push_back({m[0] + inset, m[1] - slit});
        ring.push_back({m[0] + inset * away[0], m[1] + inset * away[1]});
        for (size_t i = 1; i < walk.size(); ++i) {
            const auto& u = at[half[walk[i]].origin];
            ring.push_back({u[0] + inset * corner_dir[i][0], u[1] + inset * corner_dir[i][1]});
        }
        const Rat right = hi_x + margin, left = lo_x - margin, up = hi_y + margin, down = lo_y - margin;
        ring.push_back({m[0] + inset * into[0], m[1] + inset * into[1]});
        ring.push_back({m[0] + inset, m[1] + slit});
        ring.push_back({right, m[1] + slit});
        ring.push_back({right, up});
        ring.push_back({left, up});
        ring.push_back({left, down});
        ring.push_back({right, down});
        ring.push_back({right, m[1] - slit});

        std::vector<HPoint<S>> exact;
        for (const auto& p : ring) exact.push_back(lift(p));
        bool ok = ring_is_simple(exact);
        for (size_t i = 0; ok && i < exact.size(); ++i) {
            const Segment<S> side{exact[i], exact[(i + 1) % exact.size()]};
            for (int e = 0; ok && e < sub.sub_edge_count(); ++e) {
                const Segment<S> piece{nodes[half[2 * e].origin].point, nodes[sub.target(2 * e)].point};
                ok = segment_relation(side, piece).kind == SegmentRelationKind::Disjoint;
            }
        }
        ok = ok && !inside_ring(exact, nodes[0].point);
        for (size_t k = 0; ok && k < witnesses.size(); ++k)
            ok = std::any_of(witnesses[k].begin(), witnesses[k].end(),
                             [&](const HPoint<S>& w) { return inside_ring(exact, w); });
        for (size_t k = 0; ok && k < reported.size(); ++k) ok = inside_ring(exact, reported[k]);
        if (ok) return {std::move(ring), inset};
    }
    throw DomainError("could not fit an obstacle polygon around the drawing");
}

}  // namespace

json to_json(const VerificationReport& r) {
    auto witness_list = [](const std::vector<PairWitness>& ws) {
        json out = json::array();
        for (const auto& w : ws) out.push_back({{"u", w.u}, {"v", w.v}, {"point", w.point}, {"approx", {w.x, w.y}}});
        return out;
    };
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"u", f.u}, {"v", f.v}, {"reason", f.reason}});
    json off_edges = json::array();
    for (const auto& [u, v] : r.edges_off_outer_face) off_edges.push_back({u, v});
    return {{"valid", r.valid},
            {"n", r.n},
            {"mode", to_string(r.mode)},
            {"method", r.method},
            {"failures", failures},
            {"witnesses", witness_list(r.witnesses)},
            {"reducible", r.reducible},
            {"edge_witnesses", witness_list(r.edge_witnesses)},
            {"edges_off_outer_face", off_edges},
            {"vertices_on_outer_face", r.vertices_on_outer_face},
            {"vertices_off_outer_face", r.vertices_off_outer_face},
            {"seconds", r.seconds}};
}

VerificationReport verify_oor(const Graph& g, const Placement& pl) {
    return pl.is_rational() ? verify_exact<Rat>(g, pl) : verify_exact<CycloReal>(g, pl);
}

std::optional<CircularOrder> convex_order(const Placement& pl) {
    const int n = pl.size();
    if (!pl.is_rational()) return pl.order();
    if (n < 3) {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), 0);
        if (n == 2 && pl.coords[0] == pl.coords[1]) return std::nullopt;
        return CircularOrder(seq);
    }
    const auto pts = pl.rational_points();
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return compare_xy(pts[a], pts[b]) < 0; });
    // Monotone chain; collinear points are dropped, which fails the check.
    std::vector<int> hull;
    auto extend = [&](int p, size_t floor) {
        while (hull.size() >= floor + 2 && orientation(pts[hull[hull.size() - 2]], pts[hull.back()], pts[p]) <= 0)
            hull.pop_back();
        hull.push_back(p);
    };
    for (int p : idx) extend(p, 0);
    const size_t lower = hull.size() - 1;
    for (int k = n - 2; k >= 0; --k) extend(idx[k], lower);
    hull.pop_back();
    if (static_cast<int>(hull.size()) != n) return std::nullopt;
    std::reverse(hull.begin(), hull.end());
    return CircularOrder(hull);
}

VerificationReport verify_convex_gaps(const Graph& g, const Placement& pl) {
    if (pl.size() != g.order()) throw InputError("placement size does not match the graph");
    const auto order = convex_order(pl);
    if (!order) throw DomainError("placement is not in strictly convex position");
    return pl.is_rational() ? verify_gaps_exact<Rat>(g, pl, *order) : verify_gaps_exact<CycloReal>(g, pl, *order);
}

CnpResult check_cnp(const Graph& g, const CircularOrder& order, const std::vector<Vertex>& cover) {
    if (order.size() != g.order()) throw InputError("circular order size does not match the graph");
    std::vector<char> in_cover(g.order(), 0);
    for (Vertex v : cover) {
        if (v < 0 || v >= g.order()) throw InputError("cover vertex " + std::to_string(v) + " out of range");
        in_cover[v] = 1;
    }
    CnpResult r;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in_cover[v]) continue;
        // Neighbours must form one block of the order read from v's successor
        // to its predecessor; a block wrapping past v hides non-edges behind edges.
        std::vector<Vertex> rest;
        for (int i = 1; i < order.size(); ++i) rest.push_back(order.at(order.position(v) + i));
        const int k = static_cast<int>(rest.size());
        int runs = 0, first = -1, last = -1;
        for (int i = 0; i < k; ++i) {
            if (!g.adjacent(v, rest[i])) continue;
            if (i == 0 || !g.adjacent(v, rest[i - 1])) ++runs;
            if (first < 0) first = i;
            last = i;
        }
        if (runs == 0) r.arcs.push_back({v, std::nullopt});
        else if (runs == 1) r.arcs.push_back({v, std::pair{rest[first], rest[last]}});
        else if (!r.broken) r.broken = v;
    }
    for (const auto& e : g.non_edges())
        if (!in_cover[e.first] && !in_cover[e.second]) {
            r.uncovered = e;
            break;
        }
    r.holds = !r.broken && !r.uncovered;
    return r;
}

std::pair<Graph, Placement> restrict_representation(const Graph& g, const Placement& pl, const VerificationReport& report,
                                                     const std::vector<Edge>& delete_edges,
                                                     const std::vector<Vertex>& delete_vertices) {
    if (!report.valid || !report.reducible) throw DomainError("restriction needs a valid reducible representation");
    if (report.n != g.order() || pl.size() != g.order()) throw InputError("report does not describe this graph");
    Graph h = g;
    for (const auto& [u, v] : delete_edges)
        if (!h.remove_edge(u, v)) throw InputError("no edge " + pair_name(u, v) + " to delete");
    std::vector<char> drop(g.order(), 0);
    for (Vertex v : delete_vertices) {
        if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " out of range");
        drop[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[v]) keep.push_back(v);
    Graph sub = induced_subgraph(h, keep);
    Placement restricted = pl.restricted(keep);
    if (!verify_oor(sub, restricted).valid) throw std::logic_error("restricted representation failed verification");
    return {std::move(sub), std::move(restricted)};
}

json to_json(const ObstaclePolygon& p) {
    json ring = json::array();
    for (const auto& [x, y] : p.ring) ring.push_back({to_string(x), to_string(y)});
    return {{"ring", ring}, {"inset", to_string(p.inset)}};
}

ObstaclePolygon materialize_obstacle(const Graph& g, const Placement& pl, const VerificationReport& report) {
    if (!report.valid) throw DomainError("obstacle needs a valid representation");
    return pl.is_rational() ? obstacle_exact<Rat>(g, pl, report) : obstacle_exact<CycloReal>(g, pl, report);
}

}  // namespace oor
