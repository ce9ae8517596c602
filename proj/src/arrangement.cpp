#include "oor/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "oor/graph.hpp"
#include "oor/placement.hpp"

namespace oor {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

template <class S>
PlanarSubdivision<S>::PlanarSubdivision(const std::vector<LabeledSegment<S>>& segments,
                                        const std::vector<HPoint<S>>& points) {
    const int m = static_cast<int>(segments.size());
    {
        std::set<int> ids;
        for (const auto& s : segments) {
            if (!ids.insert(s.id).second) throw InputError("duplicate segment id " + std::to_string(s.id));
            if (same_point(s.segment.a, s.segment.b))
                throw InputError("segment " + std::to_string(s.id) + " has zero length");
        }
    }

    // Raw points: both endpoints of every segment, then extra points, then cuts.
    std::vector<HPoint<S>> raw;
    std::vector<std::vector<int>> on_segment(m);
    for (int i = 0; i < m; ++i) {
        on_segment[i] = {static_cast<int>(raw.size()), static_cast<int>(raw.size()) + 1};
        raw.push_back(segments[i].segment.a);
        raw.push_back(segments[i].segment.b);
    }
    for (const auto& p : points) {
        const int r = static_cast<int>(raw.size());
        raw.push_back(p);
        for (int i = 0; i < m; ++i)
            if (on_open_segment(p, segments[i].segment.a, segments[i].segment.b)) on_segment[i].push_back(r);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto rel = segment_relation(segments[i].segment, segments[j].segment);
            if (rel.kind == SegmentRelationKind::CollinearOverlap)
                throw DomainError("segments " + std::to_string(segments[i].id) + " and " + std::to_string(segments[j].id) +
                                  " overlap");
            if (rel.kind == SegmentRelationKind::Disjoint) continue;
            const int r = static_cast<int>(raw.size());
            raw.push_back(*rel.point);
            on_segment[i].push_back(r);
            on_segment[j].push_back(r);
        }

    // Merge equal points; node ids follow lexicographic order.
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return compare_xy(raw[x], raw[y]) < 0; });
    std::vector<int> node_of(raw.size());
    for (size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || !same_point(raw[order[k - 1]], raw[order[k]])) {
            Node node;
            node.point = raw[order[k]];
            nodes_.push_back(std::move(node));
        }
        node_of[order[k]] = static_cast<int>(nodes_.size()) - 1;
    }

    for (int i = 0; i < m; ++i) {
        std::vector<int> ids;
        for (int r : on_segment[i]) ids.push_back(node_of[r]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            half_.push_back({ids[k], -1, -1, segments[i].id});
            half_.push_back({ids[k + 1], -1, -1, segments[i].id});
        }
    }

    UnionFind uf(static_cast<int>(nodes_.size()));
    for (int e = 0; e < sub_edge_count(); ++e) uf.unite(half_[2 * e].origin, half_[2 * e + 1].origin);
    std::vector<int> comp_of_root(nodes_.size(), -1);
    for (auto& node : nodes_) {
        const int r = uf.find(static_cast<int>(&node - nodes_.data()));
        if (comp_of_root[r] < 0) comp_of_root[r] = components_++;
        node.component = comp_of_root[r];
    }

    link_half_edges();
    assign_faces();

    const long euler = static_cast<long>(nodes_.size()) - sub_edge_count() + static_cast<long>(faces_.size());
    if (euler != 1 + components_) throw std::logic_error("planar subdivision violates the Euler relation");
}

template <class S>
void PlanarSubdivision<S>::link_half_edges() {
    for (int h = 0; h < static_cast<int>(half_.size()); ++h) nodes_[half_[h].origin].out.push_back(h);
    std::vector<int> slot(half_.size());
    for (auto& node : nodes_) {
        const auto& o = node.point;
        std::sort(node.out.begin(), node.out.end(), [&](int x, int y) {
            return compare_direction(o, nodes_[target(x)].point, nodes_[target(y)].point) < 0;
        });
        for (size_t k = 0; k < node.out.size(); ++k) slot[node.out[k]] = static_cast<int>(k);
    }
    // Arriving at v along h, continue on the edge just clockwise of the reverse.
    for (int h = 0; h < static_cast<int>(half_.size()); ++h) {
        const auto& around = nodes_[target(h)].out;
        const int k = static_cast<int>(around.size());
        half_[h].next = around[(slot[twin(h)] + k - 1) % k];
    }
}

template <class S>
bool PlanarSubdivision<S>::inside_walk(const HPoint<S>& p, int h) const {
    int winding = 0;
    int e = h;
    do {
        const auto& a = nodes_[half_[e].origin].point;
        const auto& b = nodes_[target(e)].point;
        if (compare_y(a, p) <= 0) {
            if (compare_y(b, p) > 0 && orientation(a, b, p) > 0) ++winding;
        } else if (compare_y(b, p) <= 0 && orientation(a, b, p) < 0) {
            --winding;
        }
        e = half_[e].next;
    } while (e != h);
    return winding != 0;
}

template <class S>
int PlanarSubdivision<S>::innermost_bounded(const HPoint<S>& p, int skip_component) const {
    int best = -1;
    for (int f = 1; f < static_cast<int>(faces_.size()); ++f) {
        const int h = faces_[f].boundary;
        if (nodes_[half_[h].origin].component == skip_component) continue;
        if (!inside_walk(p, h)) continue;
        if (best < 0 || inside_walk(nodes_[half_[h].origin].point, faces_[best].boundary)) best = f;
    }
    return best;
}

template <class S>
void PlanarSubdivision<S>::assign_faces() {
    const int H = static_cast<int>(half_.size());
    std::vector<int> cycle(H, -1);
    std::vector<int> cycle_start;
    for (int h = 0; h < H; ++h) {
        if (cycle[h] >= 0) continue;
        const int c = static_cast<int>(cycle_start.size());
        cycle_start.push_back(h);
        for (int e = h; cycle[e] < 0; e = half_[e].next) cycle[e] = c;
    }

    // The walk around a component passes its lexicographically largest node
    // through the wedge containing the +x direction.
    std::vector<int> top(components_, -1);
    for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) top[nodes_[v].component] = v;
    std::vector<int> outer_cycle(components_, -1);
    std::vector<char> is_outer(cycle_start.size(), 0);
    for (int c = 0; c < components_; ++c) {
        const auto& out = nodes_[top[c]].out;
        if (out.empty()) continue;
        outer_cycle[c] = cycle[out.back()];
        is_outer[outer_cycle[c]] = 1;
    }

    faces_.assign(1, Face{});
    std::vector<int> face_of_cycle(cycle_start.size(), -1);
    for (size_t c = 0; c < cycle_start.size(); ++c) {
        if (is_outer[c]) continue;
        face_of_cycle[c] = static_cast<int>(faces_.size());
        Face f;
        f.boundary = cycle_start[c];
        faces_.push_back(std::move(f));
    }

    for (int c = 0; c < components_; ++c) {
        const int inner = innermost_bounded(nodes_[top[c]].point, c);
        const int f = inner < 0 ? kUnbounded : inner;
        if (outer_cycle[c] < 0) {
            nodes_[top[c]].isolated_face = f;
            faces_[f].isolated_nodes.push_back(top[c]);
        } else {
            face_of_cycle[outer_cycle[c]] = f;
            faces_[f].holes.push_back(cycle_start[outer_cycle[c]]);
        }
    }
    for (int h = 0; h < H; ++h) half_[h].face = face_of_cycle[cycle[h]];
}

template <class S>
std::optional<int> PlanarSubdivision<S>::find_node(const HPoint<S>& p) const {
    int lo = 0, hi = static_cast<int>(nodes_.size());
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        const int c = compare_xy(nodes_[mid].point, p);
        if (c == 0) return mid;
        if (c < 0) lo = mid + 1;
        else hi = mid;
    }
    return std::nullopt;
}

template <class S>
Location PlanarSubdivision<S>::classify_point(const HPoint<S>& p) const {
    if (auto v = find_node(p)) return {LocationKind::Node, *v};
    for (int e = 0; e < sub_edge_count(); ++e)
        if (on_open_segment(p, nodes_[half_[2 * e].origin].point, nodes_[half_[2 * e + 1].origin].point))
            return {LocationKind::Edge, e};
    const int f = innermost_bounded(p, -1);
    return {LocationKind::Face, f < 0 ? kUnbounded : f};
}

template <class S>
int PlanarSubdivision<S>::face_towards(int u, const HPoint<S>& q, int* along) const {
    const auto& out = nodes_[u].out;
    if (out.empty()) return nodes_[u].isolated_face;
    const auto& o = nodes_[u].point;
    int before = out.back();
    for (int h : out) {
        const int c = compare_direction(o, nodes_[target(h)].point, q);
        if (c == 0) {
            if (along) *along = h;
            return -1;
        }
        if (c > 0) break;
        before = h;
    }
    return half_[before].face;
}

template <class S>
std::vector<SegmentPiece<S>> PlanarSubdivision<S>::segment_pieces(const HPoint<S>& a, const HPoint<S>& b) const {
    if (same_point(a, b)) throw InputError("segment has zero length");
    struct Cut {
        HPoint<S> point;
        int node = -1;
        int crossed = -1;
    };
    std::vector<Cut> cuts;
    for (const auto* end : {&a, &b}) {
        const auto v = find_node(*end);
        cuts.push_back({v ? nodes_[*v].point : *end, v.value_or(-1), -1});
    }
    for (int v = 0; v < static_cast<int>(nodes_.size()); ++v)
        if (on_open_segment(nodes_[v].point, a, b)) cuts.push_back({nodes_[v].point, v, -1});
    for (int e = 0; e < sub_edge_count(); ++e) {
        const auto rel = segment_relation(Segment<S>{nodes_[half_[2 * e].origin].point, nodes_[half_[2 * e + 1].origin].point},
                                          Segment<S>{a, b});
        if (rel.kind == SegmentRelationKind::ProperCross) cuts.push_back({*rel.point, -1, e});
    }
    const int dir = compare_xy(a, b) < 0 ? 1 : -1;
    std::sort(cuts.begin(), cuts.end(),
              [&](const Cut& x, const Cut& y) { return dir * compare_xy(x.point, y.point) < 0; });

    auto side_of = [&](int e) {
        const int o = orientation(nodes_[half_[2 * e].origin].point, nodes_[half_[2 * e + 1].origin].point, b);
        return o > 0 ? half_[2 * e].face : o < 0 ? half_[2 * e + 1].face : -1;
    };

    std::vector<SegmentPiece<S>> pieces;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Cut& c = cuts[i];
        int face = -1, along = -1;
        if (c.node >= 0) {
            face = face_towards(c.node, b, &along);
            along = along >= 0 ? along / 2 : -1;
        } else if (c.crossed >= 0) {
            face = side_of(c.crossed);
        } else {
            const Location loc = classify_point(c.point);
            if (loc.kind == LocationKind::Face) face = loc.id;
            else if ((face = side_of(loc.id)) < 0) along = loc.id;
        }
        pieces.push_back({c.point, cuts[i + 1].point, face, along});
    }
    return pieces;
}

template <class S>
OuterContact<S> PlanarSubdivision<S>::segment_outer_contact(const HPoint<S>& a, const HPoint<S>& b) const {
    OuterContact<S> result;
    for (const auto& piece : segment_pieces(a, b)) {
        const int e = piece.along;
        if (e >= 0 && (half_[2 * e].face == kUnbounded || half_[2 * e + 1].face == kUnbounded))
            result.boundary_contact = true;
        if (piece.face == kUnbounded) {
            result.meets_open_outer = true;
            result.witnesses.push_back(HPoint<S>::midpoint(piece.from, piece.to));
        }
    }
    return result;
}

template <class S>
std::optional<HPoint<S>> PlanarSubdivision<S>::segment_on_outer_face(int id) const {
    for (int e = 0; e < sub_edge_count(); ++e) {
        if (half_[2 * e].segment != id) continue;
        if (half_[2 * e].face == kUnbounded || half_[2 * e + 1].face == kUnbounded)
            return HPoint<S>::midpoint(nodes_[half_[2 * e].origin].point, nodes_[half_[2 * e + 1].origin].point);
    }
    return std::nullopt;
}

template <class S>
bool PlanarSubdivision<S>::node_on_outer_face(int node) const {
    const auto& n = nodes_.at(node);
    if (n.out.empty()) return n.isolated_face == kUnbounded;
    return std::any_of(n.out.begin(), n.out.end(), [&](int h) { return half_[h].face == kUnbounded; });
}

template <class S>
std::vector<int> PlanarSubdivision<S>::walk(int h) const {
    std::vector<int> out;
    int e = h;
    do {
        out.push_back(half_[e].origin);
        e = half_[e].next;
    } while (e != h);
    return out;
}

template <class S>
nlohmann::json PlanarSubdivision<S>::debug_json() const {
    using nlohmann::json;
    json j;
    j["nodes"] = json::array();
    for (size_t v = 0; v < nodes_.size(); ++v) {
        const auto [x, y] = nodes_[v].point.to_double();
        j["nodes"].push_back({{"id", v}, {"x", x}, {"y", y}, {"exact", point_to_json(nodes_[v].point)}});
    }
    j["sub_edges"] = json::array();
    for (int e = 0; e < sub_edge_count(); ++e)
        j["sub_edges"].push_back(
            {{"id", e}, {"from", half_[2 * e].origin}, {"to", half_[2 * e + 1].origin}, {"segment", half_[2 * e].segment}});
    j["faces"] = json::array();
    for (size_t f = 0; f < faces_.size(); ++f) {
        json face{{"id", f}};
        if (faces_[f].boundary >= 0) face["boundary"] = walk(faces_[f].boundary);
        face["holes"] = json::array();
        for (int h : faces_[f].holes) face["holes"].push_back(walk(h));
        face["isolated"] = faces_[f].isolated_nodes;
        j["faces"].push_back(face);
    }
    j["unbounded_face"] = kUnbounded;
    j["components"] = components_;
    return j;
}

template class PlanarSubdivision<Rat>;
template class PlanarSubdivision<CycloReal>;

}  // namespace oor
