#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "oor/point.hpp"

namespace oor {

template <class S>
struct LabeledSegment {
    Segment<S> segment;
    int id = 0;
};

enum class LocationKind { Node, Edge, Face };

struct Location {
    LocationKind kind = LocationKind::Face;
    /// Node id, sub-edge id or face id depending on `kind`.
    int id = 0;
};

template <class S>
struct OuterContact {
    /// Some open piece of the segment lies in the unbounded face.
    bool meets_open_outer = false;
    /// Some piece runs along a sub-edge that borders the unbounded face.
    bool boundary_contact = false;
    /// One midpoint per piece lying in the unbounded face.
    std::vector<HPoint<S>> witnesses;
};

template <class S>
struct SegmentPiece {
    HPoint<S> from, to;
    /// Face containing the open piece, or -1 when it runs along sub-edge `along`.
    int face = -1;
    int along = -1;
};

/// Planar subdivision of a straight-line drawing. Every intersection point
/// becomes a node; nodes are numbered in lexicographic (x, y) order. Face 0 is
/// the unbounded face. Immutable once built.
template <class S>
class PlanarSubdivision {
public:
    static constexpr int kUnbounded = 0;

    struct Node {
        HPoint<S> point;
        /// Outgoing half-edges sorted counterclockwise from the +x direction.
        std::vector<int> out;
        /// Face containing the node when it has no incident edges, else -1.
        int isolated_face = -1;
        int component = -1;
    };
    struct HalfEdge {
        int origin = -1;
        int next = -1;
        /// Face on the left.
        int face = -1;
        /// Id of the input segment this piece belongs to.
        int segment = -1;
    };
    struct Face {
        /// A half-edge of the outer boundary walk; -1 for the unbounded face.
        int boundary = -1;
        /// One half-edge per walk of a component nested inside this face.
        std::vector<int> holes;
        std::vector<int> isolated_nodes;
    };

    /// Throws InputError on duplicate ids or zero-length segments and
    /// DomainError when two segments overlap along a positive length.
    /// `points` become nodes even when no segment touches them.
    PlanarSubdivision(const std::vector<LabeledSegment<S>>& segments, const std::vector<HPoint<S>>& points = {});

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<HalfEdge>& half_edges() const { return half_; }
    const std::vector<Face>& faces() const { return faces_; }
    int components() const { return components_; }

    static int twin(int h) { return h ^ 1; }
    int target(int h) const { return half_[twin(h)].origin; }
    /// Number of sub-edges (half the half-edges).
    int sub_edge_count() const { return static_cast<int>(half_.size() / 2); }

    /// Node at exactly this point, if any.
    std::optional<int> find_node(const HPoint<S>& p) const;
    Location classify_point(const HPoint<S>& p) const;

    /// Open pieces of the closed segment (a,b) cut at the drawing, ordered
    /// from a to b. Throws InputError if a == b.
    std::vector<SegmentPiece<S>> segment_pieces(const HPoint<S>& a, const HPoint<S>& b) const;

    /// Cuts the closed segment (a,b) at the drawing and reports how its open
    /// pieces relate to the unbounded face. Throws InputError if a == b.
    OuterContact<S> segment_outer_contact(const HPoint<S>& a, const HPoint<S>& b) const;

    /// Midpoint of a piece of segment `id` bordering the unbounded face.
    std::optional<HPoint<S>> segment_on_outer_face(int id) const;
    bool node_on_outer_face(int node) const;

    /// Node sequence of the walk starting at half-edge h.
    std::vector<int> walk(int h) const;

    nlohmann::json debug_json() const;

private:
    void link_half_edges();
    void assign_faces();
    bool inside_walk(const HPoint<S>& p, int h) const;
    int innermost_bounded(const HPoint<S>& p, int skip_component) const;
    /// Face entered when leaving node u towards q (q != u); -1 if along an edge.
    int face_towards(int u, const HPoint<S>& q, int* along = nullptr) const;

    std::vector<Node> nodes_;
    std::vector<HalfEdge> half_;
    std::vector<Face> faces_;
    int components_ = 0;
};

extern template class PlanarSubdivision<Rat>;
extern template class PlanarSubdivision<CycloReal>;

}  // namespace oor
