#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oor/circular_order.hpp"
#include "oor/graph.hpp"
#include "oor/placement.hpp"

namespace oor {

struct NonEdgeFailure {
    Vertex u = 0, v = 0;
    std::string reason;
};

/// A point tied to a vertex pair: for a non-edge, a point of the open segment
/// inside the outer face; for an edge, a point of the edge on the outer face
/// boundary.
struct PairWitness {
    Vertex u = 0, v = 0;
    /// Exact coordinates, as produced by point_to_json.
    nlohmann::json point;
    double x = 0, y = 0;
};

struct VerificationReport {
    bool valid = false;
    std::vector<NonEdgeFailure> failures;
    std::vector<PairWitness> witnesses;
    bool reducible = false;
    std::vector<PairWitness> edge_witnesses;
    std::vector<Edge> edges_off_outer_face;
    bool vertices_on_outer_face = false;
    std::vector<Vertex> vertices_off_outer_face;
    PlacementMode mode = PlacementMode::RationalPlane;
    int n = 0;
    std::string method;
    double seconds = 0;
};

nlohmann::json to_json(const VerificationReport& r);

/// Decides whether `pl` is an outside-obstacle representation of g: every
/// non-edge must meet the open unbounded face of the drawing of g's edges.
/// Throws InputError for coincident vertices or a size mismatch and
/// DomainError when two edges overlap along a segment.
VerificationReport verify_oor(const Graph& g, const Placement& pl);

/// Same verdict as verify_oor for placements in strictly convex position,
/// decided by testing each non-edge against the gap regions only. Throws
/// DomainError for non-convex placements.
VerificationReport verify_convex_gaps(const Graph& g, const Placement& pl);

struct CnpResult {
    bool holds = false;
    /// Per consecutive cover vertex: first and last neighbour of its block.
    std::vector<std::pair<Vertex, std::optional<std::pair<Vertex, Vertex>>>> arcs;
    /// A non-edge with no endpoint in the cover, if any.
    std::optional<Edge> uncovered;
    /// A cover vertex whose neighbours are not consecutive, if any.
    std::optional<Vertex> broken;
};

/// Consecutive-neighbours check: for every cover vertex v, its neighbours form
/// one block of `order` read from v's successor round to its predecessor, and
/// every non-edge has an endpoint in the cover.
CnpResult check_cnp(const Graph& g, const CircularOrder& order, const std::vector<Vertex>& cover);

/// Deletes edges then vertices from a valid reducible representation. The
/// result is re-verified; throws DomainError if `report` is not valid and
/// reducible and std::logic_error if the result fails verification.
std::pair<Graph, Placement> restrict_representation(const Graph& g, const Placement& pl, const VerificationReport& report,
                                                     const std::vector<Edge>& delete_edges,
                                                     const std::vector<Vertex>& delete_vertices);

/// Simple polygon with rational corners covering the outer face except a thin
/// band along the drawing: a bounding box joined by a slit to an inset walk
/// around the drawing.
struct ObstaclePolygon {
    std::vector<RatPoint> ring;
    /// Offset of the inner walk from the drawing.
    Rat inset;
};

nlohmann::json to_json(const ObstaclePolygon& p);

/// Builds and exactly validates the obstacle: simple ring, disjoint from the
/// drawing, containing every witness in the report. Needs a valid report
/// and a connected drawing with at least one edge (DomainError otherwise).
ObstaclePolygon materialize_obstacle(const Graph& g, const Placement& pl, const VerificationReport& report);

/// Strictly convex position order of a placement (clockwise); nullopt when
/// some vertex is not a strict corner of the hull.
std::optional<CircularOrder> convex_order(const Placement& pl);

}  // namespace oor
