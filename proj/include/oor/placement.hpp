#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "oor/circular_order.hpp"
#include "oor/point.hpp"

namespace oor {

enum class PlacementMode { RationalPlane, RationalCocircular, RegularNGon };

std::string to_string(PlacementMode m);
PlacementMode parse_mode(const std::string& s);

using RatPoint = std::array<Rat, 2>;

/// Vertex geometry of a straight-line drawing.
///
/// Rational modes keep affine coordinates per vertex (plus the circle
/// parameters for cocircular placements). Regular mode keeps, per vertex, its
/// slot k on the regular `sides`-gon: the point at angle -2 pi k / sides, so
/// increasing slots run clockwise starting from (1,0).
struct Placement {
    PlacementMode mode = PlacementMode::RationalPlane;
    std::vector<RatPoint> coords;
    std::vector<Rat> params;
    int sides = 0;
    std::vector<int> slots;

    int size() const { return mode == PlacementMode::RegularNGon ? static_cast<int>(slots.size()) : static_cast<int>(coords.size()); }
    bool is_rational() const { return mode != PlacementMode::RegularNGon; }

    std::vector<HPoint<Rat>> rational_points() const;
    std::vector<HPoint<CycloReal>> regular_points() const;
    /// Clockwise order of the vertices for regular placements.
    std::optional<CircularOrder> order() const;
    /// Placement of the vertices in `keep`; vertex i of the result is keep[i].
    Placement restricted(const std::vector<Vertex>& keep) const;
};

/// ((1-t^2)/(1+t^2), 2t/(1+t^2)).
RatPoint circle_point(const Rat& t);

/// Rational points on the unit circle in clockwise `order`; with `generic`,
/// re-perturbed until no three chords are concurrent. `seed` selects the
/// perturbation sequence.
Placement cocircular_placement(const CircularOrder& order, bool generic, std::uint64_t seed = 0);

/// Exact regular polygon placement: order[k] gets slot k.
Placement regular_placement(const CircularOrder& order);

Placement rational_placement(std::vector<RatPoint> coords);

/// Homogeneous coordinates (2 cos t, -2 sin t, 2) with t = 2 pi k / sides.
HPoint<CycloReal> regular_vertex(int k, int sides);
Vec3<CycloReal> regular_vertex_coords(int k, int sides);

/// True iff some three chords of the complete graph on the points meet in a
/// common interior point.
bool has_concurrent_chords(const std::vector<HPoint<Rat>>& pts);

nlohmann::json to_json(const CycloReal& x);
CycloReal cyclo_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Placement& p);

/// Exact point encodings: rational points as affine ["x", "y"] strings,
/// cyclotomic points as {"x", "y", "w"} homogeneous numbers.
nlohmann::json point_to_json(const HPoint<Rat>& p);
nlohmann::json point_to_json(const HPoint<CycloReal>& p);
template <class S>
HPoint<S> point_from_json(const nlohmann::json& j);
template <>
HPoint<Rat> point_from_json<Rat>(const nlohmann::json& j);
template <>
HPoint<CycloReal> point_from_json<CycloReal>(const nlohmann::json& j);

/// Rational approximation of the affine coordinates: exact for rational
/// points, the nearest doubles for cyclotomic ones.
RatPoint affine_approx(const HPoint<Rat>& p);
RatPoint affine_approx(const HPoint<CycloReal>& p);
/// Validates the document (coordinates must match params / slots exactly).
/// Throws InputError.
Placement placement_from_json(const nlohmann::json& j);

}  // namespace oor
