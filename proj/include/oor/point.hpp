#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "oor/cyclo_real.hpp"
#include "oor/interval.hpp"
#include "oor/rational.hpp"

namespace oor {

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
using IVec3 = Eigen::Matrix<Interval, 3, 1>;

/// Point in homogeneous coordinates (x : y : w), w != 0.
///
/// Derived points (line intersections, midpoints) keep their construction and
/// compute exact coordinates only when a predicate cannot be decided from the
/// interval approximation. The exact value is computed once and cached.
template <class S>
class HPoint {
public:
    HPoint() = default;
    static HPoint affine(const S& x, const S& y);
    static HPoint homogeneous(Vec3<S> v);
    /// Intersection of line(a,b) with line(c,d); the lines must not be parallel.
    static HPoint meet(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d);
    static HPoint midpoint(const HPoint& a, const HPoint& b);

    const Vec3<S>& exact() const;
    const IVec3& approx() const { return node_->approx; }
    bool valid() const { return node_ != nullptr; }

    /// Display-only floating coordinates.
    std::pair<double, double> to_double() const;

private:
    enum class Kind { Leaf, Meet, Mid };
    struct Node {
        Kind kind = Kind::Leaf;
        std::array<std::shared_ptr<const Node>, 4> args;
        IVec3 approx;
        mutable std::once_flag once;
        mutable std::optional<Vec3<S>> value;
    };
    static const Vec3<S>& resolve(const Node& n);

    std::shared_ptr<const Node> node_;
};

template <class S>
struct Segment {
    HPoint<S> a, b;
};

// ------------------------------------------------------------- predicates

/// Sign of the orientation of (p,q,r): +1 counterclockwise, -1 clockwise.
template <class S>
int orientation(const HPoint<S>& p, const HPoint<S>& q, const HPoint<S>& r);

/// sign(p.x - q.x), sign(p.y - q.y), and lexicographic (x, then y).
template <class S>
int compare_x(const HPoint<S>& p, const HPoint<S>& q);
template <class S>
int compare_y(const HPoint<S>& p, const HPoint<S>& q);
template <class S>
int compare_xy(const HPoint<S>& p, const HPoint<S>& q) {
    const int c = compare_x(p, q);
    return c != 0 ? c : compare_y(p, q);
}
template <class S>
bool same_point(const HPoint<S>& p, const HPoint<S>& q) {
    return compare_x(p, q) == 0 && compare_y(p, q) == 0;
}

/// p lies on the open segment (a,b).
template <class S>
bool on_open_segment(const HPoint<S>& p, const HPoint<S>& a, const HPoint<S>& b) {
    if (orientation(a, b, p) != 0) return false;
    const int ca = compare_xy(p, a), cb = compare_xy(p, b);
    return ca != 0 && cb != 0 && ca != cb;
}

enum class SegmentRelationKind { Disjoint, ProperCross, EndpointTouch, CollinearOverlap };

template <class S>
struct SegmentRelation {
    SegmentRelationKind kind = SegmentRelationKind::Disjoint;
    /// Intersection point for ProperCross and EndpointTouch.
    std::optional<HPoint<S>> point;
};

template <class S>
SegmentRelation<S> segment_relation(const Segment<S>& s1, const Segment<S>& s2);

/// Direction comparison around a common origin: orders the rays o->p by angle
/// in [0, 2pi) measured counterclockwise from the positive x axis.
template <class S>
int compare_direction(const HPoint<S>& o, const HPoint<S>& p, const HPoint<S>& q);

extern template class HPoint<Rat>;
extern template class HPoint<CycloReal>;

}  // namespace oor
