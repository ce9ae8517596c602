#pragma once

#include "oor/placement.hpp"

namespace oor {

// Disk predicates in the rational plane. All decisions reduce to comparisons
// of squared distances.

enum class DiskSide { Inside, On, Outside };

Rat dist2(const RatPoint& p, const RatPoint& q);
/// Squared distance from p to the closed segment [a,b].
Rat segment_dist2(const RatPoint& p, const RatPoint& a, const RatPoint& b);

DiskSide disk_side(const RatPoint& center, const Rat& r2, const RatPoint& x);
/// The closed segment meets the open disk (strict) or the closed disk.
bool segment_meets_disk(const RatPoint& center, const Rat& r2, const RatPoint& a, const RatPoint& b, bool closed_disk);

/// Sign of alpha + beta * sqrt(d) for d >= 0.
int sign_with_sqrt(const Rat& alpha, const Rat& beta, const Rat& d);

/// Open arc of the circle around `center`: the points strictly outside the
/// closed convex wedge swept counterclockwise from direction `first` to
/// direction `second` (the wedge angle must be below pi). The sector is the
/// open disk minus that wedge.
struct ReflexArc {
    RatPoint center;
    Rat radius;
    RatPoint first, second;

    Rat radius2() const { return radius * radius; }
    /// The point straight above the center; on the arc whenever the wedge
    /// opens downwards.
    RatPoint top() const { return {center[0], center[1] + radius}; }
};

bool outside_wedge(const ReflexArc& arc, const RatPoint& x);
bool point_on_arc(const ReflexArc& arc, const RatPoint& x);
bool point_in_sector(const ReflexArc& arc, const RatPoint& x);
/// The closed segment [a,b] meets the open arc.
bool arc_meets_segment(const ReflexArc& arc, const RatPoint& a, const RatPoint& b);
/// The closed segment [a,b] meets the open sector.
bool sector_meets_segment(const ReflexArc& arc, const RatPoint& a, const RatPoint& b);
/// The two open arcs share a point. Concentric equal circles count as meeting.
bool arcs_meet(const ReflexArc& p, const ReflexArc& q);

}  // namespace oor
