#include "oor/arc.hpp"

#include <optional>
#include <stdexcept>

namespace oor {

Rat dist2(const RatPoint& p, const RatPoint& q) {
    const Rat dx = p[0] - q[0], dy = p[1] - q[1];
    return dx * dx + dy * dy;
}

Rat segment_dist2(const RatPoint& p, const RatPoint& a, const RatPoint& b) {
    const Rat ux = b[0] - a[0], uy = b[1] - a[1];
    const Rat len2 = ux * ux + uy * uy;
    if (len2.is_zero()) return dist2(p, a);
    const Rat s = ((p[0] - a[0]) * ux + (p[1] - a[1]) * uy) / len2;
    if (s <= 0) return dist2(p, a);
    if (s >= 1) return dist2(p, b);
    return dist2(p, {a[0] + s * ux, a[1] + s * uy});
}

DiskSide disk_side(const RatPoint& center, const Rat& r2, const RatPoint& x) {
    const int c = (dist2(center, x) - r2).sign();
    return c < 0 ? DiskSide::Inside : c == 0 ? DiskSide::On : DiskSide::Outside;
}

bool segment_meets_disk(const RatPoint& center, const Rat& r2, const RatPoint& a, const RatPoint& b, bool closed_disk) {
    const Rat d = segment_dist2(center, a, b);
    return closed_disk ? d <= r2 : d < r2;
}

int sign_with_sqrt(const Rat& alpha, const Rat& beta, const Rat& d) {
    if (d.sign() < 0) throw std::invalid_argument("sign_with_sqrt: negative radicand");
    const int sa = alpha.sign();
    const int sb = d.is_zero() ? 0 : beta.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: compare alpha^2 with beta^2 d.
    const int c = (alpha * alpha - beta * beta * d).sign();
    return c == 0 ? 0 : c > 0 ? sa : sb;
}

}  // namespace oor

namespace oor {

namespace {

Rat cross(const RatPoint& u, const RatPoint& v) { return u[0] * v[1] - u[1] * v[0]; }
RatPoint minus(const RatPoint& p, const RatPoint& q) { return {p[0] - q[0], p[1] - q[1]}; }

// alpha + beta * sqrt(d), all sharing the same d.
struct Surd {
    Rat alpha, beta;
};

int compare(const Surd& x, const Surd& y, const Rat& d) { return sign_with_sqrt(x.alpha - y.alpha, x.beta - y.beta, d); }

// Outside test for a point c + base + t * step with t = (-B + s sqrt(D)) / 2A:
// both wedge sides are linear in t.
bool outside_at_root(const ReflexArc& arc, const RatPoint& base, const RatPoint& step, const Rat& A, const Rat& B,
                     const Rat& D, int s) {
    auto side_sign = [&](const Rat& f0, const Rat& f1) { return sign_with_sqrt(2 * A * f0 - B * f1, s * f1, D); };
    return side_sign(cross(arc.first, base), cross(arc.first, step)) < 0 ||
           side_sign(cross(base, arc.second), cross(step, arc.second)) < 0;
}

}  // namespace

bool outside_wedge(const ReflexArc& arc, const RatPoint& x) {
    const RatPoint w = minus(x, arc.center);
    return cross(arc.first, w).sign() < 0 || cross(w, arc.second).sign() < 0;
}

bool point_on_arc(const ReflexArc& arc, const RatPoint& x) {
    return dist2(arc.center, x) == arc.radius2() && outside_wedge(arc, x);
}

bool point_in_sector(const ReflexArc& arc, const RatPoint& x) {
    return dist2(arc.center, x) < arc.radius2() && outside_wedge(arc, x);
}

bool arc_meets_segment(const ReflexArc& arc, const RatPoint& a, const RatPoint& b) {
    const RatPoint base = minus(a, arc.center), step = minus(b, a);
    const Rat A = step[0] * step[0] + step[1] * step[1];
    if (A.is_zero()) return point_on_arc(arc, a);
    const Rat B = 2 * (base[0] * step[0] + base[1] * step[1]);
    const Rat C = base[0] * base[0] + base[1] * base[1] - arc.radius2();
    const Rat D = B * B - 4 * A * C;
    if (D.sign() < 0) return false;
    for (int s : {-1, 1}) {
        const bool in_range = sign_with_sqrt(-B, Rat(s), D) >= 0 && sign_with_sqrt(-B - 2 * A, Rat(s), D) <= 0;
        if (in_range && outside_at_root(arc, base, step, A, B, D, s)) return true;
    }
    return false;
}

bool sector_meets_segment(const ReflexArc& arc, const RatPoint& a, const RatPoint& b) {
    const RatPoint base = minus(a, arc.center), step = minus(b, a);
    const Rat A = step[0] * step[0] + step[1] * step[1];
    if (A.is_zero()) return point_in_sector(arc, a);
    const Rat B = 2 * (base[0] * step[0] + base[1] * step[1]);
    const Rat C = base[0] * base[0] + base[1] * base[1] - arc.radius2();
    const Rat D = B * B - 4 * A * C;
    if (D.sign() <= 0) return false;
    // Parameters on [0,1] inside the open disk: (lo, hi), as surds over 2A.
    const Surd zero{Rat(0), Rat(0)}, one{2 * A, Rat(0)};
    const Surd t_minus{-B, Rat(-1)}, t_plus{-B, Rat(1)};
    const Surd lo = compare(t_minus, zero, D) > 0 ? t_minus : zero;
    const Surd hi = compare(t_plus, one, D) < 0 ? t_plus : one;
    if (compare(lo, hi, D) >= 0) return false;
    // Parameters inside the closed wedge form one closed interval.
    std::optional<Surd> from, to;
    bool empty = false;
    auto clip = [&](const Rat& f0, const Rat& f1) {
        if (f1.is_zero()) {
            if (f0.sign() < 0) empty = true;
            return;
        }
        const Surd root{-2 * A * f0 / f1, Rat(0)};
        if (f1.sign() > 0) {
            if (!from || compare(root, *from, D) > 0) from = root;
        } else if (!to || compare(root, *to, D) < 0) {
            to = root;
        }
    };
    clip(cross(arc.first, base), cross(arc.first, step));
    clip(cross(base, arc.second), cross(step, arc.second));
    if (empty || (from && to && compare(*from, *to, D) > 0)) return true;
    return (from && compare(lo, *from, D) < 0) || (to && compare(hi, *to, D) > 0);
}

bool arcs_meet(const ReflexArc& p, const ReflexArc& q) {
    const RatPoint d = minus(q.center, p.center);
    const Rat L = d[0] * d[0] + d[1] * d[1];
    if (L.is_zero()) return p.radius == q.radius;
    const Rat along = (p.radius2() - q.radius2() + L) / (2 * L);
    const Rat D = p.radius2() / L - along * along;
    if (D.sign() < 0) return false;
    const RatPoint perp{-d[1], d[0]};
    const RatPoint foot{p.center[0] + along * d[0], p.center[1] + along * d[1]};
    // Points foot + s sqrt(D) perp.
    auto outside = [&](const ReflexArc& arc, int s) {
        const RatPoint base = minus(foot, arc.center);
        return sign_with_sqrt(cross(arc.first, base), s * cross(arc.first, perp), D) < 0 ||
               sign_with_sqrt(cross(base, arc.second), s * cross(perp, arc.second), D) < 0;
    };
    for (int s : {-1, 1})
        if (outside(p, s) && outside(q, s)) return true;
    return false;
}

}  // namespace oor
