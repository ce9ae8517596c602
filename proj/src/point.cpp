#include "oor/point.hpp"

#include <stdexcept>

namespace oor {
namespace {

template <class S>
IVec3 interval_of(const Vec3<S>& v) {
    return IVec3(to_interval(v[0]), to_interval(v[1]), to_interval(v[2]));
}

IVec3 icross(const IVec3& a, const IVec3& b) {
    return IVec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

Interval idet(const IVec3& a, const IVec3& b, const IVec3& c) {
    const IVec3 bc = icross(b, c);
    return a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2];
}

}  // namespace

template <class S>
HPoint<S> HPoint<S>::affine(const S& x, const S& y) {
    return homogeneous(Vec3<S>(x, y, S(1)));
}

template <class S>
HPoint<S> HPoint<S>::homogeneous(Vec3<S> v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->approx = interval_of<S>(v);
    n->value = std::move(v);
    std::call_once(n->once, [] {});
    HPoint p;
    p.node_ = std::move(n);
    return p;
}

template <class S>
HPoint<S> HPoint<S>::meet(const HPoint& a, const HPoint& b, const HPoint& c, const HPoint& d) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Meet;
    n->args = {a.node_, b.node_, c.node_, d.node_};
    n->approx = icross(icross(a.approx(), b.approx()), icross(c.approx(), d.approx()));
    HPoint p;
    p.node_ = std::move(n);
    return p;
}

template <class S>
HPoint<S> HPoint<S>::midpoint(const HPoint& a, const HPoint& b) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mid;
    n->args = {a.node_, b.node_, nullptr, nullptr};
    const IVec3& p = a.approx();
    const IVec3& q = b.approx();
    n->approx = IVec3(p[0] * q[2] + q[0] * p[2], p[1] * q[2] + q[1] * p[2], Interval(2.0) * p[2] * q[2]);
    HPoint out;
    out.node_ = std::move(n);
    return out;
}

template <class S>
const Vec3<S>& HPoint<S>::resolve(const Node& n) {
    std::call_once(n.once, [&n] {
        switch (n.kind) {
            case Kind::Leaf:
                break;
            case Kind::Meet: {
                const Vec3<S> l1 = resolve(*n.args[0]).cross(resolve(*n.args[1]));
                const Vec3<S> l2 = resolve(*n.args[2]).cross(resolve(*n.args[3]));
                n.value = l1.cross(l2);
                break;
            }
            case Kind::Mid: {
                const Vec3<S>& p = resolve(*n.args[0]);
                const Vec3<S>& q = resolve(*n.args[1]);
                n.value = Vec3<S>(p[0] * q[2] + q[0] * p[2], p[1] * q[2] + q[1] * p[2], S(2) * p[2] * q[2]);
                break;
            }
        }
    });
    return *n.value;
}

template <class S>
const Vec3<S>& HPoint<S>::exact() const {
    if (!node_) throw std::logic_error("empty HPoint");
    return resolve(*node_);
}

template <class S>
std::pair<double, double> HPoint<S>::to_double() const {
    const IVec3& a = approx();
    const double w = a[2].mid();
    if (a[2].certain() && (a[0].hi - a[0].lo) < 1e-9 * (1 + std::abs(a[0].mid())))
        return {a[0].mid() / w, a[1].mid() / w};
    const Vec3<S>& e = exact();
    const double we = to_interval(e[2]).mid();
    return {to_interval(e[0]).mid() / we, to_interval(e[1]).mid() / we};
}

template class HPoint<Rat>;
template class HPoint<CycloReal>;

namespace {

template <class S>
int w_sign(const HPoint<S>& p) {
    const int s = p.approx()[2].sign();
    return s != 0 ? s : sign(p.exact()[2]);
}

}  // namespace

template <class S>
int orientation(const HPoint<S>& p, const HPoint<S>& q, const HPoint<S>& r) {
    const int ws = w_sign(p) * w_sign(q) * w_sign(r);
    const int fast = idet(p.approx(), q.approx(), r.approx()).sign();
    if (fast != 0) return fast * ws;
    const Vec3<S>& a = p.exact();
    return sign(a.dot(q.exact().cross(r.exact()))) * ws;
}

template <class S>
int compare_x(const HPoint<S>& p, const HPoint<S>& q) {
    const int ws = w_sign(p) * w_sign(q);
    const Interval d = p.approx()[0] * q.approx()[2] - q.approx()[0] * p.approx()[2];
    if (d.certain()) return d.sign() * ws;
    const Vec3<S>& a = p.exact();
    const Vec3<S>& b = q.exact();
    return sign(S(a[0] * b[2] - b[0] * a[2])) * ws;
}

template <class S>
int compare_y(const HPoint<S>& p, const HPoint<S>& q) {
    const int ws = w_sign(p) * w_sign(q);
    const Interval d = p.approx()[1] * q.approx()[2] - q.approx()[1] * p.approx()[2];
    if (d.certain()) return d.sign() * ws;
    const Vec3<S>& a = p.exact();
    const Vec3<S>& b = q.exact();
    return sign(S(a[1] * b[2] - b[1] * a[2])) * ws;
}

namespace {

/// For p collinear with [a,b]: p in the closed segment.
template <class S>
bool between_closed(const HPoint<S>& p, const HPoint<S>& a, const HPoint<S>& b) {
    const int ca = compare_xy(p, a), cb = compare_xy(p, b);
    return ca == 0 || cb == 0 || ca != cb;
}

}  // namespace

template <class S>
SegmentRelation<S> segment_relation(const Segment<S>& s1, const Segment<S>& s2) {
    const auto& [a, b] = s1;
    const auto& [c, d] = s2;
    SegmentRelation<S> out;
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    if (o1 == 0 && o2 == 0) {
        const bool ab = compare_xy(a, b) < 0, cd = compare_xy(c, d) < 0;
        const HPoint<S>& lo1 = ab ? a : b;
        const HPoint<S>& hi1 = ab ? b : a;
        const HPoint<S>& lo2 = cd ? c : d;
        const HPoint<S>& hi2 = cd ? d : c;
        const HPoint<S>& lo = compare_xy(lo1, lo2) >= 0 ? lo1 : lo2;
        const HPoint<S>& hi = compare_xy(hi1, hi2) <= 0 ? hi1 : hi2;
        const int cmp = compare_xy(lo, hi);
        if (cmp < 0) out.kind = SegmentRelationKind::CollinearOverlap;
        else if (cmp == 0) {
            out.kind = SegmentRelationKind::EndpointTouch;
            out.point = lo;
        }
        return out;
    }
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        out.kind = SegmentRelationKind::ProperCross;
        out.point = HPoint<S>::meet(a, b, c, d);
        return out;
    }
    auto touch = [&](const HPoint<S>& p) {
        out.kind = SegmentRelationKind::EndpointTouch;
        out.point = p;
        return out;
    };
    if (o1 == 0 && between_closed(c, a, b)) return touch(c);
    if (o2 == 0 && between_closed(d, a, b)) return touch(d);
    if (o3 == 0 && between_closed(a, c, d)) return touch(a);
    if (o4 == 0 && between_closed(b, c, d)) return touch(b);
    return out;
}

template <class S>
int compare_direction(const HPoint<S>& o, const HPoint<S>& p, const HPoint<S>& q) {
    auto half = [&](const HPoint<S>& t) {
        const int dy = compare_y(t, o);
        return (dy > 0 || (dy == 0 && compare_x(t, o) > 0)) ? 0 : 1;
    };
    const int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq ? -1 : 1;
    return -orientation(o, p, q);
}

#define OOR_INSTANTIATE(S)                                                                   \
    template int orientation(const HPoint<S>&, const HPoint<S>&, const HPoint<S>&);         \
    template int compare_x(const HPoint<S>&, const HPoint<S>&);                             \
    template int compare_y(const HPoint<S>&, const HPoint<S>&);                             \
    template SegmentRelation<S> segment_relation(const Segment<S>&, const Segment<S>&);     \
    template int compare_direction(const HPoint<S>&, const HPoint<S>&, const HPoint<S>&);

OOR_INSTANTIATE(Rat)
OOR_INSTANTIATE(CycloReal)
#undef OOR_INSTANTIATE

}  // namespace oor
