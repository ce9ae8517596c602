#pragma once

#include <cmath>
#include <limits>

#include <Eigen/Core>

namespace oor {

/// Closed double interval with outward rounding. Used only as a filter in
/// front of exact arithmetic: a sign is trusted when the interval excludes 0.
struct Interval {
    double lo = 0, hi = 0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}  // NOLINT: implicit from exact doubles
    Interval(double l, double h) : lo(l), hi(h) {}

    /// +1 / -1 if certain, 0 if the interval contains zero.
    int sign() const { return lo > 0 ? 1 : hi < 0 ? -1 : 0; }
    bool certain() const { return lo > 0 || hi < 0; }
    double mid() const { return 0.5 * (lo + hi); }
};

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline Interval whole() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
}
inline Interval checked(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) return whole();
    return {down(lo), up(hi)};
}
inline Interval operator+(const Interval& a, const Interval& b) { return checked(a.lo + b.lo, a.hi + b.hi); }
inline Interval operator-(const Interval& a, const Interval& b) { return checked(a.lo - b.hi, a.hi - b.lo); }
inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
inline Interval operator*(const Interval& a, const Interval& b) {
    const double p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    double lo = p[0], hi = p[0];
    for (double v : p) {
        if (std::isnan(v)) return whole();
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {down(lo), up(hi)};
}
inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

}  // namespace oor

namespace Eigen {
template <>
struct NumTraits<oor::Interval> : GenericNumTraits<oor::Interval> {
    using Real = oor::Interval;
    using NonInteger = oor::Interval;
    using Nested = oor::Interval;
    using Literal = oor::Interval;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 2, AddCost = 4, MulCost = 8 };
};
}  // namespace Eigen
