#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "oor/interval.hpp"
#include "oor/rational.hpp"

namespace oor {

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int N);
int euler_phi(int N);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1), stored as
/// integer coefficients over a common positive denominator. Only real
/// elements are produced by the public constructors, so sign() is meaningful.
/// Field index 0 denotes a plain rational (promoted on mixed arithmetic).
class CycloReal {
public:
    CycloReal() : coeffs_{BigInt(0)} {}
    CycloReal(long v) : coeffs_{BigInt(v)} {}  // NOLINT: constants mix freely
    explicit CycloReal(const Rat& r);

    /// Reduces the polynomial sum c_i z^i (any length) modulo Phi_N.
    static CycloReal from_polynomial(int N, std::vector<BigInt> coeffs, BigInt den = 1);
    /// z^a + z^-a = 2 cos(2 pi a / N).
    static CycloReal two_cos(int N, long a);
    /// cos(2 pi k / n) and sin(2 pi k / n) in the field of index lcm(n, 4).
    static CycloReal cos_2pi(long k, int n);
    static CycloReal sin_2pi(long k, int n);

    int field() const { return field_; }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const;
    /// Exact sign: zero is decided symbolically, otherwise the value is
    /// evaluated at doubling precision until the error bound excludes 0.
    int sign() const;
    Interval to_interval() const;
    double to_double() const { return to_interval().mid(); }

    CycloReal& operator+=(const CycloReal& o);
    CycloReal& operator-=(const CycloReal& o);
    CycloReal& operator*=(const CycloReal& o);
    friend CycloReal operator+(CycloReal a, const CycloReal& b) { return a += b; }
    friend CycloReal operator-(CycloReal a, const CycloReal& b) { return a -= b; }
    friend CycloReal operator*(CycloReal a, const CycloReal& b) { return a *= b; }
    CycloReal operator-() const;

    friend bool operator==(const CycloReal& a, const CycloReal& b) { return (a - b).is_zero(); }
    friend bool operator!=(const CycloReal& a, const CycloReal& b) { return !(a == b); }
    friend bool operator<(const CycloReal& a, const CycloReal& b) { return (a - b).sign() < 0; }

    /// Representation identical (field, coefficients, denominator).
    bool same_representation(const CycloReal& o) const {
        return field_ == o.field_ && den_ == o.den_ && coeffs_ == o.coeffs_;
    }

private:
    void normalize();
    void lift_to(int N);
    static void align(CycloReal& a, CycloReal& b);

    int field_ = 0;
    std::vector<BigInt> coeffs_;
    BigInt den_ = 1;
};

inline int sign(const CycloReal& x) { return x.sign(); }
inline Interval to_interval(const CycloReal& x) { return x.to_interval(); }

}  // namespace oor

namespace Eigen {
template <>
struct NumTraits<oor::CycloReal> : GenericNumTraits<oor::CycloReal> {
    using Real = oor::CycloReal;
    using NonInteger = oor::CycloReal;
    using Nested = oor::CycloReal;
    using Literal = oor::CycloReal;
    enum { IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1, ReadCost = 20, AddCost = 50, MulCost = 500 };
};
}  // namespace Eigen
