#include "oor/cyclo_real.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include <mpfr.h>

namespace oor {
namespace {

std::mutex& table_mutex() {
    static std::mutex m;
    return m;
}

/// Polynomial long division by a monic divisor; returns the quotient.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& div) {
    const size_t dn = div.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        const long c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * div[j];
    }
    return q;
}

struct Mpfr {
    mpfr_t v;
    explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

/// cos(2 pi i / N) for i < phi(N) at precision p, shared across calls.
struct CosTable {
    std::vector<std::unique_ptr<Mpfr>> values;
};

const CosTable& cos_table(int N, mpfr_prec_t prec) {
    static std::map<std::pair<int, long>, std::unique_ptr<CosTable>> cache;
    static std::mutex cos_mutex;
    const int phi = euler_phi(N);
    std::lock_guard lock(cos_mutex);
    auto& slot = cache[{N, static_cast<long>(prec)}];
    if (!slot) {
        slot = std::make_unique<CosTable>();
        Mpfr arg(prec + 16);
        for (int i = 0; i < phi; ++i) {
            mpfr_const_pi(arg.v, MPFR_RNDN);
            mpfr_mul_si(arg.v, arg.v, 2L * i, MPFR_RNDN);
            mpfr_div_si(arg.v, arg.v, N, MPFR_RNDN);
            auto c = std::make_unique<Mpfr>(prec);
            mpfr_cos(c->v, arg.v, MPFR_RNDN);
            slot->values.push_back(std::move(c));
        }
    }
    return *slot;
}

/// Evaluates sum c_i cos(2 pi i/N) and a bound on its absolute error.
void evaluate(int N, const std::vector<BigInt>& coeffs, mpfr_prec_t prec, Mpfr& sum, Mpfr& err) {
    mpfr_set_zero(sum.v, 1);
    Mpfr term(prec), abs_total(prec);
    mpfr_set_zero(abs_total.v, 1);
    if (N == 0) {
        mpfr_set_z(sum.v, coeffs[0].backend().data(), MPFR_RNDN);
        mpfr_abs(abs_total.v, sum.v, MPFR_RNDU);
    } else {
        const auto& table = cos_table(N, prec);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            mpfr_mul_z(term.v, table.values[i]->v, coeffs[i].backend().data(), MPFR_RNDN);
            mpfr_add(sum.v, sum.v, term.v, MPFR_RNDN);
            mpfr_set_z(term.v, coeffs[i].backend().data(), MPFR_RNDU);
            mpfr_abs(term.v, term.v, MPFR_RNDU);
            mpfr_add(abs_total.v, abs_total.v, term.v, MPFR_RNDU);
        }
    }
    // Each cosine is off by < 32 ulp(1) after argument rounding; every product
    // and partial sum adds at most abs_total * 2^-prec.
    mpfr_mul_si(err.v, abs_total.v, static_cast<long>(coeffs.size()) + 64, MPFR_RNDU);
    mpfr_mul_2si(err.v, err.v, 1 - static_cast<long>(prec), MPFR_RNDU);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<int, std::vector<long>> cache;
    {
        std::lock_guard lock(table_mutex());
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    // x^N - 1 divided by Phi_d for every proper divisor d.
    std::vector<long> poly(N + 1, 0);
    poly[0] = -1;
    poly[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
    std::lock_guard lock(table_mutex());
    return cache.emplace(N, std::move(poly)).first->second;
}

int euler_phi(int N) { return N <= 2 ? 1 : static_cast<int>(cyclotomic_polynomial(N).size()) - 1; }

CycloReal::CycloReal(const Rat& r) : coeffs_{boost::multiprecision::numerator(r)}, den_(boost::multiprecision::denominator(r)) {}

CycloReal CycloReal::from_polynomial(int N, std::vector<BigInt> coeffs, BigInt den) {
    if (N <= 2) {
        // Q(zeta_1) = Q(zeta_2) = Q; z = +-1.
        BigInt total = 0;
        for (size_t i = 0; i < coeffs.size(); ++i) total += (N == 2 && i % 2) ? BigInt(-coeffs[i]) : coeffs[i];
        CycloReal out;
        out.coeffs_ = {total};
        out.den_ = den;
        out.normalize();
        return out;
    }
    const auto& phi_poly = cyclotomic_polynomial(N);
    const size_t phi = phi_poly.size() - 1;
    for (size_t d = coeffs.size(); d-- > phi;) {
        if (coeffs[d].is_zero()) continue;
        const BigInt c = coeffs[d];
        for (size_t j = 0; j < phi; ++j)
            if (phi_poly[j]) coeffs[d - phi + j] -= c * phi_poly[j];
        coeffs[d] = 0;
    }
    coeffs.resize(phi);
    CycloReal out;
    out.field_ = N;
    out.coeffs_ = std::move(coeffs);
    out.den_ = std::move(den);
    out.normalize();
    return out;
}

CycloReal CycloReal::two_cos(int N, long a) {
    a = ((a % N) + N) % N;
    std::vector<BigInt> poly(N, 0);
    poly[a] += 1;
    poly[(N - a) % N] += 1;
    return from_polynomial(N, std::move(poly));
}

CycloReal CycloReal::cos_2pi(long k, int n) {
    const int N = std::lcm(n, 4);
    CycloReal c = two_cos(N, k * (N / n));
    c.den_ *= 2;
    c.normalize();
    return c;
}

CycloReal CycloReal::sin_2pi(long k, int n) {
    // sin t = cos(t - pi/2); pi/2 is a quarter of the full turn.
    const int N = std::lcm(n, 4);
    CycloReal s = two_cos(N, k * (N / n) - N / 4);
    s.den_ *= 2;
    s.normalize();
    return s;
}

void CycloReal::normalize() {
    if (den_.sign() < 0) {
        den_ = -den_;
        for (auto& c : coeffs_) c = -c;
    }
    if (den_ == 1) return;
    BigInt g = den_;
    for (const auto& c : coeffs_) {
        if (g == 1) break;
        if (!c.is_zero()) g = gcd(g, c);
    }
    if (is_zero()) g = den_;
    if (g != 1) {
        den_ /= g;
        for (auto& c : coeffs_) c /= g;
    }
}

bool CycloReal::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

void CycloReal::lift_to(int N) {
    if (field_ == N) return;
    const int step = field_ == 0 ? 0 : N / field_;
    std::vector<BigInt> poly(std::max<size_t>(N, 1), 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] += coeffs_[i];
    *this = from_polynomial(N, std::move(poly), den_);
}

void CycloReal::align(CycloReal& a, CycloReal& b) {
    if (a.field_ == b.field_) return;
    const int N = a.field_ == 0 ? b.field_ : b.field_ == 0 ? a.field_ : std::lcm(a.field_, b.field_);
    a.lift_to(N);
    b.lift_to(N);
}

CycloReal& CycloReal::operator+=(const CycloReal& o) {
    CycloReal rhs = o;
    align(*this, rhs);
    if (den_ == rhs.den_) {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    } else {
        for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] * rhs.den_ + rhs.coeffs_[i] * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

CycloReal CycloReal::operator-() const {
    CycloReal out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloReal& CycloReal::operator-=(const CycloReal& o) { return *this += -o; }

CycloReal& CycloReal::operator*=(const CycloReal& o) {
    CycloReal rhs = o;
    align(*this, rhs);
    const size_t m = coeffs_.size();
    if (field_ == 0) {
        coeffs_[0] *= rhs.coeffs_[0];
        den_ *= rhs.den_;
        normalize();
        return *this;
    }
    std::vector<BigInt> prod(2 * m - 1, 0);
    for (size_t i = 0; i < m; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < m; ++j)
            if (!rhs.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    *this = from_polynomial(field_, std::move(prod), den_ * rhs.den_);
    return *this;
}

int CycloReal::sign() const {
    if (is_zero()) return 0;
    for (mpfr_prec_t prec = 64;; prec *= 2) {
        Mpfr sum(prec), err(prec), mag(prec);
        evaluate(field_, coeffs_, prec, sum, err);
        mpfr_abs(mag.v, sum.v, MPFR_RNDD);
        if (mpfr_cmp(mag.v, err.v) > 0) return mpfr_sgn(sum.v) > 0 ? 1 : -1;
        if (prec > (1 << 20)) throw std::runtime_error("CycloReal sign refinement did not converge");
    }
}

Interval CycloReal::to_interval() const {
    if (is_zero()) return {0.0, 0.0};
    const mpfr_prec_t prec = 96;
    Mpfr sum(prec), err(prec), lo(prec), hi(prec);
    evaluate(field_, coeffs_, prec, sum, err);
    mpfr_sub(lo.v, sum.v, err.v, MPFR_RNDD);
    mpfr_add(hi.v, sum.v, err.v, MPFR_RNDU);
    mpfr_div_z(lo.v, lo.v, den_.backend().data(), MPFR_RNDD);
    mpfr_div_z(hi.v, hi.v, den_.backend().data(), MPFR_RNDU);
    return {mpfr_get_d(lo.v, MPFR_RNDD), mpfr_get_d(hi.v, MPFR_RNDU)};
}

}  // namespace oor
