#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "oor/interval.hpp"

namespace oor {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline int sign(const Rat& r) { return r.sign(); }
inline int sign(const BigInt& r) { return r.sign(); }

/// Enclosing double interval.
Interval to_interval(const Rat& r);
inline Interval to_interval(const BigInt& r) { return to_interval(Rat(r)); }

/// "p/q" or "p" (canonical: reduced, positive denominator, no "/1").
std::string to_string(const Rat& r);
/// Accepts "p/q", "p", or a finite decimal like "-0.125". Throws InputError.
Rat parse_rat(std::string_view text);

/// Dyadic rational m / 2^k with |x - m/2^k| <= 2^-k (rounds toward zero).
Rat dyadic_near(double x, int k);
Rat dyadic_floor(const Rat& x, int k);

}  // namespace oor
