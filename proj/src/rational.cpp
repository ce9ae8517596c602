#include "oor/rational.hpp"

#include <cmath>
#include <regex>

#include "oor/graph.hpp"

namespace oor {

Interval to_interval(const Rat& r) {
    if (r.is_zero()) return {0.0, 0.0};
    const double d = r.convert_to<double>();
    if (std::isfinite(d) && Rat(d) == r) return {d, d};
    return {down(d), up(d)};
}

std::string to_string(const Rat& r) { return r.str(); }

namespace {
// BigInt reads a leading 0 as octal.
BigInt decimal_int(const std::string& digits) {
    const auto first = digits.find_first_not_of('0');
    return first == std::string::npos ? BigInt(0) : BigInt(digits.substr(first));
}
}  // namespace

Rat parse_rat(std::string_view text) {
    static const std::regex frac(R"(^([+-]?)(\d+)(?:/(\d+))?$)");
    static const std::regex dec(R"(^([+-]?)(\d+)\.(\d+)$)");
    const std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, frac)) {
        const BigInt den = m[3].matched ? decimal_int(m[3].str()) : BigInt(1);
        if (den.is_zero()) throw InputError("zero denominator in '" + s + "'");
        const Rat v(decimal_int(m[2].str()), den);
        return m[1] == "-" ? Rat(-v) : v;
    }
    if (std::regex_match(s, m, dec)) {
        const std::string digits = m[2].str() + m[3].str();
        BigInt den = 1;
        for (auto i = m[3].length(); i > 0; --i) den *= 10;
        Rat v(decimal_int(digits), den);
        return m[1] == "-" ? Rat(-v) : v;
    }
    throw InputError("not a rational number: '" + s + "'");
}

Rat dyadic_near(double x, int k) {
    const double scaled = std::trunc(std::ldexp(x, k));
    Rat r(scaled);
    BigInt den = 1;
    den <<= k;
    return r / Rat(den);
}

Rat dyadic_floor(const Rat& x, int k) {
    BigInt scale = 1;
    scale <<= k;
    const Rat s = x * Rat(scale);
    BigInt q = numerator(s) / denominator(s);  // truncates toward zero
    if (s.sign() < 0 && Rat(q) != s) q -= 1;
    return Rat(q, scale);
}

}  // namespace oor
