#include "oor/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oor {

using nlohmann::json;

std::string to_string(PlacementMode m) {
    switch (m) {
        case PlacementMode::RationalPlane: return "rational-plane";
        case PlacementMode::RationalCocircular: return "rational-cocircular";
        case PlacementMode::RegularNGon: return "regular-ngon";
    }
    return "?";
}

PlacementMode parse_mode(const std::string& s) {
    if (s == "rational-plane") return PlacementMode::RationalPlane;
    if (s == "rational-cocircular") return PlacementMode::RationalCocircular;
    if (s == "regular-ngon") return PlacementMode::RegularNGon;
    throw InputError("unknown placement mode '" + s + "'");
}

std::vector<HPoint<Rat>> Placement::rational_points() const {
    if (!is_rational()) throw InputError("placement is not in a rational mode");
    std::vector<HPoint<Rat>> out;
    out.reserve(coords.size());
    for (const auto& [x, y] : coords) out.push_back(HPoint<Rat>::affine(x, y));
    return out;
}

std::vector<HPoint<CycloReal>> Placement::regular_points() const {
    if (is_rational()) throw InputError("placement is not regular");
    std::vector<HPoint<CycloReal>> out;
    out.reserve(slots.size());
    for (int k : slots) out.push_back(regular_vertex(k, sides));
    return out;
}

std::optional<CircularOrder> Placement::order() const {
    if (mode != PlacementMode::RegularNGon) return std::nullopt;
    std::vector<Vertex> by_slot(slots.size());
    std::iota(by_slot.begin(), by_slot.end(), 0);
    std::sort(by_slot.begin(), by_slot.end(), [&](Vertex a, Vertex b) { return slots[a] < slots[b]; });
    return CircularOrder(by_slot);
}

Placement Placement::restricted(const std::vector<Vertex>& keep) const {
    Placement p;
    p.mode = mode;
    p.sides = sides;
    for (Vertex v : keep) {
        if (is_rational()) p.coords.push_back(coords.at(v));
        if (mode == PlacementMode::RationalCocircular) p.params.push_back(params.at(v));
        if (!is_rational()) p.slots.push_back(slots.at(v));
    }
    return p;
}

RatPoint circle_point(const Rat& t) {
    const Rat t2 = t * t;
    const Rat den = 1 + t2;
    return {(1 - t2) / den, 2 * t / den};
}

bool has_concurrent_chords(const std::vector<HPoint<Rat>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<HPoint<Rat>> crossings;
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) chords.emplace_back(i, j);
    for (size_t a = 0; a < chords.size(); ++a)
        for (size_t b = a + 1; b < chords.size(); ++b) {
            const auto rel = segment_relation(Segment<Rat>{pts[chords[a].first], pts[chords[a].second]},
                                              Segment<Rat>{pts[chords[b].first], pts[chords[b].second]});
            if (rel.kind == SegmentRelationKind::ProperCross) crossings.push_back(*rel.point);
            if (rel.kind == SegmentRelationKind::CollinearOverlap) return true;
        }
    std::sort(crossings.begin(), crossings.end(), [](const auto& p, const auto& q) { return compare_xy(p, q) < 0; });
    for (size_t i = 1; i < crossings.size(); ++i)
        if (same_point(crossings[i - 1], crossings[i])) return true;
    return false;
}

namespace {

double van_der_corput(std::uint64_t i) {
    double v = 0, f = 0.5;
    for (; i; i >>= 1, f *= 0.5)
        if (i & 1) v += f;
    return v;
}

/// Circle parameters t_k for clockwise slots k = 0..n-1 with jitter drawn
/// from the van der Corput sequence starting at `offset`.
std::vector<Rat> circle_params(int n, std::uint64_t offset, double amplitude) {
    const double pi = std::acos(-1.0);
    std::vector<Rat> t(n);
    for (int k = 0; k < n; ++k) {
        double theta = -2 * pi * k / n;
        if (k > 0) theta += amplitude * (2 * pi / n) * (van_der_corput(offset + k) - 0.5);
        if (theta <= -pi) theta += 2 * pi;
        t[k] = dyadic_near(std::tan(theta / 2), 24);
    }
    return t;
}

bool clockwise_params(const std::vector<Rat>& t) {
    // Clockwise on the circle means t decreases cyclically: exactly one ascent.
    const size_t n = t.size();
    int ascents = 0;
    for (size_t k = 0; k < n; ++k) {
        const int c = (t[(k + 1) % n] - t[k]).sign();
        if (c == 0) return false;
        ascents += c > 0;
    }
    return ascents == 1;
}

}  // namespace

Placement cocircular_placement(const CircularOrder& order, bool generic, std::uint64_t seed) {
    const int n = order.size();
    if (n < 3) throw InputError("cocircular placement needs at least 3 vertices");
    for (std::uint64_t attempt = 0;; ++attempt) {
        const auto t = circle_params(n, 1 + seed * 7919 + attempt * 104729, 0.4);
        if (!clockwise_params(t)) continue;
        Placement p;
        p.mode = PlacementMode::RationalCocircular;
        p.coords.resize(n);
        p.params.resize(n);
        for (int k = 0; k < n; ++k) {
            p.params[order.at(k)] = t[k];
            p.coords[order.at(k)] = circle_point(t[k]);
        }
        if (!generic || !has_concurrent_chords(p.rational_points())) return p;
    }
}

Vec3<CycloReal> regular_vertex_coords(int k, int sides) {
    const int N = std::lcm(sides, 4);
    const long a = static_cast<long>(k) * (N / sides);
    return Vec3<CycloReal>(CycloReal::two_cos(N, a), -CycloReal::two_cos(N, a - N / 4),
                           CycloReal::from_polynomial(N, {BigInt(2)}));
}

HPoint<CycloReal> regular_vertex(int k, int sides) { return HPoint<CycloReal>::homogeneous(regular_vertex_coords(k, sides)); }

Placement regular_placement(const CircularOrder& order) {
    const int n = order.size();
    if (n < 3) throw InputError("regular placement needs at least 3 vertices");
    Placement p;
    p.mode = PlacementMode::RegularNGon;
    p.sides = n;
    p.slots.resize(n);
    for (int k = 0; k < n; ++k) p.slots[order.at(k)] = k;
    return p;
}

Placement rational_placement(std::vector<RatPoint> coords) {
    Placement p;
    p.mode = PlacementMode::RationalPlane;
    p.coords = std::move(coords);
    return p;
}

json to_json(const CycloReal& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(c.str());
    return {{"field", x.field()}, {"coeffs", coeffs}, {"den", x.denominator().str()}};
}

CycloReal cyclo_from_json(const json& j) {
    try {
        const int field = j.at("field").get<int>();
        std::vector<BigInt> coeffs;
        for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
        const BigInt den(j.at("den").get<std::string>());
        if (den.sign() <= 0) throw InputError("non-positive denominator");
        if (field < 0 || field > 4096) throw InputError("bad field index");
        return CycloReal::from_polynomial(field, std::move(coeffs), den);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad cyclotomic number: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(std::string("bad cyclotomic number: ") + e.what());
    }
}

json to_json(const Placement& p) {
    json j;
    j["mode"] = to_string(p.mode);
    j["n"] = p.size();
    if (p.is_rational()) {
        json pts = json::array();
        for (const auto& [x, y] : p.coords) pts.push_back({to_string(x), to_string(y)});
        j["points"] = pts;
        if (p.mode == PlacementMode::RationalCocircular) {
            json ts = json::array();
            for (const auto& t : p.params) ts.push_back(to_string(t));
            j["params"] = ts;
        }
    } else {
        j["sides"] = p.sides;
        j["slots"] = p.slots;
        json pts = json::array();
        for (int k : p.slots) {
            const auto v = regular_vertex_coords(k, p.sides);
            pts.push_back({{"x", to_json(v[0])}, {"y", to_json(v[1])}, {"w", to_json(v[2])}});
        }
        j["points"] = pts;
    }
    return j;
}

Placement placement_from_json(const json& j) {
    try {
        Placement p;
        p.mode = parse_mode(j.at("mode").get<std::string>());
        const int n = j.at("n").get<int>();
        if (p.is_rational()) {
            for (const auto& pt : j.at("points")) {
                if (!pt.is_array() || pt.size() != 2) throw InputError("point must be [x, y]");
                p.coords.push_back({parse_rat(pt[0].get<std::string>()), parse_rat(pt[1].get<std::string>())});
            }
            if (p.mode == PlacementMode::RationalCocircular) {
                for (const auto& t : j.at("params")) p.params.push_back(parse_rat(t.get<std::string>()));
                if (p.params.size() != p.coords.size()) throw InputError("params and points differ in length");
                for (size_t i = 0; i < p.params.size(); ++i)
                    if (circle_point(p.params[i]) != p.coords[i])
                        throw InputError("point " + std::to_string(i) + " does not match its circle parameter");
            }
        } else {
            p.sides = j.at("sides").get<int>();
            p.slots = j.at("slots").get<std::vector<int>>();
            if (p.sides < 3) throw InputError("regular polygon needs at least 3 sides");
            std::vector<char> used(p.sides, 0);
            for (int k : p.slots) {
                if (k < 0 || k >= p.sides || used[k]) throw InputError("slots must be distinct values in [0, sides)");
                used[k] = 1;
            }
            if (j.contains("points")) {
                const auto& pts = j.at("points");
                if (pts.size() != p.slots.size()) throw InputError("points and slots differ in length");
                for (size_t i = 0; i < p.slots.size(); ++i) {
                    const auto v = regular_vertex_coords(p.slots[i], p.sides);
                    for (int c = 0; c < 3; ++c)
                        if (cyclo_from_json(pts[i].at(c == 0 ? "x" : c == 1 ? "y" : "w")) != v[c])
                            throw InputError("point " + std::to_string(i) + " does not match its slot");
                }
            }
        }
        if (p.size() != n) throw InputError("placement size does not match n");
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("bad placement document: ") + e.what());
    }
}

json point_to_json(const HPoint<Rat>& p) {
    const auto& v = p.exact();
    return {to_string(Rat(v[0] / v[2])), to_string(Rat(v[1] / v[2]))};
}

json point_to_json(const HPoint<CycloReal>& p) {
    const auto& v = p.exact();
    return {{"x", to_json(v[0])}, {"y", to_json(v[1])}, {"w", to_json(v[2])}};
}

template <>
HPoint<Rat> point_from_json<Rat>(const json& j) {
    try {
        if (!j.is_array() || j.size() != 2) throw InputError("rational point must be [x, y]");
        return HPoint<Rat>::affine(parse_rat(j[0].get<std::string>()), parse_rat(j[1].get<std::string>()));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad point: ") + e.what());
    }
}

template <>
HPoint<CycloReal> point_from_json<CycloReal>(const json& j) {
    try {
        Vec3<CycloReal> v(cyclo_from_json(j.at("x")), cyclo_from_json(j.at("y")), cyclo_from_json(j.at("w")));
        if (v[2].is_zero()) throw InputError("point at infinity");
        return HPoint<CycloReal>::homogeneous(std::move(v));
    } catch (const json::exception& e) {
        throw InputError(std::string("bad point: ") + e.what());
    }
}

RatPoint affine_approx(const HPoint<Rat>& p) {
    const auto& v = p.exact();
    return {v[0] / v[2], v[1] / v[2]};
}

RatPoint affine_approx(const HPoint<CycloReal>& p) {
    const auto [x, y] = p.to_double();
    return {Rat(x), Rat(y)};
}

}  // namespace oor
