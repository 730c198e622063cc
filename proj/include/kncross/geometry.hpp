#pragma once

// Exact rational predicates and constructions. Nothing in here touches
// floating point; every decision is a sign of an exact determinant.

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace kncross {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline bool lex_less(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

inline Rational cross(const Rational& ax, const Rational& ay, const Rational& bx,
                      const Rational& by) {
    return ax * by - ay * bx;
}

// +1 when p, q, r turn counterclockwise, -1 clockwise, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    Rational det = cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y);
    return det.sign();
}

// Parameters (s, t) in (0,1)^2 such that a1 + s(a2-a1) = b1 + t(b2-b1), present
// only when the open segments cross transversally.
inline std::optional<std::pair<Rational, Rational>> crossing_parameters(const Point& a1,
                                                                        const Point& a2,
                                                                        const Point& b1,
                                                                        const Point& b2) {
    const int o1 = orient(a1, a2, b1);
    const int o2 = orient(a1, a2, b2);
    const int o3 = orient(b1, b2, a1);
    const int o4 = orient(b1, b2, a2);
    if (o1 * o2 >= 0 || o3 * o4 >= 0) return std::nullopt;

    const Rational dax = a2.x - a1.x, day = a2.y - a1.y;
    const Rational dbx = b2.x - b1.x, dby = b2.y - b1.y;
    const Rational denom = cross(dax, day, dbx, dby);
    const Rational ox = b1.x - a1.x, oy = b1.y - a1.y;
    Rational s = cross(ox, oy, dbx, dby) / denom;
    Rational t = cross(ox, oy, dax, day) / denom;
    return std::make_pair(std::move(s), std::move(t));
}

inline std::optional<Point> proper_intersection(const Point& a1, const Point& a2, const Point& b1,
                                                const Point& b2) {
    auto params = crossing_parameters(a1, a2, b1, b2);
    if (!params) return std::nullopt;
    const Rational& s = params->first;
    return Point{a1.x + s * (a2.x - a1.x), a1.y + s * (a2.y - a1.y)};
}

// Rational parametrization of the unit circle; u = tan(angle / 2).
inline Point circle_point(const Rational& u) {
    const Rational u2 = u * u;
    const Rational denom = 1 + u2;
    return Point{(1 - u2) / denom, 2 * u / denom};
}

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad integer '" + s + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer '" + s + "'");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    };
    if (slash == std::string::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
}

}  // namespace kncross
