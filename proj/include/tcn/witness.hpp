#ifndef TCN_WITNESS_HPP
#define TCN_WITNESS_HPP

// Bounded-height search for rational points with y != 0 on E_{n,theta}.
// A hit certifies positive rank; a miss only means "none up to height H".

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "tcn/descent.hpp"

namespace tcn {

/// x = x_num / x_den_sqrt^2, y = y_num / x_den_sqrt^3 in lowest terms.
struct WitnessPoint {
    Curve curve;
    i64 x_num;
    i64 x_den_sqrt;
    i64 y_num;

    std::string x_string() const {
        const i64 den = x_den_sqrt * x_den_sqrt;
        return den == 1 ? std::to_string(x_num) : std::to_string(x_num) + "/" + std::to_string(den);
    }
    std::string y_string() const {
        const i64 den = x_den_sqrt * x_den_sqrt * x_den_sqrt;
        return den == 1 ? std::to_string(y_num) : std::to_string(y_num) + "/" + std::to_string(den);
    }
};

struct Rational {
    i64 num = 0;
    i64 den = 1;
};

struct PointCheck {
    bool on_curve = false;
    bool y_zero = false;  // 2-torsion: on the curve but not a witness
    explicit operator bool() const noexcept { return on_curve; }
};

namespace detail {

inline i128 cubic_value(const Curve& c, i64 a, i64 d) {
    // a (a - s n d^2)(a + 3 s n d^2), the numerator of y^2 * d^6.
    const i128 nd2 = static_cast<i128>(c.sign()) * static_cast<i128>(c.n()) * d * d;
    return static_cast<i128>(a) * (a - nd2) * (a + 3 * nd2);
}

inline std::optional<i64> exact_sqrt(i128 v) {
    if (v < 0) return std::nullopt;
    // Squares mod 16 are {0,1,4,9}.
    const int r = static_cast<int>(v & 15);
    if (r != 0 && r != 1 && r != 4 && r != 9) return std::nullopt;
    i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    if (s * s != v) return std::nullopt;
    return static_cast<i64>(s);
}

}  // namespace detail

/// Scans d = 1..height, then a by increasing |a| (positive first) with
/// |a| <= height^2 * max(3n, 1) and gcd(a, d) = 1; returns the first point
/// with y != 0.
inline std::optional<WitnessPoint> search_point(const Curve& c, i64 height) {
    if (height < 1) throw std::invalid_argument("search_point: height must be >= 1");
    const i128 bound = static_cast<i128>(height) * height * std::max<i128>(3 * static_cast<i128>(c.n()), 1);
    if (bound * 4 >= (i128{1} << 40)) throw std::invalid_argument("search_point: height too large for exact 128-bit search");
    const i64 limit = static_cast<i64>(bound);
    for (i64 d = 1; d <= height; ++d) {
        for (i64 mag = 1; mag <= limit; ++mag) {
            if (std::gcd(mag, d) != 1) continue;
            for (i64 a : {mag, -mag}) {
                const i128 v = detail::cubic_value(c, a, d);
                if (v == 0) continue;
                if (auto y = detail::exact_sqrt(v)) return WitnessPoint{c, a, d, *y};
            }
        }
    }
    return std::nullopt;
}

/// Exact check of y^2 = x(x - s n)(x + 3 s n) over Q.
inline PointCheck check_point(const Curve& c, Rational x, Rational y) {
    using boost::multiprecision::cpp_int;
    if (x.den == 0 || y.den == 0) throw std::invalid_argument("check_point: zero denominator");
    const cpp_int xn = x.num, xd = x.den, yn = y.num, yd = y.den;
    const cpp_int sn = cpp_int(c.sign()) * cpp_int(c.n());
    // Cross-multiplied: yn^2 xd^3 = xn (xn - sn xd)(xn + 3 sn xd) yd^2.
    const cpp_int lhs = yn * yn * xd * xd * xd;
    const cpp_int rhs = xn * (xn - sn * xd) * (xn + 3 * sn * xd) * yd * yd;
    PointCheck out;
    out.on_curve = lhs == rhs;
    out.y_zero = out.on_curve && y.num == 0;
    return out;
}

inline PointCheck check_point(const WitnessPoint& w) {
    const i64 d2 = w.x_den_sqrt * w.x_den_sqrt;
    return check_point(w.curve, {w.x_num, d2}, {w.y_num, d2 * w.x_den_sqrt});
}

}  // namespace tcn

#endif
