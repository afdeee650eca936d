#ifndef TCN_TEST_LOCAL_IMAGE_ORACLE_HPP
#define TCN_TEST_LOCAL_IMAGE_ORACLE_HPP

// Independent check of the local image tables: sample points of
// y^2 = x(x^2 + A x + B) over Q_p (x = a p^j for many a, j), keep the x
// that give a p-adic square, and collect the classes of x in
// Q_p*/(Q_p*)^2. The sampled set is a lower bound for the true image; with
// the ranges below it is the whole image for every curve we try.

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <utility>

#include "tcn/descent.hpp"

namespace tcn::oracle {

using boost::multiprecision::cpp_int;

// Class of a nonzero p-adic number: (valuation mod 2, unit class), where the
// unit class is u mod 8 for p = 2 and the Legendre symbol otherwise.
using LocalClass = std::pair<int, int>;

inline std::pair<int, cpp_int> split(cpp_int x, u64 p) {
    int e = 0;
    while (x % p == 0) {
        x /= p;
        ++e;
    }
    return {e, x};
}

inline int unit_class(const cpp_int& u, u64 p) {
    cpp_int r = u % (p == 2 ? 8 : p);
    if (r < 0) r += (p == 2 ? 8 : p);
    const i64 rr = r.convert_to<i64>();
    return p == 2 ? static_cast<int>(rr) : legendre(rr, p);
}

inline bool is_square_qp(const cpp_int& x, u64 p) {
    if (x == 0) return true;
    const auto [e, u] = split(x, p);
    if (e % 2) return false;
    return p == 2 ? unit_class(u, 2) == 1 : unit_class(u, p) == 1;
}

inline LocalClass class_of_fraction(const cpp_int& num, const cpp_int& den, u64 p) {
    const auto [e1, u1] = split(num, p);
    const auto [e2, u2] = split(den, p);
    return {((e1 - e2) % 2 + 2) % 2, unit_class(u1 * u2, p)};
}

inline LocalClass class_of_square_class(const SquareClass& d, u64 p) {
    // Rebuild the representative as a big integer; it may exceed int64 for large n.
    cpp_int r = d.negative() ? -1 : 1;
    for (u64 q : d.support()) r *= q;
    return class_of_fraction(r, 1, p);
}

/// Classes of x over sampled points of y^2 = x(x^2 + A x + B) over Q_p,
/// including the 2-torsion point (0,0), which maps to the class of B.
inline std::set<LocalClass> sample_image(const cpp_int& A, const cpp_int& B, u64 p, int J = 5, int R = 400) {
    std::set<LocalClass> hits{class_of_fraction(1, 1, p)};
    if (B != 0) hits.insert(class_of_fraction(B, 1, p));
    for (int j = -J; j <= J; ++j) {
        for (int a = -R; a <= R; ++a) {
            if (a == 0 || a % static_cast<int>(p) == 0) continue;
            cpp_int num, den, f;
            if (j >= 0) {
                // x = a / p^j; f(x) p^{4j} = a (a^2 + A a p^j + B p^{2j}) p^j
                num = a;
                den = boost::multiprecision::pow(cpp_int(p), j);
                f = num * (num * num + A * num * den + B * den * den) * den;
            } else {
                num = a * boost::multiprecision::pow(cpp_int(p), -j);
                den = 1;
                f = num * (num * num + A * num + B);
            }
            if (f == 0 || is_square_qp(f, p)) hits.insert(class_of_fraction(num, den, p));
        }
    }
    return hits;
}

struct Mismatch {
    bool dual;  // true: Im(delta'), false: Im(delta)
    u64 p;
    SquareClass d;
};

/// Compares in_image_dual / in_image against sampling at every finite place of M(E).
inline std::vector<Mismatch> check_curve(const Curve& c) {
    const cpp_int n = c.n();
    const cpp_int s = c.sign();
    // x(x - s n)(x + 3 s n) = x^3 + 2 s n x^2 - 3 n^2 x
    const cpp_int A = 2 * s * n, B = -3 * n * n;
    // The 2-isogenous curve y^2 = x(x^2 - 2A x + A^2 - 4B).
    const cpp_int A2 = -2 * A, B2 = A * A - 4 * B;
    std::vector<Mismatch> bad;
    for (const Place& v : places_of(c)) {
        if (v.is_infinity()) continue;
        const u64 p = v.p();
        const auto im_dual = sample_image(A, B, p);
        const auto im = sample_image(A2, B2, p);
        for (const SquareClass& d : descent_group(c)) {
            const LocalClass k = class_of_square_class(d, p);
            if (im_dual.count(k) != static_cast<std::size_t>(in_image_dual(c, v, d))) bad.push_back({true, p, d});
            if (im.count(k) != static_cast<std::size_t>(in_image(c, v, d))) bad.push_back({false, p, d});
        }
    }
    return bad;
}

}  // namespace tcn::oracle

#endif
