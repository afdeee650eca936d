#ifndef TCN_DESCENT_HPP
#define TCN_DESCENT_HPP

// 2-isogeny descent on E_{n,pi/3}: y^2 = x(x-n)(x+3n) and
// E_{n,2pi/3}: y^2 = x(x+n)(x-3n).
//
// The local images Im(delta_v) (points of the isogenous curve E') and
// Im(delta'_v) (points of E) are decided per place by closed case tables
// over the descent group D(E) = <-1, 2, 3, p | n>. Congruences on a class d
// are taken on its signed square-free representative with the
// non-negative residue, so -3 = 1 (mod 4) and -2 = 6 (mod 8).

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcn/arith.hpp"

namespace tcn {

enum class Theta { PiThird, TwoPiThird };

inline std::string theta_name(Theta t) { return t == Theta::PiThird ? "pi_3" : "2pi_3"; }

class PlaceNotInM : public std::invalid_argument {
public:
    explicit PlaceNotInM(const Place& v) : std::invalid_argument("place " + v.to_string() + " is not in M(E)") {}
};

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// E_{n,theta} for square-free n >= 2.
class Curve {
public:
    Curve(u64 n, Theta theta) : n_(n), theta_(theta) {
        if (n < 2) throw std::invalid_argument("Curve: n must be >= 2");
        primes_ = factor_square_free(n);
    }

    u64 n() const noexcept { return n_; }
    Theta theta() const noexcept { return theta_; }
    const std::vector<u64>& primes() const noexcept { return primes_; }

    /// Roots of the cubic: {0, n, -3n} or {0, -n, 3n}.
    std::vector<i64> roots() const {
        const i64 n = static_cast<i64>(n_);
        return theta_ == Theta::PiThird ? std::vector<i64>{0, n, -3 * n} : std::vector<i64>{0, -n, 3 * n};
    }

    /// Sign s with the curve y^2 = x(x - s n)(x + 3 s n).
    int sign() const noexcept { return theta_ == Theta::PiThird ? 1 : -1; }

    std::string name() const { return "E_{" + std::to_string(n_) + "," + theta_name(theta_) + "}"; }

    friend bool operator==(const Curve& a, const Curve& b) { return a.n_ == b.n_ && a.theta_ == b.theta_; }

private:
    u64 n_;
    Theta theta_;
    std::vector<u64> primes_;
};

/// M(E) in the fixed order inf, 2, 3, ascending p >= 5 dividing n.
inline std::vector<Place> places_of(const Curve& c) {
    std::vector<Place> out{Place::infinity(), Place::prime(2), Place::prime(3)};
    for (u64 p : c.primes())
        if (p >= 5) out.push_back(Place::prime(p));
    return out;
}

inline bool in_places(const Curve& c, const Place& v) {
    if (v.is_infinity() || v.p() == 2 || v.p() == 3) return true;
    return std::binary_search(c.primes().begin(), c.primes().end(), v.p());
}

/// Generators of D(E): -1, then the distinct primes of {2, 3} and n.
inline std::vector<SquareClass> descent_generators(const Curve& c) {
    std::vector<u64> primes = c.primes();
    primes.push_back(2);
    primes.push_back(3);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    std::vector<SquareClass> gens{SquareClass::minus_one()};
    for (u64 p : primes) gens.emplace_back(false, std::vector<u64>{p});
    return gens;
}

/// All 2^(k+1) elements of D(E), in subset order of descent_generators.
inline std::vector<SquareClass> descent_group(const Curve& c) {
    const auto gens = descent_generators(c);
    std::vector<SquareClass> out;
    out.reserve(std::size_t{1} << gens.size());
    for (u64 mask = 0; mask < (u64{1} << gens.size()); ++mask) {
        SquareClass d;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (mask >> i & 1U) d = d * gens[i];
        out.push_back(std::move(d));
    }
    return out;
}

namespace detail {

inline bool is_in(u64 r, std::initializer_list<u64> set) { return std::find(set.begin(), set.end(), r) != set.end(); }

inline void require_place(const Curve& c, const Place& v) {
    if (!in_places(c, v)) throw PlaceNotInM(v);
}

}  // namespace detail

/// d in Im(delta'_v): the local image of E(Q_v) in Q_v*/(Q_v*)^2.
inline bool in_image_dual(const Curve& c, const Place& v, const SquareClass& d) {
    detail::require_place(c, v);
    const u64 n = c.n();
    const bool pi3 = c.theta() == Theta::PiThird;
    if (v.is_infinity()) return true;
    const u64 p = v.p();
    if (p == 2) {
        if (d.contains(2)) {
            // 2|d: in iff 2|n and d = n (pi/3) or d = -n (2pi/3) mod 8.
            const u64 target = pi3 ? n % 8 : (8 - n % 8) % 8;
            return n % 2 == 0 && d.residue(8) == target;
        }
        const bool n_bad = pi3 ? detail::is_in(n % 8, {2, 5, 6}) : detail::is_in(n % 8, {2, 3, 6});
        return !(n_bad && d.residue(4) == 3);
    }
    if (p == 3) {
        const u64 bad_n = pi3 ? 6 : 3;
        if (d.contains(3)) {
            const SquareClass rest = d * SquareClass(false, {3});
            return !(n % 9 == bad_n && rest.residue(3) == 1);
        }
        return !(n % 9 == bad_n && d.residue(3) == 2);
    }
    if (p % 3 != 1) return true;
    if (d.contains(p)) {
        // "n/d" for pi/3, "-n/d" for 2pi/3; p cancels in the product.
        const SquareClass q = SquareClass::of(pi3 ? static_cast<i64>(n) : -static_cast<i64>(n)) * d;
        return legendre_of_class(q, p) != -1;
    }
    return legendre_of_class(d, p) != -1;
}

/// d in Im(delta_v): the local image of E'(Q_v) in Q_v*/(Q_v*)^2.
inline bool in_image(const Curve& c, const Place& v, const SquareClass& d) {
    detail::require_place(c, v);
    const u64 n = c.n();
    const bool pi3 = c.theta() == Theta::PiThird;
    if (v.is_infinity()) return !d.negative();
    const u64 p = v.p();
    if (p == 2) {
        if (d.contains(2)) return false;
        const u64 n8 = n % 8;
        const u64 d4 = d.residue(4), d8 = d.residue(8);
        if (pi3) {
            return n8 == 5 || (detail::is_in(n8, {1, 3, 7}) && d4 == 1) || (n8 == 2 && detail::is_in(d8, {1, 7})) ||
                   (n8 == 6 && detail::is_in(d8, {1, 3}));
        }
        return n8 == 3 || (detail::is_in(n8, {1, 5, 7}) && d4 == 1) || (n8 == 2 && detail::is_in(d8, {1, 3})) ||
               (n8 == 6 && detail::is_in(d8, {1, 7}));
    }
    if (p == 3) {
        const u64 good_n = pi3 ? 6 : 3;
        if (d.contains(3)) {
            const SquareClass rest = d * SquareClass(false, {3});
            return n % 9 == good_n && rest.residue(3) == 1;
        }
        return d.residue(3) == 1;
    }
    if (d.contains(p)) {
        // "-n/d" for pi/3, "n/d" for 2pi/3.
        const SquareClass q = SquareClass::of(pi3 ? -static_cast<i64>(n) : static_cast<i64>(n)) * d;
        return p % 3 == 1 && legendre_of_class(q, p) == 1;
    }
    return legendre_of_class(d, p) == 1;
}

struct SelmerReport {
    Curve curve;
    std::vector<SquareClass> s_prime;  // sorted by representative
    std::vector<SquareClass> s;
    int rk2_s_prime = 0;
    int rk2_s = 0;
    int s_rank = 0;
};

namespace detail {

inline int log2_exact(std::size_t size) {
    if (size == 0 || !std::has_single_bit(size)) throw InternalInconsistency("Selmer set size is not a power of two");
    return std::countr_zero(size);
}

}  // namespace detail

inline SelmerReport selmer(const Curve& c) {
    const auto places = places_of(c);
    SelmerReport r{c, {}, {}};
    for (const auto& d : descent_group(c)) {
        if (std::all_of(places.begin(), places.end(), [&](const Place& v) { return in_image_dual(c, v, d); }))
            r.s_prime.push_back(d);
        if (std::all_of(places.begin(), places.end(), [&](const Place& v) { return in_image(c, v, d); }))
            r.s.push_back(d);
    }
    std::sort(r.s_prime.begin(), r.s_prime.end());
    std::sort(r.s.begin(), r.s.end());
    r.rk2_s_prime = detail::log2_exact(r.s_prime.size());
    r.rk2_s = detail::log2_exact(r.s.size());
    r.s_rank = r.rk2_s + r.rk2_s_prime - 2;
    if (r.s_rank < 0) throw InternalInconsistency("negative Selmer rank for " + c.name());
    return r;
}

/// Images of the 2-torsion and O under delta': {1, n, -3n, -3} or {1, -n, 3n, -3}.
inline std::vector<SquareClass> torsion_seed(const Curve& c) {
    const i64 s = c.sign();
    const i64 n = static_cast<i64>(c.n());
    std::vector<SquareClass> out{SquareClass::identity(), SquareClass::of(s * n), SquareClass::of(-3 * s * n),
                                 SquareClass::of(-3)};
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tcn

#endif
