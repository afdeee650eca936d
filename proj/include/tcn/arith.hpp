#ifndef TCN_ARITH_HPP
#define TCN_ARITH_HPP

// Exact 64-bit integer arithmetic: primality, factorization, residue
// symbols, Hilbert symbols and the square-class group Q*/(Q*)^2.
//
// Supported range: |n| < 2^62. Products are formed in unsigned __int128.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tcn {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kMaxSupported = u64{1} << 62;

class NotSquareFree : public std::invalid_argument {
public:
    explicit NotSquareFree(u64 p)
        : std::invalid_argument("not square-free: " + std::to_string(p) + "^2 divides the input"), prime_(p) {}
    u64 prime() const noexcept { return prime_; }

private:
    u64 prime_;
};

class ZeroInput : public std::invalid_argument {
public:
    ZeroInput() : std::invalid_argument("zero has no square class") {}
};

class PInSupport : public std::invalid_argument {
public:
    explicit PInSupport(u64 p)
        : std::invalid_argument("prime " + std::to_string(p) + " divides the class representative") {}
};

class OutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial
// factor of the odd composite n.
inline u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline u64 mod_nonneg(i64 a, u64 m) {
    const i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

}  // namespace detail

/// Deterministic Miller-Rabin; exact for every 64-bit input.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

struct PrimePower {
    u64 prime;
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Full factorization of n >= 1 in ascending prime order. Trial division
/// up to 2^20, then Pollard rho on what remains.
inline std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw ZeroInput();
    if (n >= kMaxSupported) throw OutOfRange("factorize: input exceeds 2^62");
    std::vector<PrimePower> out;
    auto pull = [&](u64 p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({p, e});
    };
    pull(2);
    constexpr u64 kTrialLimit = u64{1} << 20;
    for (u64 p = 3; p <= kTrialLimit && p * p <= n; p += 2) pull(p);
    if (n == 1) return out;

    std::vector<u64> stack{n}, large;
    while (!stack.empty()) {
        u64 m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            large.push_back(m);
            continue;
        }
        const u64 f = detail::pollard_brent(m);
        stack.push_back(f);
        stack.push_back(m / f);
    }
    std::sort(large.begin(), large.end());
    for (std::size_t i = 0; i < large.size();) {
        std::size_t j = i;
        while (j < large.size() && large[j] == large[i]) ++j;
        out.push_back({large[i], static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

/// Ascending prime list of a square-free n >= 1; throws NotSquareFree.
inline std::vector<u64> factor_square_free(u64 n) {
    std::vector<u64> primes;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) throw NotSquareFree(p);
        primes.push_back(p);
    }
    return primes;
}

inline bool is_square_free(u64 n) {
    try {
        factor_square_free(n);
        return true;
    } catch (const NotSquareFree&) {
        return false;
    }
}

/// Legendre symbol (a/p) for an odd prime p, via the binary Jacobi algorithm.
inline int legendre(i64 a, u64 p) {
    if (p < 3 || (p & 1) == 0) throw std::invalid_argument("legendre: modulus must be an odd prime");
    u64 x = detail::mod_nonneg(a, p);
    u64 m = p;
    int t = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            const u64 r = m & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(x, m);
        if ((x & 3) == 3 && (m & 3) == 3) t = -t;
        x %= m;
    }
    return m == 1 ? t : 0;
}

/// An element of Q*/(Q*)^2: a sign and a strictly increasing list of primes.
class SquareClass {
public:
    SquareClass() = default;

    /// Builds from an explicit sign and prime set. Throws if the support is
    /// not strictly increasing or contains a non-prime.
    SquareClass(bool negative, std::vector<u64> support) : negative_(negative), support_(std::move(support)) {
        for (std::size_t i = 0; i < support_.size(); ++i) {
            if (!is_prime(support_[i])) throw std::invalid_argument("SquareClass: support entry is not prime");
            if (i && support_[i - 1] >= support_[i]) throw std::invalid_argument("SquareClass: support must be strictly increasing");
        }
    }

    static SquareClass identity() { return {}; }
    static SquareClass minus_one() { return SquareClass(true, {}); }

    /// Square class of a nonzero integer.
    static SquareClass of(i64 k) {
        if (k == 0) throw ZeroInput();
        SquareClass c;
        c.negative_ = k < 0;
        const u64 mag = k < 0 ? static_cast<u64>(-(k + 1)) + 1 : static_cast<u64>(k);
        for (const auto& [p, e] : factorize(mag)) {
            if (e & 1) c.support_.push_back(p);
        }
        return c;
    }

    bool negative() const noexcept { return negative_; }
    const std::vector<u64>& support() const noexcept { return support_; }
    bool is_identity() const noexcept { return !negative_ && support_.empty(); }
    bool contains(u64 p) const { return std::binary_search(support_.begin(), support_.end(), p); }

    /// Signed square-free representative. Throws OutOfRange on overflow.
    i64 representative() const {
        u128 mag = 1;
        for (u64 p : support_) {
            mag *= p;
            if (mag >= (u128{1} << 63)) throw OutOfRange("SquareClass: representative overflows int64");
        }
        const i64 v = static_cast<i64>(mag);
        return negative_ ? -v : v;
    }

    /// Non-negative residue of the representative modulo m (overflow-free).
    u64 residue(u64 m) const {
        u64 r = 1 % m;
        for (u64 p : support_) r = detail::mulmod(r, p % m, m);
        if (negative_ && r != 0) r = m - r;
        return r;
    }

    /// Group law: sign XOR, symmetric difference of supports.
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b) {
        SquareClass c;
        c.negative_ = a.negative_ != b.negative_;
        std::set_symmetric_difference(a.support_.begin(), a.support_.end(), b.support_.begin(), b.support_.end(),
                                      std::back_inserter(c.support_));
        return c;
    }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;

    // Orders by representative value; used for canonical set output.
    friend bool operator<(const SquareClass& a, const SquareClass& b) { return a.signed_value() < b.signed_value(); }

    /// Decimal representative; unlike representative() this never overflows.
    std::string to_string() const {
        const i128 v = signed_value();
        u128 mag = v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v);
        std::string digits;
        do {
            digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
            mag /= 10;
        } while (mag != 0);
        return v < 0 ? "-" + digits : digits;
    }
    bool fits_i64() const {
        const i128 v = signed_value();
        return v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max();
    }

private:
    i128 signed_value() const {
        i128 m = 1;
        for (u64 p : support_) m *= p;
        return negative_ ? -m : m;
    }

    bool negative_ = false;
    std::vector<u64> support_;
};

inline SquareClass class_of(i64 k) { return SquareClass::of(k); }
inline SquareClass class_mul(const SquareClass& a, const SquareClass& b) { return a * b; }

/// (d/p) as the product of symbols of the support primes, with (-1/p) for
/// a negative class. Throws PInSupport when p divides the representative.
inline int legendre_of_class(const SquareClass& d, u64 p) {
    if (d.contains(p)) throw PInSupport(p);
    int s = d.negative() ? legendre(-1, p) : 1;
    for (u64 q : d.support()) s *= legendre(static_cast<i64>(q), p);
    return s;
}

/// A place of Q: the real place or a prime.
class Place {
public:
    static Place infinity() { return Place(0); }
    static Place prime(u64 p) {
        if (!is_prime(p)) throw std::invalid_argument("Place: not a prime");
        return Place(p);
    }
    bool is_infinity() const noexcept { return p_ == 0; }
    u64 p() const noexcept { return p_; }
    std::string to_string() const { return is_infinity() ? "inf" : std::to_string(p_); }
    friend bool operator==(const Place&, const Place&) = default;

private:
    explicit Place(u64 p) : p_(p) {}
    u64 p_;
};

/// Local Hilbert symbol (a,b)_v from the standard closed forms.
inline int hilbert(i64 a, i64 b, Place v) {
    if (a == 0 || b == 0) throw ZeroInput();
    if (v.is_infinity()) return (a < 0 && b < 0) ? -1 : 1;
    const u64 p = v.p();
    auto split = [p](i64 x) {
        int e = 0;
        while (x % static_cast<i64>(p) == 0) {
            x /= static_cast<i64>(p);
            ++e;
        }
        return std::pair<int, i64>{e, x};
    };
    const auto [alpha, u] = split(a);
    const auto [beta, w] = split(b);
    if (p == 2) {
        auto eps = [](i64 x) { return static_cast<int>(detail::mod_nonneg(x, 4) == 3); };
        auto omega = [](i64 x) {
            const u64 r = detail::mod_nonneg(x, 8);
            return static_cast<int>(r == 3 || r == 5);
        };
        const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return (e & 1) ? -1 : 1;
    }
    int s = ((alpha & 1) && (beta & 1) && (p % 4 == 3)) ? -1 : 1;
    if (beta & 1) s *= legendre(u, p);
    if (alpha & 1) s *= legendre(w, p);
    return s;
}

}  // namespace tcn

#endif
