#ifndef TCN_CRITERIA_HPP
#define TCN_CRITERIA_HPP

// Graph-theoretic criteria for vanishing Selmer rank of E_{n,pi/3} and
// E_{n,2pi/3} at odd square-free n, each checked against direct descent.
//
// Descent is the ground truth. Each criterion has a hypothesis on n (class
// mod 24, residues of the prime divisors mod 3 or 12, gcd(n,6)); when it
// fails the criterion is "not applicable", never "false".

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "tcn/arith.hpp"
#include "tcn/descent.hpp"
#include "tcn/graph.hpp"
#include "tcn/witness.hpp"

namespace tcn {

class OutOfScope : public std::invalid_argument {
public:
    explicit OutOfScope(u64 n, const std::string& why)
        : std::invalid_argument("n = " + std::to_string(n) + " is out of scope: " + why), n_(n) {}
    u64 n() const noexcept { return n_; }

private:
    u64 n_;
};

class EvenOrNonSquareFree : public OutOfScope {
public:
    using OutOfScope::OutOfScope;
};

enum class CriterionId {
    Thm4_1_I1,
    Thm4_1_I2,
    Thm4_1_II1,
    Thm4_1_II2,
    Cor4_3_I,
    Cor4_3_II,
    Thm4_4_I,
    Thm4_4_II,
    Cor4_5,
    Thm5_1_I1,
    Thm5_1_I2,
    Thm5_1_II1,
    Thm5_1_II2,
    Thm5_2_I1,
    Thm5_2_I2,
    Thm5_2_II1,
    Thm5_2_II2,
    Cor5_3,
    Thm3_2_I,
    Thm3_2_II,
};

inline constexpr std::array kAllCriteria{
    CriterionId::Thm4_1_I1,  CriterionId::Thm4_1_I2,  CriterionId::Thm4_1_II1, CriterionId::Thm4_1_II2,
    CriterionId::Cor4_3_I,   CriterionId::Cor4_3_II,  CriterionId::Thm4_4_I,   CriterionId::Thm4_4_II,
    CriterionId::Cor4_5,     CriterionId::Thm5_1_I1,  CriterionId::Thm5_1_I2,  CriterionId::Thm5_1_II1,
    CriterionId::Thm5_1_II2, CriterionId::Thm5_2_I1,  CriterionId::Thm5_2_I2,  CriterionId::Thm5_2_II1,
    CriterionId::Thm5_2_II2, CriterionId::Cor5_3,     CriterionId::Thm3_2_I,   CriterionId::Thm3_2_II,
};

inline std::string_view criterion_name(CriterionId id) {
    switch (id) {
        case CriterionId::Thm4_1_I1: return "Thm4_1_I1";
        case CriterionId::Thm4_1_I2: return "Thm4_1_I2";
        case CriterionId::Thm4_1_II1: return "Thm4_1_II1";
        case CriterionId::Thm4_1_II2: return "Thm4_1_II2";
        case CriterionId::Cor4_3_I: return "Cor4_3_I";
        case CriterionId::Cor4_3_II: return "Cor4_3_II";
        case CriterionId::Thm4_4_I: return "Thm4_4_I";
        case CriterionId::Thm4_4_II: return "Thm4_4_II";
        case CriterionId::Cor4_5: return "Cor4_5";
        case CriterionId::Thm5_1_I1: return "Thm5_1_I1";
        case CriterionId::Thm5_1_I2: return "Thm5_1_I2";
        case CriterionId::Thm5_1_II1: return "Thm5_1_II1";
        case CriterionId::Thm5_1_II2: return "Thm5_1_II2";
        case CriterionId::Thm5_2_I1: return "Thm5_2_I1";
        case CriterionId::Thm5_2_I2: return "Thm5_2_I2";
        case CriterionId::Thm5_2_II1: return "Thm5_2_II1";
        case CriterionId::Thm5_2_II2: return "Thm5_2_II2";
        case CriterionId::Cor5_3: return "Cor5_3";
        case CriterionId::Thm3_2_I: return "Thm3_2_I";
        case CriterionId::Thm3_2_II: return "Thm3_2_II";
    }
    return "?";
}

enum class CriterionKind {
    Biconditional,  // graph condition <=> descent statement
    Implication,    // graph condition => descent statement
    ThreeWay,       // graph condition <=> s-rank(pi/3)=0 <=> s-rank(2pi/3)=0
};

inline CriterionKind criterion_kind(CriterionId id) {
    switch (id) {
        case CriterionId::Cor4_3_II:
        case CriterionId::Cor5_3: return CriterionKind::Implication;
        case CriterionId::Cor4_5: return CriterionKind::ThreeWay;
        default: return CriterionKind::Biconditional;
    }
}

/// Two criteria are stated with a partition condition that differs from
/// the one their proof establishes. Both forms are evaluated; the proof
/// form is the one that agrees with descent and is used in production.
enum class Reading { Statement, Proof };

inline std::string_view reading_name(Reading r) { return r == Reading::Statement ? "statement" : "proof"; }

inline bool has_alternate_reading(CriterionId id) {
    return id == CriterionId::Thm4_1_II2 || id == CriterionId::Thm5_2_I2;
}

inline Reading production_reading(CriterionId id) { return has_alternate_reading(id) ? Reading::Proof : Reading::Statement; }

/// Arithmetic shape of an odd square-free n >= 5.
struct NumberProfile {
    u64 n = 0;
    std::vector<u64> primes;    // all prime divisors, ascending
    std::vector<u64> rest;      // prime divisors other than 3
    std::vector<u64> one_mod3;  // p = 1 (mod 3)
    std::vector<u64> two_mod3;  // q = 2 (mod 3), excluding 3
    bool divisible_by_3 = false;
    u64 mod24 = 0;
    u64 rest_mod3 = 0;  // P*Q mod 3

    static NumberProfile of(u64 n) {
        if (n < 5) throw EvenOrNonSquareFree(n, "n must be >= 5");
        if (n % 2 == 0) throw EvenOrNonSquareFree(n, "n is even");
        NumberProfile p;
        p.n = n;
        try {
            p.primes = factor_square_free(n);
        } catch (const NotSquareFree&) {
            throw EvenOrNonSquareFree(n, "n is not square-free");
        }
        p.mod24 = n % 24;
        p.rest_mod3 = 1;
        for (u64 q : p.primes) {
            if (q == 3) {
                p.divisible_by_3 = true;
                continue;
            }
            p.rest.push_back(q);
            (q % 3 == 1 ? p.one_mod3 : p.two_mod3).push_back(q);
            p.rest_mod3 = p.rest_mod3 * (q % 3) % 3;
        }
        return p;
    }

    bool all_one_mod3() const { return two_mod3.empty(); }
    std::vector<i64> signed_labels(const std::vector<u64>& ps) const { return {ps.begin(), ps.end()}; }
};

/// Everything a criterion needs for one n; descent is computed once.
struct CriterionContext {
    NumberProfile profile;
    SelmerReport pi3;
    SelmerReport two_pi3;

    static CriterionContext of(u64 n) {
        NumberProfile p = NumberProfile::of(n);
        return {p, selmer(Curve(n, Theta::PiThird)), selmer(Curve(n, Theta::TwoPiThird))};
    }
};

struct CriterionVerdict {
    CriterionId id = CriterionId::Thm4_1_I1;
    Reading reading = Reading::Statement;
    bool applicable = false;
    std::optional<bool> graph_prediction;
    bool descent_truth = false;
    std::optional<bool> agree;
};

namespace detail {

inline bool equals_seed(const std::vector<SquareClass>& s_prime, const Curve& c) { return s_prime == torsion_seed(c); }
inline bool trivial(const std::vector<SquareClass>& s) { return s.size() == 1 && s.front().is_identity(); }

inline bool mod_is(const SquareClass& d, u64 m, u64 r) { return d.residue(m) == r; }

inline std::vector<i64> with(std::vector<i64> base, std::initializer_list<i64> extra) {
    base.insert(base.end(), extra);
    return base;
}

inline const PartitionFilter kAnySide = [](const SideView&, const SideView&) { return true; };

struct Outcome {
    bool applicable = false;
    bool graph = false;
    bool truth = false;
    bool truth2 = false;  // second descent statement for three-way criteria
};

inline Outcome evaluate(CriterionId id, const CriterionContext& ctx, Reading reading) {
    const NumberProfile& np = ctx.profile;
    const i64 n = static_cast<i64>(np.n);
    const u64 r24 = np.mod24;
    const auto rest = np.signed_labels(np.rest);
    const auto ones = np.signed_labels(np.one_mod3);
    const std::size_t s = np.two_mod3.size();
    const bool pi3_seed = equals_seed(ctx.pi3.s_prime, ctx.pi3.curve);
    const bool tpi3_seed = equals_seed(ctx.two_pi3.s_prime, ctx.two_pi3.curve);
    const bool pi3_s_trivial = trivial(ctx.pi3.s);
    const bool tpi3_s_trivial = trivial(ctx.two_pi3.s);
    auto in = [](u64 r, std::initializer_list<u64> set) { return std::find(set.begin(), set.end(), r) != set.end(); };
    Outcome o;

    if (!np.divisible_by_3) {
        switch (id) {
            case CriterionId::Thm3_2_I:
            case CriterionId::Thm4_1_I1: {
                if (!in(r24, {1, 7, 19})) return o;
                o.applicable = true;
                o.truth = pi3_seed;
                if (!np.all_one_mod3()) return o;
                const ResidueGraph g = id == CriterionId::Thm3_2_I ? build_goto_G(np.n) : build_unified(-3 * n);
                o.graph = check_constrained_oddness(g, kAnySide, {{-1, 3}});
                return o;
            }
            case CriterionId::Thm3_2_II: {
                if (!in(r24, {1, 7, 19}) || !np.all_one_mod3()) return o;
                o.applicable = true;
                o.truth = pi3_s_trivial;
                o.graph = is_odd_graph(build_goto_g(np.n));
                return o;
            }
            case CriterionId::Thm4_1_I2: {
                if (!in(r24, {1, 7, 19}) || !np.all_one_mod3()) return o;
                o.applicable = true;
                o.truth = pi3_s_trivial;
                o.graph = check_constrained_oddness(build_unified(-n), [&](const SideView& v, const SideView&) {
                    return v.within(rest) && !v.d.negative() && !v.d.is_identity() && mod_is(v.d, 4, 1);
                });
                return o;
            }
            case CriterionId::Thm4_1_II1: {
                if (r24 != 5) return o;
                o.applicable = true;
                o.truth = pi3_seed;
                if (s != 1) return o;
                o.graph = check_constrained_oddness(
                    build_unified(-3 * n), [](const SideView& v, const SideView&) { return mod_is(v.d, 4, 1); }, {{-1, 3}});
                return o;
            }
            case CriterionId::Thm4_1_II2: {
                if (r24 != 5 || s != 1) return o;
                o.applicable = true;
                o.truth = pi3_s_trivial;
                const u64 pt = np.two_mod3.front();
                if (reading == Reading::Statement) {
                    o.graph = check_constrained_oddness(build_unified(-n), [&](const SideView& v, const SideView&) {
                        return !v.empty() && v.within(rest);
                    });
                } else {
                    o.graph = check_constrained_oddness(build_unified(-n), [&](const SideView& v, const SideView&) {
                        return !v.empty() && v.within(ones) && legendre_of_class(v.d, pt) == 1;
                    });
                }
                return o;
            }
            case CriterionId::Cor4_3_I: {
                if (!in(r24, {7, 19}) || !np.all_one_mod3()) return o;
                o.applicable = true;
                o.truth = ctx.pi3.s_rank == 0;
                o.graph = is_odd_graph(build_unified(n));
                return o;
            }
            case CriterionId::Cor4_3_II: {
                if (r24 != 5) return o;
                const auto five = std::count_if(np.primes.begin(), np.primes.end(), [](u64 p) { return p % 12 == 5; });
                const auto one = std::count_if(np.primes.begin(), np.primes.end(), [](u64 p) { return p % 12 == 1; });
                if (five != 1 || static_cast<std::size_t>(five + one) != np.primes.size()) return o;
                o.applicable = true;
                o.truth = ctx.pi3.s_rank == 0;
                o.graph = is_odd_graph(build_unified(n));
                return o;
            }
            case CriterionId::Thm4_4_I: {
                if (!in(r24, {1, 7, 11, 13})) return o;
                o.applicable = true;
                o.truth = tpi3_seed;
                o.graph = np.all_one_mod3() && in(r24, {1, 7, 13}) && is_odd_graph(build_unified(-n));
                return o;
            }
            case CriterionId::Thm4_4_II: {
                if (!in(r24, {1, 7, 13}) || !np.all_one_mod3()) return o;
                o.applicable = true;
                o.truth = tpi3_s_trivial;
                o.graph = r24 == 7 && is_odd_graph(build_unified(n));
                return o;
            }
            case CriterionId::Cor4_5: {
                if (r24 != 7 || !np.all_one_mod3()) return o;
                o.applicable = true;
                o.truth = ctx.pi3.s_rank == 0;
                o.truth2 = ctx.two_pi3.s_rank == 0;
                o.graph = is_odd_graph(build_unified(n));
                return o;
            }
            default: return o;
        }
    }

    if (np.rest.empty()) return o;
    const bool pq1 = np.rest_mod3 == 1;
    switch (id) {
        case CriterionId::Thm5_1_I1: {
            if (!in(r24, {3, 9, 15}) || !pq1) return o;
            o.applicable = true;
            o.truth = pi3_seed;
            o.graph = s == 0 && is_odd_graph(build_unified(n));
            return o;
        }
        case CriterionId::Thm5_1_I2: {
            if (!in(r24, {3, 9, 15}) || pq1) return o;
            o.applicable = true;
            o.truth = pi3_seed;
            if (s != 1) return o;
            o.graph = check_constrained_oddness(build_unified(n),
                                                [&](const SideView& v, const SideView&) { return v.within(ones); });
            return o;
        }
        case CriterionId::Thm5_1_II1: {
            if (!in(r24, {3, 9, 15}) || !pq1 || s != 0) return o;
            o.applicable = true;
            o.truth = pi3_s_trivial;
            o.graph = r24 == 9 && is_odd_graph(build_unified(n / 3));
            return o;
        }
        case CriterionId::Thm5_1_II2: {
            if (!in(r24, {3, 9, 15}) || pq1 || s != 1) return o;
            o.applicable = true;
            o.truth = pi3_s_trivial;
            const u64 q1 = np.two_mod3.front();
            const auto allowed = with(ones, {3});
            o.graph = check_constrained_oddness(build_unified(-n), [&](const SideView& v, const SideView&) {
                return v.within(allowed) && mod_is(v.d, 4, 1) && legendre_of_class(v.d, q1) == 1;
            });
            return o;
        }
        case CriterionId::Thm5_2_I1: {
            if (r24 != 3 || !pq1) return o;
            o.applicable = true;
            o.truth = tpi3_seed;
            if (s == 0) {
                // d(V1) != -3, P: the single partition {-1,3} | {p_1..p_t}.
                o.graph = check_constrained_oddness(
                    build_unified(-n), [](const SideView& v, const SideView&) { return mod_is(v.d, 4, 1); },
                    {{-1, 3}, rest});
            } else if (s == 2) {
                // Both stated congruences are kept even though mod 12 implies mod 4.
                o.graph = check_constrained_oddness(
                    build_unified(-n),
                    [](const SideView& v, const SideView&) { return mod_is(v.d, 4, 1) && mod_is(v.d, 12, 1); },
                    {rest});
            }
            return o;
        }
        case CriterionId::Thm5_2_I2: {
            if (r24 != 3 || pq1) return o;
            o.applicable = true;
            o.truth = tpi3_seed;
            if (s != 1) return o;
            if (reading == Reading::Statement) {
                o.graph = check_constrained_oddness(build_unified(-n), kAnySide, {{-1, 3}, rest});
            } else {
                o.graph = check_constrained_oddness(
                    build_unified(-n), [](const SideView& v, const SideView&) { return mod_is(v.d, 4, 1); },
                    {{-1, 3}, rest});
            }
            return o;
        }
        case CriterionId::Thm5_2_II1: {
            if (r24 != 3 || !pq1 || (s != 0 && s != 2)) return o;
            o.applicable = true;
            o.truth = tpi3_s_trivial;
            if (s != 2) return o;
            const u64 q1 = np.two_mod3[0], q2 = np.two_mod3[1];
            const auto allowed = with(ones, {3});
            o.graph = check_constrained_oddness(build_unified(n), [&](const SideView& v, const SideView&) {
                return v.within(allowed) && legendre_of_class(v.d, q1) == 1 && legendre_of_class(v.d, q2) == 1;
            });
            return o;
        }
        case CriterionId::Thm5_2_II2: {
            if (r24 != 3 || pq1 || s != 1) return o;
            o.applicable = true;
            o.truth = tpi3_s_trivial;
            const u64 q1 = np.two_mod3.front();
            o.graph = check_constrained_oddness(build_unified(n), [&](const SideView& v, const SideView&) {
                return v.within(ones) && legendre_of_class(v.d, q1) == 1;
            });
            return o;
        }
        case CriterionId::Cor5_3: {
            if (r24 != 3 || s != 1 || np.two_mod3.front() % 12 != 5) return o;
            if (!std::all_of(np.one_mod3.begin(), np.one_mod3.end(), [](u64 p) { return p % 12 == 1; })) return o;
            o.applicable = true;
            o.truth = ctx.pi3.s_rank == 0 && ctx.two_pi3.s_rank == 0;
            o.graph = is_odd_graph(build_unified(n / 3));
            return o;
        }
        default: return o;
    }
}

}  // namespace detail

inline CriterionVerdict eval_criterion(CriterionId id, const CriterionContext& ctx, Reading reading) {
    const detail::Outcome o = detail::evaluate(id, ctx, reading);
    CriterionVerdict v;
    v.id = id;
    v.reading = reading;
    v.applicable = o.applicable;
    if (!o.applicable) return v;
    v.graph_prediction = o.graph;
    switch (criterion_kind(id)) {
        case CriterionKind::Biconditional:
            v.descent_truth = o.truth;
            v.agree = o.graph == o.truth;
            break;
        case CriterionKind::Implication:
            v.descent_truth = o.truth;
            v.agree = !o.graph || o.truth;
            break;
        case CriterionKind::ThreeWay:
            v.descent_truth = o.truth && o.truth2;
            v.agree = o.graph == o.truth && o.graph == o.truth2;
            break;
    }
    return v;
}

inline CriterionVerdict eval_criterion(CriterionId id, const CriterionContext& ctx) {
    return eval_criterion(id, ctx, production_reading(id));
}

inline CriterionVerdict eval_criterion(CriterionId id, u64 n) { return eval_criterion(id, CriterionContext::of(n)); }

// ---------------------------------------------------------------------------
// Classification

enum class Certification { Certified, Unknown };

inline std::string_view certification_name(Certification c) { return c == Certification::Certified ? "certified" : "unknown"; }

struct ClassificationRecord {
    u64 n = 0;
    std::vector<u64> factors;
    u64 n_mod_24 = 0;
    SelmerReport pi3;
    SelmerReport two_pi3;
    Certification non_pi3_cn = Certification::Unknown;
    Certification non_2pi3_cn = Certification::Unknown;
    Certification non_tn = Certification::Unknown;
    std::optional<WitnessPoint> tn_witness;
    std::vector<CriterionVerdict> criteria;  // applicable ones, production reading
    std::vector<CriterionId> fired;          // applicable with graph condition true
};

struct ClassifyOptions {
    i64 witness_height = 0;  // 0 disables the point search
};

inline ClassificationRecord classify(u64 n, const ClassifyOptions& opts = {}) {
    if (n < 5) throw OutOfScope(n, "n must be >= 5 (n = 1, 2, 3, 6 are exceptional)");
    if (n % 2 == 0) throw OutOfScope(n, "n is even");
    if (!is_square_free(n)) throw OutOfScope(n, "n is not square-free");

    const CriterionContext ctx = CriterionContext::of(n);
    const auto unknown = Certification::Unknown;
    ClassificationRecord r{n, ctx.profile.primes, ctx.profile.mod24, ctx.pi3, ctx.two_pi3, unknown, unknown, unknown,
                           std::nullopt, {}, {}};
    if (r.pi3.s_rank == 0) r.non_pi3_cn = Certification::Certified;
    if (r.two_pi3.s_rank == 0) r.non_2pi3_cn = Certification::Certified;
    if (r.pi3.s_rank == 0 && r.two_pi3.s_rank == 0) r.non_tn = Certification::Certified;

    for (CriterionId id : kAllCriteria) {
        CriterionVerdict v = eval_criterion(id, ctx);
        if (!v.applicable) continue;
        if (*v.graph_prediction) r.fired.push_back(id);
        r.criteria.push_back(v);
    }

    if (opts.witness_height > 0 && r.non_tn != Certification::Certified) {
        for (const SelmerReport* rep : {&r.pi3, &r.two_pi3}) {
            if (rep->s_rank == 0) continue;
            if (auto w = search_point(rep->curve, opts.witness_height)) {
                r.tn_witness = *w;
                break;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sweeps

/// Odd square-free n in [max(lo,5), hi], ascending.
inline std::vector<u64> odd_square_free_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    if (hi < 5 || lo > hi) return out;
    for (u64 n = std::max<u64>(lo, 5) | 1; n <= hi; n += 2)
        if (is_square_free(n)) out.push_back(n);
    return out;
}

/// Runs f(i) for i in [0, count) on `jobs` threads. Results must be written
/// to per-index slots so the output is independent of scheduling.
template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& f) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

struct Disagreement {
    u64 n;
    CriterionId id;
    Reading reading;
    bool graph_prediction;
    bool descent_truth;
};

struct CriterionTally {
    CriterionId id;
    Reading reading;
    bool production;
    u64 applicable = 0;
    u64 agree = 0;
    std::vector<u64> disagreeing_n;
};

struct VerifyReport {
    u64 lo = 0, hi = 0;
    u64 numbers_checked = 0;
    std::vector<CriterionTally> tallies;    // one per (criterion, reading)
    std::vector<Disagreement> violations;   // production readings only, ascending n

    bool ok() const { return violations.empty(); }
    const CriterionTally* tally(CriterionId id, Reading r) const {
        for (const auto& t : tallies)
            if (t.id == id && t.reading == r) return &t;
        return nullptr;
    }
    const CriterionTally* tally(CriterionId id) const { return tally(id, production_reading(id)); }
};

inline VerifyReport verify_range(u64 lo, u64 hi, unsigned jobs = 1) {
    VerifyReport report;
    report.lo = lo;
    report.hi = hi;
    for (CriterionId id : kAllCriteria) {
        report.tallies.push_back({id, production_reading(id), true, 0, 0, {}});
        if (has_alternate_reading(id)) report.tallies.push_back({id, Reading::Statement, false, 0, 0, {}});
    }
    const auto ns = odd_square_free_range(lo, hi);
    report.numbers_checked = ns.size();

    std::vector<std::vector<CriterionVerdict>> per_n(ns.size());
    parallel_for(ns.size(), jobs, [&](std::size_t i) {
        const CriterionContext ctx = CriterionContext::of(ns[i]);
        for (const auto& t : report.tallies) per_n[i].push_back(eval_criterion(t.id, ctx, t.reading));
    });

    for (std::size_t i = 0; i < ns.size(); ++i) {
        for (std::size_t k = 0; k < report.tallies.size(); ++k) {
            const CriterionVerdict& v = per_n[i][k];
            CriterionTally& t = report.tallies[k];
            if (!v.applicable) continue;
            ++t.applicable;
            if (*v.agree) {
                ++t.agree;
                continue;
            }
            t.disagreeing_n.push_back(ns[i]);
            if (t.production) report.violations.push_back({ns[i], v.id, v.reading, *v.graph_prediction, v.descent_truth});
        }
    }
    return report;
}

struct ConjectureReport {
    u64 lo = 0, hi = 0;
    u64 certified_non_pi3 = 0;
    u64 certified_non_2pi3 = 0;
    std::vector<u64> non_tn;             // certified non-tiling numbers
    std::vector<u64> pi3_anomalies;      // certified non-pi/3-CN outside the conjectured classes
    std::vector<u64> two_pi3_anomalies;  // certified non-2pi/3-CN outside the conjectured classes
};

/// Odd residues mod 24 conjectured to be exactly the non-theta-CN classes.
inline constexpr std::array<u64, 7> kConjecturedNonPi3{1, 3, 5, 7, 9, 15, 19};
inline constexpr std::array<u64, 5> kConjecturedNon2Pi3{1, 3, 7, 11, 13};

inline ConjectureReport conjecture_report(u64 lo, u64 hi, unsigned jobs = 1) {
    ConjectureReport rep{lo, hi, 0, 0, {}, {}, {}};
    const auto ns = odd_square_free_range(lo, hi);
    std::vector<std::array<int, 2>> ranks(ns.size());
    parallel_for(ns.size(), jobs, [&](std::size_t i) {
        ranks[i] = {selmer(Curve(ns[i], Theta::PiThird)).s_rank, selmer(Curve(ns[i], Theta::TwoPiThird)).s_rank};
    });
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const u64 r = ns[i] % 24;
        const bool a = ranks[i][0] == 0, b = ranks[i][1] == 0;
        if (a) {
            ++rep.certified_non_pi3;
            if (std::find(kConjecturedNonPi3.begin(), kConjecturedNonPi3.end(), r) == kConjecturedNonPi3.end())
                rep.pi3_anomalies.push_back(ns[i]);
        }
        if (b) {
            ++rep.certified_non_2pi3;
            if (std::find(kConjecturedNon2Pi3.begin(), kConjecturedNon2Pi3.end(), r) == kConjecturedNon2Pi3.end())
                rep.two_pi3_anomalies.push_back(ns[i]);
        }
        if (a && b) rep.non_tn.push_back(ns[i]);
    }
    return rep;
}

}  // namespace tcn

#endif
