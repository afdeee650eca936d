#include <gtest/gtest.h>

#include "tcn/criteria.hpp"

using namespace tcn;

TEST(EvalCriterion, Examples) {
    const auto c7 = eval_criterion(CriterionId::Cor4_5, 7);
    EXPECT_TRUE(c7.applicable);
    EXPECT_EQ(c7.graph_prediction, true);
    EXPECT_TRUE(c7.descent_truth);
    EXPECT_EQ(c7.agree, true);

    // S'(E_{5,pi/3}) is exactly the torsion seed, and the constrained check on
    // G(-15) holds vacuously (its only candidate partition is {-1,3} | {5}).
    const auto c5 = eval_criterion(CriterionId::Thm4_1_II1, 5);
    EXPECT_TRUE(c5.applicable);
    EXPECT_EQ(c5.graph_prediction, true);
    EXPECT_TRUE(c5.descent_truth);
    EXPECT_EQ(c5.agree, true);

    const auto c15 = eval_criterion(CriterionId::Thm4_1_I1, 15);
    EXPECT_FALSE(c15.applicable);
    EXPECT_FALSE(c15.graph_prediction.has_value());
    EXPECT_FALSE(c15.agree.has_value());
}

TEST(EvalCriterion, RejectsOutOfScope) {
    EXPECT_THROW(eval_criterion(CriterionId::Cor4_5, 14), EvenOrNonSquareFree);
    EXPECT_THROW(eval_criterion(CriterionId::Cor4_5, 45), EvenOrNonSquareFree);
    EXPECT_THROW(eval_criterion(CriterionId::Cor4_5, 3), EvenOrNonSquareFree);
}

TEST(EvalCriterion, HypothesisFilters) {
    for (u64 n : odd_square_free_range(5, 600)) {
        const auto ctx = CriterionContext::of(n);
        for (CriterionId id : kAllCriteria) {
            const auto v = eval_criterion(id, ctx);
            ASSERT_EQ(v.applicable, v.graph_prediction.has_value());
            ASSERT_EQ(v.applicable, v.agree.has_value());
            const bool thm5 = criterion_name(id).substr(0, 4) == "Thm5" || id == CriterionId::Cor5_3;
            if (v.applicable) {
                ASSERT_EQ(n % 3 == 0, thm5) << criterion_name(id) << " " << n;
            }
        }
    }
}

TEST(Classify, Seven) {
    const auto r = classify(7);
    EXPECT_EQ(r.non_pi3_cn, Certification::Certified);
    EXPECT_EQ(r.non_2pi3_cn, Certification::Certified);
    EXPECT_EQ(r.non_tn, Certification::Certified);
    EXPECT_FALSE(r.tn_witness.has_value());
    EXPECT_FALSE(r.fired.empty());
}

TEST(Classify, FiveIsTilingWithWitness) {
    const auto r = classify(5, {10});
    EXPECT_EQ(r.non_2pi3_cn, Certification::Unknown);
    EXPECT_EQ(r.non_tn, Certification::Unknown);
    ASSERT_TRUE(r.tn_witness.has_value());
    EXPECT_EQ(r.tn_witness->curve.theta(), Theta::TwoPiThird);
    EXPECT_EQ(r.tn_witness->x_string(), "-1");
    EXPECT_EQ(r.tn_witness->y_string(), "8");
    // Rank 0 on the pi/3 curve; Cor4_3_II (one prime = 5 mod 12, G(5) odd) says the same.
    EXPECT_EQ(r.non_pi3_cn, Certification::Certified);
}

TEST(Classify, TwentyThreeCertifiesNothing) {
    const auto r = classify(23);
    EXPECT_EQ(r.non_pi3_cn, Certification::Unknown);
    EXPECT_EQ(r.non_2pi3_cn, Certification::Unknown);
    EXPECT_EQ(r.non_tn, Certification::Unknown);
}

TEST(Classify, RejectsOutOfScope) {
    for (u64 n : {0ULL, 1ULL, 2ULL, 3ULL, 6ULL, 12ULL, 25ULL, 63ULL}) EXPECT_THROW(classify(n), OutOfScope) << n;
}

TEST(Classify, RecordInvariants) {
    for (u64 n : odd_square_free_range(5, 500)) {
        const auto r = classify(n, {2});
        if (r.non_tn == Certification::Certified) {
            ASSERT_EQ(r.pi3.s_rank, 0);
            ASSERT_EQ(r.two_pi3.s_rank, 0);
        }
        if (r.tn_witness) {
            ASSERT_NE(r.non_tn, Certification::Certified);
        }
        for (const auto& v : r.criteria) ASSERT_TRUE(v.applicable);
    }
}

TEST(VerifyRange, Examples) {
    EXPECT_TRUE(verify_range(7, 7).ok());
    EXPECT_EQ(verify_range(7, 7).tally(CriterionId::Cor4_5)->agree, 1U);
    const auto empty = verify_range(10, 9);
    EXPECT_TRUE(empty.ok());
    EXPECT_EQ(empty.numbers_checked, 0U);
}

TEST(VerifyRange, ProductionReadingsOverSweep) {
    const auto v = verify_range(5, 3000, 2);
    for (const auto& t : v.tallies) {
        if (!t.production) continue;
        if (t.id == CriterionId::Thm4_4_I) continue;  // known counterexamples at n = 11 (mod 24), checked below
        EXPECT_EQ(t.agree, t.applicable) << criterion_name(t.id);
        EXPECT_GT(t.applicable, 0U) << criterion_name(t.id);
    }
}

// Thm4_4_I covers n = 11 (mod 24), but the 2-adic table excludes d = 3 (mod 4) there, so the
// seed is often all of S'. Every disagreement is of that form.
TEST(VerifyRange, KnownDisagreementsAreElevenModTwentyFour) {
    const auto v = verify_range(5, 3000);
    const auto* t = v.tally(CriterionId::Thm4_4_I);
    ASSERT_NE(t, nullptr);
    EXPECT_EQ(t->applicable - t->agree, 88U);
    for (u64 n : t->disagreeing_n) {
        EXPECT_EQ(n % 24, 11U);
        const auto r = eval_criterion(CriterionId::Thm4_4_I, n);
        EXPECT_FALSE(*r.graph_prediction);
        EXPECT_TRUE(r.descent_truth);
    }
    u64 elsewhere = 0;
    for (u64 n : odd_square_free_range(5, 3000)) {
        const auto r = eval_criterion(CriterionId::Thm4_4_I, n);
        if (r.applicable && n % 24 != 11 && !*r.agree) ++elsewhere;
    }
    EXPECT_EQ(elsewhere, 0U);
}

TEST(VerifyRange, StatementReadingsDisagree) {
    const auto v = verify_range(5, 3000);
    const auto* a = v.tally(CriterionId::Thm4_1_II2, Reading::Statement);
    const auto* b = v.tally(CriterionId::Thm5_2_I2, Reading::Statement);
    EXPECT_EQ(a->applicable, 112U);
    EXPECT_EQ(a->applicable - a->agree, 92U);
    EXPECT_EQ(b->applicable, 39U);
    EXPECT_EQ(b->applicable - b->agree, 31U);
    EXPECT_EQ(v.tally(CriterionId::Thm4_1_II2)->agree, 112U);
    EXPECT_EQ(v.tally(CriterionId::Thm5_2_I2)->agree, 39U);
}

TEST(VerifyRange, JobsDoNotChangeResult) {
    const auto a = verify_range(5, 800, 1);
    const auto b = verify_range(5, 800, 4);
    ASSERT_EQ(a.tallies.size(), b.tallies.size());
    for (std::size_t i = 0; i < a.tallies.size(); ++i) {
        EXPECT_EQ(a.tallies[i].applicable, b.tallies[i].applicable);
        EXPECT_EQ(a.tallies[i].disagreeing_n, b.tallies[i].disagreeing_n);
    }
}

// G(n) odd <=> G(-n) odd when n = 7, 19 (mod 24) and every prime divisor is 1 (mod 3).
TEST(GraphSymmetry, PlusMinusOddness) {
    int checked = 0;
    for (u64 n : odd_square_free_range(5, 3000)) {
        if (n % 24 != 7 && n % 24 != 19) continue;
        const auto ps = factor_square_free(n);
        if (!std::all_of(ps.begin(), ps.end(), [](u64 p) { return p % 3 == 1; })) continue;
        const i64 s = static_cast<i64>(n);
        ASSERT_EQ(is_odd_graph(build_unified(s)), is_odd_graph(build_unified(-s))) << n;
        ++checked;
    }
    EXPECT_EQ(checked, 153);
}

TEST(ConjectureReport, Examples) {
    const auto r = conjecture_report(5, 500);
    EXPECT_TRUE(r.pi3_anomalies.empty());
    EXPECT_TRUE(r.two_pi3_anomalies.empty());
    EXPECT_TRUE(std::find(r.non_tn.begin(), r.non_tn.end(), 7U) != r.non_tn.end());
    const auto e = conjecture_report(10, 9);
    EXPECT_EQ(e.certified_non_pi3, 0U);
    EXPECT_TRUE(e.non_tn.empty());
}
