#include <gtest/gtest.h>

#include "tcn/criteria.hpp"
#include "tcn/witness.hpp"

using namespace tcn;

TEST(SearchPoint, FiveOnTwoPiThird) {
    const auto w = search_point(Curve(5, Theta::TwoPiThird), 10);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->x_string(), "-1");
    EXPECT_EQ(w->y_string(), "8");
    EXPECT_TRUE(check_point(*w).on_curve);
}

TEST(SearchPoint, NoneForRankZero) {
    EXPECT_FALSE(search_point(Curve(7, Theta::PiThird), 50).has_value());
}

TEST(SearchPoint, RejectsBadHeight) {
    EXPECT_THROW(search_point(Curve(5, Theta::TwoPiThird), 0), std::invalid_argument);
    EXPECT_THROW(search_point(Curve(5, Theta::TwoPiThird), 1 << 20), std::invalid_argument);
}

TEST(CheckPoint, ExactArithmetic) {
    const Curve c(5, Theta::TwoPiThird);
    EXPECT_TRUE(check_point(c, {-1, 1}, {8, 1}).on_curve);
    EXPECT_TRUE(check_point(c, {-1, 1}, {-8, 1}).on_curve);
    EXPECT_FALSE(check_point(c, {-1, 1}, {7, 1}).on_curve);
    const auto torsion = check_point(c, {15, 1}, {0, 1});
    EXPECT_TRUE(torsion.on_curve);
    EXPECT_TRUE(torsion.y_zero);
    EXPECT_THROW(check_point(c, {1, 0}, {1, 1}), std::invalid_argument);
}

// Every point the search returns lies on its curve and is not 2-torsion;
// a hit also means the Selmer rank must be positive.
TEST(SearchPoint, Soundness) {
    int hits = 0;
    for (u64 n : odd_square_free_range(5, 400)) {
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird}) {
            const Curve c(n, t);
            const auto w = search_point(c, 3);
            if (!w) continue;
            ++hits;
            const auto chk = check_point(*w);
            ASSERT_TRUE(chk.on_curve) << c.name();
            ASSERT_FALSE(chk.y_zero) << c.name();
            ASSERT_EQ(std::gcd(w->x_num, w->x_den_sqrt), 1);
            ASSERT_GE(selmer(c).s_rank, 1) << c.name();
        }
    }
    EXPECT_GT(hits, 20);
}
