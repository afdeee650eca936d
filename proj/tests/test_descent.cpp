#include <gtest/gtest.h>

#include <map>
#include <set>

#include "local_image_oracle.hpp"
#include "tcn/criteria.hpp"
#include "tcn/descent.hpp"

using namespace tcn;

namespace {

std::vector<SquareClass> classes(std::initializer_list<i64> ks) {
    std::vector<SquareClass> out;
    for (i64 k : ks) out.push_back(class_of(k));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subgroup(const std::vector<SquareClass>& s) {
    const std::set<SquareClass> set(s.begin(), s.end());
    if (!set.count(SquareClass::identity())) return false;
    for (const auto& a : s)
        for (const auto& b : s)
            if (!set.count(a * b)) return false;
    return true;
}

}  // namespace

TEST(Curve, Basics) {
    const Curve c(7, Theta::PiThird);
    EXPECT_EQ(c.roots(), (std::vector<i64>{0, 7, -21}));
    EXPECT_EQ(Curve(7, Theta::TwoPiThird).roots(), (std::vector<i64>{0, -7, 21}));
    EXPECT_THROW(Curve(12, Theta::PiThird), NotSquareFree);
    EXPECT_THROW(Curve(1, Theta::PiThird), std::invalid_argument);
}

TEST(DescentGroup, Examples) {
    EXPECT_EQ(descent_group(Curve(7, Theta::PiThird)).size(), 16U);
    EXPECT_EQ(descent_group(Curve(15, Theta::PiThird)).size(), 16U);
    EXPECT_EQ(descent_group(Curve(6, Theta::PiThird)).size(), 8U);
    for (u64 n : {5ULL, 7ULL, 30ULL, 1155ULL}) {
        const auto g = descent_group(Curve(n, Theta::TwoPiThird));
        EXPECT_EQ(g.front(), SquareClass::identity());
        EXPECT_EQ(std::set<SquareClass>(g.begin(), g.end()).size(), g.size());
        EXPECT_TRUE(is_subgroup(g));
    }
}

TEST(InImageDual, Examples) {
    const Curve c(7, Theta::PiThird);
    for (const auto& d : descent_group(c)) EXPECT_TRUE(in_image_dual(c, Place::infinity(), d));
    EXPECT_FALSE(in_image_dual(c, Place::prime(7), class_of(-1)));
    EXPECT_TRUE(in_image_dual(c, Place::prime(2), class_of(-3)));
    EXPECT_THROW(in_image_dual(c, Place::prime(5), class_of(-1)), PlaceNotInM);
}

TEST(InImage, Examples) {
    for (u64 n : {5ULL, 7ULL, 15ULL})
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird})
            EXPECT_FALSE(in_image(Curve(n, t), Place::infinity(), class_of(-1)));
    const Curve c(7, Theta::PiThird);
    EXPECT_FALSE(in_image(c, Place::prime(2), class_of(7)));
    EXPECT_FALSE(in_image(c, Place::prime(3), class_of(3)));
    EXPECT_THROW(in_image(c, Place::prime(11), class_of(3)), PlaceNotInM);
}

TEST(Selmer, SevenPiThird) {
    const auto r = selmer(Curve(7, Theta::PiThird));
    EXPECT_EQ(r.s_prime, classes({1, 7, -21, -3}));
    EXPECT_EQ(r.s, classes({1}));
    EXPECT_EQ(r.rk2_s_prime, 2);
    EXPECT_EQ(r.rk2_s, 0);
    EXPECT_EQ(r.s_rank, 0);
}

// Reproduces S'(E_{7,pi/3}) without the tables: each of the 16 classes is
// kept iff its local class shows up among sampled points at 2, 3 and 7.
TEST(Selmer, SevenPiThirdByBruteSampling) {
    const Curve c(7, Theta::PiThird);
    const oracle::cpp_int A = 14, B = -147;
    std::vector<SquareClass> s_prime, s;
    std::map<u64, std::pair<std::set<oracle::LocalClass>, std::set<oracle::LocalClass>>> images;
    for (u64 p : {2ULL, 3ULL, 7ULL}) images[p] = {oracle::sample_image(A, B, p), oracle::sample_image(-2 * A, A * A - 4 * B, p)};
    for (const auto& d : descent_group(c)) {
        bool dual = true, img = !d.negative();  // at infinity: every class for E, d > 0 for E'
        for (auto& [p, im] : images) {
            dual = dual && im.first.count(oracle::class_of_square_class(d, p));
            img = img && im.second.count(oracle::class_of_square_class(d, p));
        }
        if (dual) s_prime.push_back(d);
        if (img) s.push_back(d);
    }
    std::sort(s_prime.begin(), s_prime.end());
    EXPECT_EQ(s_prime, classes({1, 7, -21, -3}));
    EXPECT_EQ(s, classes({1}));
}

TEST(Selmer, FiveTwoPiThirdHasPositiveRank) {
    EXPECT_GE(selmer(Curve(5, Theta::TwoPiThird)).s_rank, 1);
}

TEST(TorsionSeed, Examples) {
    EXPECT_EQ(torsion_seed(Curve(7, Theta::PiThird)), classes({1, 7, -21, -3}));
    EXPECT_EQ(torsion_seed(Curve(5, Theta::TwoPiThird)), classes({1, -5, 15, -3}));
    EXPECT_EQ(torsion_seed(Curve(3, Theta::PiThird)), classes({1, 3, -1, -3}));
}

TEST(LocalImageOracle, TablesMatchSampling) {
    for (u64 n : {5ULL, 7ULL, 11ULL, 13ULL, 15ULL, 21ULL, 33ULL, 35ULL, 51ULL, 57ULL, 105ULL, 143ULL, 195ULL, 231ULL, 6ULL,
                  10ULL, 14ULL, 30ULL}) {
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird}) {
            const Curve c(n, t);
            const auto bad = oracle::check_curve(c);
            EXPECT_TRUE(bad.empty()) << c.name() << ": " << bad.size() << " mismatches, first at p = " << bad.front().p
                                     << ", d = " << bad.front().d.to_string() << (bad.front().dual ? " (dual)" : "");
        }
    }
}

TEST(Selmer, EvenNDoesNotCrash) {
    for (u64 n = 2; n <= 400; n += 2) {
        if (!is_square_free(n)) continue;
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird}) {
            const auto r = selmer(Curve(n, t));
            EXPECT_GE(r.s_rank, 0) << n;
        }
    }
}

TEST(SelmerProperties, SubgroupsSeedsAndRank) {
    for (u64 n : odd_square_free_range(5, 3000)) {
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird}) {
            const Curve c(n, t);
            const auto r = selmer(c);
            ASSERT_TRUE(is_subgroup(r.s_prime)) << c.name();
            ASSERT_TRUE(is_subgroup(r.s)) << c.name();
            for (const auto& d : torsion_seed(c))
                ASSERT_TRUE(std::binary_search(r.s_prime.begin(), r.s_prime.end(), d)) << c.name();
            ASSERT_GE(r.s_rank, 0);
            ASSERT_EQ(std::size_t{1} << r.rk2_s_prime, r.s_prime.size());
        }
    }
}

TEST(SelmerProperties, LocalImagesAreHilbertOrthogonal) {
    for (u64 n : odd_square_free_range(5, 600)) {
        for (Theta t : {Theta::PiThird, Theta::TwoPiThird}) {
            const Curve c(n, t);
            const auto group = descent_group(c);
            for (const Place& v : places_of(c)) {
                std::vector<i64> im, im_dual;
                for (const auto& d : group) {
                    if (in_image(c, v, d)) im.push_back(d.representative());
                    if (in_image_dual(c, v, d)) im_dual.push_back(d.representative());
                }
                for (i64 a : im)
                    for (i64 b : im_dual) ASSERT_EQ(hilbert(a, b, v), 1) << c.name() << " at " << v.to_string();
            }
        }
    }
}
