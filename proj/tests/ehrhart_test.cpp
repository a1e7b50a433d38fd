#include "lhp/ehrhart.hpp"

#include <gtest/gtest.h>

using namespace lhp;

TEST(EhrhartCounts, Examples) {
    EXPECT_EQ(ehrhart_counts(LabeledPoset::chain(3), SSequence({1, 2, 3}), 3), (std::vector<Int>{1, 8, 27, 64}));
    EXPECT_EQ(ehrhart_counts(LabeledPoset::chain(1), SSequence({1}), 2), (std::vector<Int>{1, 2, 3}));
    EXPECT_EQ(ehrhart_counts(LabeledPoset::chain(2), SSequence({1, 2}), 2), (std::vector<Int>{1, 4, 9}));
    EXPECT_EQ(ehrhart_counts(LabeledPoset::chain(3), SSequence({1, 2, 3}), 0), (std::vector<Int>{1}));
}

TEST(EhrhartCounts, BudgetExceeded) {
    EXPECT_THROW(ehrhart_counts(LabeledPoset::chain(3), SSequence({1, 2, 3}), 3, 50), BudgetExceeded);
}

TEST(Hstar, FromCounts) {
    EXPECT_EQ(hstar_from_counts({1, 8, 27, 64}, 3), IntPolynomial({1, 4, 1}));
    EXPECT_EQ(hstar_from_counts({1, 2, 3}, 1), IntPolynomial({1}));
    EXPECT_EQ(hstar_from_counts({1, 4, 9}, 2), IntPolynomial({1, 1}));
}

TEST(Hstar, RejectsWrongDimension) {
    // (k+1)^3 read as a 1-dimensional polytope gives negative / nonvanishing terms
    EXPECT_THROW(hstar_from_counts({1, 8, 27, 64}, 1), InputError);
    EXPECT_THROW(hstar_from_counts({1, 8}, 3), InputError);
    EXPECT_THROW(hstar_from_counts({2, 8, 27, 64}, 3), InputError);
}

TEST(Hstar, FrozenValues) {
    // by brute-force point counting in an independent script
    EXPECT_EQ(hstar(LabeledPoset::chain(3), SSequence({1, 1, 2})), IntPolynomial({1, 1}));
    EXPECT_EQ(hstar(LabeledPoset::chain(3), SSequence({1, 2, 2})), IntPolynomial({1, 3}));
    EXPECT_EQ(hstar(LabeledPoset::chain(2), SSequence({2, 3})), IntPolynomial({1, 4, 1}));
    EXPECT_EQ(hstar(LabeledPoset::chain(3), SSequence({1, 1, 1})), IntPolynomial({1}));
}

TEST(Eulerian, Oracle) {
    EXPECT_EQ(eulerian_oracle(1), IntPolynomial({1}));
    EXPECT_EQ(eulerian_oracle(3), IntPolynomial({1, 4, 1}));
    EXPECT_EQ(eulerian_oracle(4), IntPolynomial({1, 11, 11, 1}));
    EXPECT_THROW(eulerian_oracle(10), BudgetExceeded);
}

TEST(Eulerian, MatchesLectureHallSimplex) {
    for (int n = 1; n <= 5; ++n)
        EXPECT_EQ(hstar(LabeledPoset::chain(n), SSequence::identity(n)), eulerian_oracle(n)) << n;
}

TEST(Hstar, NonnegativeAndVolume) {
    for (Int a = 1; a <= 3; ++a)
        for (Int b = 1; b <= 3; ++b)
            for (Int c = 1; c <= 3; ++c) {
                const SSequence s({a, b, c});
                const auto h = hstar(LabeledPoset::chain(3), s);
                for (Int coeff : h.coeffs()) EXPECT_GE(coeff, 0);
                if (s.weakly_increasing()) EXPECT_EQ(h.evaluate(1), s.product()) << s.str();
                EXPECT_NO_THROW(hstar(LabeledPoset(3, {{1, 3}, {2, 3}}), s));
                EXPECT_NO_THROW(hstar(LabeledPoset::antichain(3), s));
            }
}

TEST(GeneratingFunctions, Examples) {
    EXPECT_EQ(lecture_hall_gf(2, 4), (std::vector<Int>{1, 1, 1, 2, 2}));
    EXPECT_EQ(lecture_hall_gf(1, 3), (std::vector<Int>{1, 1, 1, 1}));
    EXPECT_EQ(odd_product_gf(2, 4), (std::vector<Int>{1, 1, 1, 2, 2}));
    EXPECT_EQ(odd_product_gf(1, 2), (std::vector<Int>{1, 1, 1}));
    EXPECT_EQ(odd_product_gf(3, 5), (std::vector<Int>{1, 1, 1, 2, 2, 3}));
    EXPECT_EQ(lecture_hall_gf(3, 5), odd_product_gf(3, 5));
    EXPECT_EQ(lecture_hall_gf(3, 15),
              (std::vector<Int>{1, 1, 1, 2, 2, 3, 4, 4, 5, 6, 7, 8, 9, 10, 11, 13}));
}

TEST(GeneratingFunctions, IdentityUpToFifteen) {
    for (int n = 1; n <= 3; ++n)
        for (Int m = 0; m <= 15; ++m) EXPECT_EQ(lecture_hall_gf(n, m), odd_product_gf(n, m));
}

TEST(GeneratingFunctions, Budget) { EXPECT_THROW(lecture_hall_gf(4, 40, 1000), BudgetExceeded); }

TEST(IntPolynomial, Basics) {
    IntPolynomial p({1, 4, 1, 0, 0});
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.evaluate(1), 6);
    EXPECT_EQ(p.str(), "1 + 4x + x^2");
    EXPECT_TRUE(IntPolynomial({0, 0}).is_zero());
    EXPECT_EQ(IntPolynomial().degree(), -1);
}
