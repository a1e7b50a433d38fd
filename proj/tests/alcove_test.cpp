#include "lhp/alcove.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lhp;

namespace {
const SSequence s123({1, 2, 3});
}

TEST(Gate, RejectsGeneralSequences) {
    EXPECT_THROW(to_alcove(SSequence({1, 3}), Point{0, 0}), GateError);
    EXPECT_THROW(enumerate_multisets(SSequence({2, 3})), GateError);
    EXPECT_THROW(lemma_conditions(SSequence({2, 1}), Point{0, 0, 3}), GateError);
}

TEST(ToAlcove, Examples) {
    EXPECT_EQ(to_alcove(s123, Point{1, 2, 3}).z, (Point{1, 1, 1, 1}));
    EXPECT_EQ(to_alcove(s123, Point{0, 0, 0}).z, (Point{0, 0, 0, 4}));
    EXPECT_EQ(to_alcove(s123, Point{0, 1, 3}).z, (Point{0, 1, 2, 1}));
    const auto a = to_alcove(s123, Point{1, 3, 5}, 2);
    EXPECT_EQ(a.z, (Point{1, 2, 2, 3}));
    EXPECT_EQ(a.degree, 2);
    EXPECT_THROW(to_alcove(s123, Point{1, 3, 5}, 1), PreconditionError);
}

TEST(FromAlcove, Examples) {
    EXPECT_EQ(from_alcove(s123, {{1, 1, 1, 1}, 1}), (Point{1, 2, 3}));
    EXPECT_EQ(from_alcove(s123, {{0, 0, 0, 4}, 1}), (Point{0, 0, 0}));
    EXPECT_EQ(from_alcove(s123, {{0, 2, 1, 1}, 1}), (Point{0, 2, 3}));
    EXPECT_THROW(from_alcove(s123, {{0, 2, 0, 2}, 1}), PreconditionError);
}

TEST(LemmaConditions, Examples) {
    EXPECT_TRUE(lemma_conditions(s123, Point{0, 0, 2, 2}));
    EXPECT_FALSE(lemma_conditions(s123, Point{0, 2, 0, 2}));
    EXPECT_TRUE(lemma_conditions(s123, Point{0, 0, 0, 4}));
    EXPECT_THROW(lemma_conditions(s123, Point{0, 0, 4}), InputError);
}

TEST(LemmaConditions, NegativeEntriesAreRejected) {
    // nonzero but negative z_2 after a nonzero z_1
    EXPECT_FALSE(lemma_conditions(s123, Point{1, -1, 2, 2}));
    EXPECT_FALSE(is_in_dilate(s123, Point{1, -1, 2, 2}, 1));
}

TEST(IsInDilate, Examples) {
    EXPECT_TRUE(is_in_dilate(s123, Point{0, 0, 2, 6}, 2));
    EXPECT_TRUE(is_in_dilate(s123, to_alcove(s123, Point{1, 2, 3}).z, 1));
    EXPECT_FALSE(is_in_dilate(s123, Point{0, 0, 2, 6}, 1));
    EXPECT_THROW(is_in_dilate(s123, Point{0, 0, 4}, 1), InputError);
}

// The two characterizations agree on the whole scan box.
TEST(Properties, LemmaEquivalence) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 1, 2}), SSequence({1, 2, 2})}) {
        int members = 0;
        for (Int a = -1; a <= 5; ++a)
            for (Int b = -1; b <= 5; ++b)
                for (Int c = -1; c <= 5; ++c)
                    for (Int d = -1; d <= 5; ++d) {
                        const Point z{a, b, c, d};
                        if (a + b + c + d != s.extended()) continue;
                        ASSERT_EQ(lemma_conditions(s, z), is_in_dilate(s, z, 1)) << detail::to_string(z);
                        members += lemma_conditions(s, z);
                    }
        EXPECT_EQ(members, static_cast<int>(enumerate_multisets(s).size()));
    }
}

TEST(DiffSupport, Examples) {
    EXPECT_EQ(diff_support(s123), (std::vector<std::size_t>{1, 2, 3, 4}));
    EXPECT_EQ(diff_support(SSequence({1, 1, 1})), (std::vector<std::size_t>{1, 4}));
    EXPECT_EQ(diff_support(SSequence({1, 1, 2})), (std::vector<std::size_t>{1, 3, 4}));
}

TEST(EnumerateMultisets, Examples) {
    const std::vector<Point> expected{{1, 1, 1, 1}, {0, 2, 1, 1}, {0, 1, 2, 1}, {0, 1, 1, 2},
                                      {0, 0, 3, 1}, {0, 0, 2, 2}, {0, 0, 1, 3}, {0, 0, 0, 4}};
    EXPECT_EQ(enumerate_multisets(s123), expected);
    EXPECT_EQ(enumerate_multisets(SSequence({1})), (std::vector<Point>{{1, 1}, {0, 2}}));
    EXPECT_EQ(enumerate_multisets(SSequence({1, 1})).size(), 3u);
}

TEST(Properties, RoundTripAndCounts) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 1, 2}), SSequence({1, 2, 2})}) {
        const auto chain = LabeledPoset::chain(3);
        for (Int k = 1; k <= 3; ++k) {
            const auto xs = enumerate_dilate_points(chain, s, k);
            for (const auto& x : xs) ASSERT_EQ(from_alcove(s, to_alcove(s, x, k)), x);
            std::size_t count = 0;
            const Int top = k * s.extended();
            for (Int a = 0; a <= top; ++a)
                for (Int b = 0; a + b <= top; ++b)
                    for (Int c = 0; a + b + c <= top; ++c) {
                        const Point z{a, b, c, top - a - b - c};
                        if (!is_in_dilate(s, z, k)) continue;
                        ++count;
                        const AlcovePoint p{z, k};
                        ASSERT_EQ(to_alcove(s, from_alcove(s, p), k), p);
                    }
            EXPECT_EQ(count, xs.size()) << s.str() << " k=" << k;
        }
    }
}

TEST(Lex, Compare) {
    EXPECT_EQ(lex_compare(Point{0, 0, 3, 1}, Point{0, 0, 2, 2}), std::strong_ordering::greater);
    EXPECT_EQ(lex_compare(Point{1, 1, 1, 1}, Point{0, 0, 0, 4}), std::strong_ordering::greater);
    EXPECT_EQ(lex_compare(Point{0, 1}, Point{0, 1}), std::strong_ordering::equal);
    EXPECT_THROW(lex_compare(Point{0}, Point{0, 1}), InputError);
}

TEST(Collections, Compare) {
    const Collection a{{0, 0, 3, 1}, {0, 0, 1, 3}};
    const Collection b{{0, 0, 2, 2}, {0, 0, 2, 2}};
    EXPECT_EQ(collection_compare(a, b), std::strong_ordering::greater);
    const Collection c{{0, 0, 2, 2}, {0, 0, 2, 2}, {0, 0, 0, 4}};
    const Collection d{{0, 0, 2, 2}, {0, 0, 1, 3}, {0, 0, 1, 3}};
    EXPECT_EQ(collection_compare(c, d), std::strong_ordering::greater);
    EXPECT_EQ(collection_compare(a, a), std::strong_ordering::equal);
    EXPECT_THROW(collection_compare(a, c), InputError);
}

TEST(Collections, SortedAndDegreeChecked) {
    const Collection c{{0, 0, 1, 3}, {1, 1, 1, 1}, {0, 0, 3, 1}};
    EXPECT_EQ(c[0], (Point{1, 1, 1, 1}));
    EXPECT_EQ(c[2], (Point{0, 0, 1, 3}));
    EXPECT_EQ(c.sum(), (Point{1, 1, 5, 5}));
    EXPECT_THROW(Collection(std::vector<AlcovePoint>{{{0, 0, 0, 4}, 1}, {{0, 0, 2, 6}, 2}}), InputError);
    EXPECT_EQ(render_multiset(Point{0, 2, 1, 1}), "{2^2 3^1 4^1}");
}

// Both orders are total: antisymmetric and transitive on random inputs.
TEST(Properties, OrdersAreTotal) {
    std::mt19937 rng(11);
    const auto pts = enumerate_multisets(SSequence({1, 2, 2, 3}));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    auto random_collection = [&] { return Collection{pts[pick(rng)], pts[pick(rng)], pts[pick(rng)]}; };
    for (int t = 0; t < 2000; ++t) {
        const auto a = random_collection(), b = random_collection(), c = random_collection();
        const auto ab = collection_compare(a, b), ba = collection_compare(b, a);
        ASSERT_EQ(ab == 0, ba == 0);
        ASSERT_EQ(ab < 0, ba > 0);
        ASSERT_EQ(ab == 0, a == b);
        if (ab <= 0 && collection_compare(b, c) <= 0) {
            ASSERT_TRUE(collection_compare(a, c) <= 0);
        }
        const auto &x = pts[pick(rng)], &y = pts[pick(rng)], &z = pts[pick(rng)];
        ASSERT_EQ(lex_compare(x, y) < 0, lex_compare(y, x) > 0);
        if (lex_compare(x, y) <= 0 && lex_compare(y, z) <= 0) {
            ASSERT_TRUE(lex_compare(x, z) <= 0);
        }
    }
}
