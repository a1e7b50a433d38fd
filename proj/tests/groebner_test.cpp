#include "lhp/groebner.hpp"
#include "lhp/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lhp;

namespace {
const SSequence s123({1, 2, 3});
}

TEST(Alpha, Examples) {
    EXPECT_EQ(alpha(Point{1, 3, 4, 4}, 1, s123), 1u);
    EXPECT_EQ(alpha(Point{1, 3, 4, 4}, 4, s123), 3u);
    EXPECT_EQ(alpha(Point{0, 2, 2, 4}, 3, s123), 4u);
    EXPECT_EQ(alpha(Point{0, 0, 3, 5}, 2, s123), 3u);
    EXPECT_FALSE(alpha(Point{0, 0, 3, 5}, 6, s123).has_value());
    EXPECT_THROW(alpha(Point{0, 0, 3}, 1, s123), InputError);
}

TEST(Ell, Examples) {
    EXPECT_EQ(ell(Point{0, 0, 3, 1}), 3u);
    EXPECT_EQ(ell(Point{1, 1, 1, 1}), 1u);
    EXPECT_THROW(ell(Point{0, 0, 0}), InputError);
}

TEST(MinimizePair, Examples) {
    const MultisetTable table(s123);
    EXPECT_EQ(minimize_pair(table, Point{0, 0, 3, 1}, Point{0, 0, 1, 3}),
              (Collection{{0, 0, 2, 2}, {0, 0, 2, 2}}));
    EXPECT_EQ(minimize_pair(table, Point{1, 1, 1, 1}, Point{0, 0, 0, 4}),
              (Collection{{1, 1, 1, 1}, {0, 0, 0, 4}}));
    EXPECT_EQ(minimize_pair(Point{0, 2, 1, 1}, Point{0, 0, 2, 2}, s123),
              (Collection{{0, 1, 2, 1}, {0, 1, 1, 2}}));
    EXPECT_THROW(minimize_pair(table, Point{0, 0, 4, 0}, Point{0, 0, 0, 4}), PreconditionError);
}

TEST(MinimizePair, GreedyAgreesWithScan) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 1, 2}), SSequence({1, 2, 2}),
                          SSequence({1, 2, 3, 4}), SSequence({1, 1, 1}), SSequence({1, 2, 2, 3, 3}),
                          SSequence({1, 1, 2, 3, 3})}) {
        const auto pts = enumerate_multisets(s);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i; j < pts.size(); ++j)
                ASSERT_EQ(minimize_pair_greedy(pts[i], pts[j], s), oracle::minimal_pair_scan(pts, pts[i], pts[j]))
                    << s.str() << " " << render_multiset(pts[i]) << " " << render_multiset(pts[j]);
    }
}

TEST(Basis, ContentsFor123) {
    const auto basis = groebner_basis(s123);
    ASSERT_EQ(basis.size(), 9u);
    EXPECT_EQ(basis.front().lead, (Collection{{0, 2, 1, 1}, {0, 0, 3, 1}}));
    EXPECT_EQ(basis.front().trail, (Collection{{0, 1, 2, 1}, {0, 1, 2, 1}}));
    EXPECT_EQ(basis.back().lead, (Collection{{0, 0, 2, 2}, {0, 0, 0, 4}}));
    EXPECT_EQ(basis.back().trail, (Collection{{0, 0, 1, 3}, {0, 0, 1, 3}}));
    for (const auto& b : basis) {
        EXPECT_EQ(b.lead.sum(), b.trail.sum());
        EXPECT_TRUE(collection_compare(b.lead, b.trail) > 0);
    }
}

TEST(Basis, Sizes) {
    EXPECT_TRUE(groebner_basis(SSequence({1})).empty());
    EXPECT_EQ(groebner_basis(SSequence({1, 1, 2})).size(), 1u);
    EXPECT_EQ(groebner_basis(SSequence({1, 2, 2})).size(), 6u);
}

TEST(Basis, SquareFreeAndReduced) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 2, 2}), SSequence({1, 2, 3, 4})}) {
        const MultisetTable table(s);
        for (const auto& b : groebner_basis(table)) {
            EXPECT_NE(b.lead[0], b.lead[1]);
            EXPECT_TRUE(is_standard(b.trail, table));
        }
    }
}

TEST(NormalForm, Example) {
    const Collection c{{0, 0, 3, 1}, {0, 0, 1, 3}, {0, 0, 0, 4}};
    const auto nf = normal_form(c, s123);
    EXPECT_EQ(nf, (Collection{{0, 0, 2, 2}, {0, 0, 1, 3}, {0, 0, 1, 3}}));
    EXPECT_TRUE(is_standard(nf, s123));
    EXPECT_FALSE(is_standard(c, s123));
    EXPECT_EQ(nf.sum(), c.sum());
}

TEST(NormalForm, RejectsForeignPoints) {
    EXPECT_THROW(normal_form(Collection{{0, 0, 4, 0}}, s123), PreconditionError);
}

TEST(NormalForm, EqualsBruteForceMinimum) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 1, 2}), SSequence({1, 2, 2})}) {
        const MultisetTable table(s);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto best = oracle::minimal_collections(table.points(), k);
            for (const auto& c : oracle::all_collections(table.points(), k))
                ASSERT_EQ(normal_form(c, table), best.at(c.sum())) << render(c);
        }
    }
}

TEST(NormalForm, RandomSchedulesAgree) {
    const MultisetTable table(SSequence({1, 2, 2, 3}));
    std::mt19937 rng(7);
    for (const auto& c : oracle::all_collections(table.points(), 3)) {
        const auto reference = normal_form(c, table);
        for (int t = 0; t < 5; ++t) {
            auto pick = [&](const auto& eligible, const Collection&) {
                return std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng);
            };
            ASSERT_EQ(normal_form(c, table, pick), reference);
        }
    }
}

TEST(LeadingIndex, Examples) {
    EXPECT_TRUE(lemma_sp_check(Collection{{0, 0, 2, 2}, {0, 0, 1, 3}, {0, 0, 1, 3}}, s123));
    EXPECT_TRUE(lemma_sp_check(Collection{{1, 1, 1, 1}, {0, 0, 0, 4}}, s123));
    EXPECT_THROW(lemma_sp_check(Collection{{0, 0, 3, 1}, {0, 0, 1, 3}}, s123), PreconditionError);
}

// The formula needs s strictly increasing; with a repeated entry it fails.
TEST(LeadingIndex, FailsForRepeatedEntries) {
    const SSequence s({1, 1, 2});
    const Collection c{{1, 0, 1, 1}, {0, 1, 1, 1}};
    ASSERT_TRUE(is_standard(c, s));
    EXPECT_FALSE(lemma_sp_check(c, s));
}

TEST(LeadingIndex, HoldsForStrictSequences) {
    for (const auto& s : {SSequence({1, 2, 3}), SSequence({1, 2, 3, 4})}) {
        const MultisetTable table(s);
        for (std::size_t k = 1; k <= 3; ++k)
            for (const auto& c : oracle::all_collections(table.points(), k))
                if (is_standard(c, table)) {
                    ASSERT_TRUE(lemma_sp_check(c, table)) << render(c);
                }
    }
}

TEST(Table, Budget) {
    EXPECT_THROW(MultisetTable(SSequence({1, 2, 3, 4, 5}), 100), BudgetExceeded);
    EXPECT_THROW(MultisetTable(SSequence({1, 3})), GateError);
}
