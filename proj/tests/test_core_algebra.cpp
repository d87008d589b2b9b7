#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace hhci;
using namespace testing_helpers;

TEST(IndexSet, MembersAndBits)
{
    const auto s = IndexSet::from_members({3, 1, 4});
    EXPECT_EQ(s.members(), (std::vector<int>{1, 3, 4}));
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s.count_below(4), 2);
    EXPECT_TRUE(s.contains(3));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.to_string(), "{1,3,4}");
    EXPECT_EQ(IndexSet::full(3).members(), (std::vector<int>{1, 2, 3}));
}

TEST(IndexSet, SubsetEnumerationCoversPowerSet)
{
    for (int n = 1; n <= 6; ++n) {
        std::set<std::uint32_t> seen;
        for_each_subset(IndexSet::full(n), [&](IndexSet s) { seen.insert(s.bits()); });
        EXPECT_EQ(seen.size(), std::size_t{1} << n);
    }
}

// Both sign helpers against the parity of a bubble sort, for every pair of
// disjoint subsets of {1..6}.
TEST(Signs, MatchBubbleSortParity)
{
    const int n = 6;
    for_each_subset(IndexSet::full(n), [&](IndexSet m) {
        for_each_subset(IndexSet::full(n) - m, [&](IndexSet k) {
            auto seq = m.members();
            const auto tail = k.members();
            seq.insert(seq.end(), tail.begin(), tail.end());
            EXPECT_EQ(sgn_sets(m, k), bubble_parity(seq)) << m.to_string() << " " << k.to_string();
        });
        for (int i = 1; i <= n; ++i) {
            if (m.contains(i)) {
                continue;
            }
            auto seq = m.members();
            seq.insert(seq.begin(), i);
            EXPECT_EQ(sgn_index(i, m), bubble_parity(seq));
        }
    });
}

TEST(Signs, OverlapThrows)
{
    EXPECT_THROW(sgn_sets(IndexSet::from_members({1, 2}), IndexSet::from_members({2})), algebra_error);
}

TEST(Signs, GradedAntisymmetry)
{
    const int n = 5;
    for_each_subset(IndexSet::full(n), [&](IndexSet m) {
        for_each_subset(IndexSet::full(n) - m, [&](IndexSet k) {
            const int expected = (m.size() * k.size()) % 2 == 0 ? 1 : -1;
            EXPECT_EQ(sgn_sets(m, k) * sgn_sets(k, m), expected);
        });
    });
}

TEST(Monomial, ZeroExactlyWhenFullSupport)
{
    EXPECT_TRUE(mono({1, 1, 1}).is_zero());
    EXPECT_TRUE(mono({3, 2, 5}).is_zero());
    EXPECT_FALSE(mono({3, 0, 5}).is_zero());
    EXPECT_FALSE(AMonomial::one(3).is_zero());
}

TEST(Monomial, MultiplicationProperties)
{
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<int> nd(1, 5), ed(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = nd(rng);
        auto random_mono = [&] {
            ExponentVector e(n);
            for (int i = 0; i < n; ++i) {
                e[i] = ed(rng);
            }
            return AMonomial(e);
        };
        const auto a = random_mono(), b = random_mono(), c = random_mono();
        EXPECT_EQ(monomial_mul(a, b), monomial_mul(b, a));
        EXPECT_EQ(monomial_mul(monomial_mul(a, b), c), monomial_mul(a, monomial_mul(b, c)));
        EXPECT_EQ(monomial_mul(a, AMonomial::one(n)), a);
        EXPECT_EQ(monomial_mul(a, b).is_zero(), support(a.exponents() + b.exponents()) == IndexSet::full(n));
    }
}

TEST(Monomial, DivideBySet)
{
    const auto m = mono({2, 1, 0});
    const auto q = m.divide(IndexSet::from_members({1, 2}));
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, mono({1, 0, 0}));
    EXPECT_FALSE(m.divide(IndexSet::from_members({3})).has_value());
}

TEST(Monomial, MismatchedSizesThrow)
{
    EXPECT_THROW(monomial_mul(mono({1, 0}), mono({1, 0, 0})), algebra_error);
}

TEST(Multidegree, Examples)
{
    // (e_1 t, x_1^2 x_2) at n = 2: hdeg 3, rdeg (2-1-1, 1-0-1).
    const auto m = mdeg(IndexSet::from_members({1}), 1, ExponentVector{2, 1});
    EXPECT_EQ(m.hdeg, 3);
    EXPECT_EQ(m.rdeg, (ExponentVector{0, 0}));
    const auto z = mdeg(IndexSet{}, 1, ExponentVector{0, 0, 0});
    EXPECT_EQ(z.hdeg, 2);
    EXPECT_EQ(z.rdeg, (ExponentVector{-1, -1, -1}));
    EXPECT_THROW(mdeg(IndexSet{}, 0, ExponentVector{-1, 0}), algebra_error);
}

TEST(AElement, ProductKillsFullSupport)
{
    AElement a(2), b(2);
    a.add(mono({1, 0}), 2);
    a.add(mono({0, 1}), 1);
    b.add(mono({1, 0}), 1);
    const auto p = a * b;
    AElement expected(2);
    expected.add(mono({2, 0}), 2);
    EXPECT_EQ(p, expected);
}

TEST(Scalar, RationalAndModular)
{
    const Scalar half(mpq_class(1, 2));
    EXPECT_EQ(half + half, Scalar(1));
    EXPECT_TRUE((half - half).is_zero());
    const auto f7 = Field::parse("fp:7");
    const auto three = f7.make(3);
    EXPECT_EQ(three * three.inverse(), f7.make(1));
    EXPECT_EQ(f7.make(Scalar(mpq_class(1, 2))) * f7.make(2), f7.make(1));
    EXPECT_THROW(Field::parse("fp:8"), algebra_error);
    EXPECT_THROW(Scalar(0).inverse(), algebra_error);
}
