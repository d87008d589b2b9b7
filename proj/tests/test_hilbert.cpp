#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace hhci;
using namespace testing_helpers;

namespace
{

Multidegree md(int h, std::initializer_list<int> r)
{
    return {h, ExponentVector(r)};
}

// Nonzero monomials of A of total degree k, counted directly.
long count_monomials(int n, int k)
{
    long count = 0;
    std::vector<int> e(n, 0);
    auto rec = [&](auto &&self, int i, int left) -> void {
        if (i == n - 1) {
            e[i] = left;
            bool full = true;
            for (int v : e) {
                full = full && v > 0;
            }
            count += !full;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, k);
    return count;
}

} // namespace

TEST(LaurentPoly, ArithmeticAndDivision)
{
    const auto x = LaurentPoly::variable(2, 0);
    const auto y = LaurentPoly::variable(2, 1);
    const auto one = LaurentPoly::constant(2, 1);
    const auto p = (x + one) * (x - y);
    EXPECT_EQ(p.exact_divide(x - y), x + one);
    EXPECT_FALSE(p.exact_divide(x + y + one).has_value());
    EXPECT_EQ((x + y).pow(2), x * x + x * y + x * y + y * y);
    EXPECT_EQ(p.substitute(1, 0), x * x + x);
    const auto inv = LaurentPoly::monomial({0, -1});
    EXPECT_THROW(inv.substitute(1, 0), algebra_error);
}

TEST(ClosedSeries, OneVariableIsOne)
{
    const auto r = closed_series(1).reduced();
    EXPECT_EQ(r.numerator, LaurentPoly::constant(2, 1));
    EXPECT_TRUE(r.factors.empty());
}

TEST(ClosedSeries, EqualsH1MinusH2)
{
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(same_rational_function(subtract(h1(n), h2(n)), closed_series(n))) << n;
    }
    EXPECT_FALSE(same_rational_function(h1(2), closed_series(2)));
}

TEST(Coefficient, Examples)
{
    const auto s = closed_series(2);
    EXPECT_EQ(coefficient(s, md(0, {3, 0})), 1);
    EXPECT_EQ(coefficient(s, md(2, {-1, -1})), 1);
    EXPECT_EQ(coefficient(s, md(1, {0, 0})), 2);
    EXPECT_EQ(coefficient(s, md(3, {-1, -1})), 1);
    EXPECT_EQ(coefficient(s, md(0, {1, 1})), 0);
    for (int a = 0; a <= 4; ++a) {
        EXPECT_EQ(coefficient(h1(2), md(0, {a, 0})), 1);
        EXPECT_EQ(coefficient(h2(2), md(0, {a, -a})), 0);
    }
}

TEST(HilbertFunction, Examples)
{
    EXPECT_EQ(hilbert_function(1, md(0, {0})), 1u);
    for (const auto &mu : multidegree_box(1, 5, 3)) {
        if (mu.hdeg != 0 || mu.rdeg[0] != 0) {
            EXPECT_EQ(hilbert_function(1, mu), 0u) << mu.to_string();
        }
    }
    EXPECT_EQ(hilbert_function(2, md(3, {-1, -1})), 1u);
    EXPECT_EQ(hilbert_function(2, md(0, {1, 1})), 0u);
    EXPECT_THROW(hilbert_function(2, md(0, {1})), algebra_error);
}

TEST(Coefficient, MatchesEnumeration)
{
    for (int n = 1; n <= 3; ++n) {
        const auto s = closed_series(n);
        const auto r = s.reduced();
        for (const auto &mu : multidegree_box(n, 5, 3)) {
            const auto c = coefficient(s, mu);
            EXPECT_EQ(c, mpq_class(static_cast<long>(hilbert_function(n, mu)))) << mu.to_string();
            EXPECT_EQ(coefficient(r, mu), c);
            EXPECT_GE(c, 0);
        }
    }
}

TEST(Coefficient, IntermediatesCountCocyclesAndKillers)
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &mu : multidegree_box(n, 4, 2)) {
            const auto here = enumerate_standard(mu);
            const auto below = enumerate_standard(Multidegree{mu.hdeg - 1, mu.rdeg});
            const long cocycles = std::count_if(here.begin(), here.end(), is_cocycle);
            const long killers = std::count_if(below.begin(), below.end(), [](const auto &s) { return !is_cocycle(s); });
            EXPECT_EQ(coefficient(h1(n), mu), cocycles);
            EXPECT_EQ(coefficient(h2(n), mu), killers);
        }
    }
}

TEST(Specialize, HdegZeroSliceCountsMonomials)
{
    for (int n = 1; n <= 3; ++n) {
        const auto s = specialize(closed_series(n), mpq_class(0), std::nullopt);
        for (int k = 0; k <= 6; ++k) {
            EXPECT_EQ(series_coefficient(s, {0, k}), count_monomials(n, k)) << "n=" << n << " k=" << k;
        }
    }
    const auto two = specialize(closed_series(2), mpq_class(0), std::nullopt);
    const auto v = LaurentPoly::variable(2, 1);
    EXPECT_EQ(two.numerator, v + LaurentPoly::constant(2, 1));
    ASSERT_EQ(two.factors.size(), 1u);
    EXPECT_EQ(two.factors[0].poly(), LaurentPoly::constant(2, 1) - v);
}

TEST(Specialize, TotalDegreeSums)
{
    // Coefficient of u^h v^k sums hilbert_function over rdeg of total k.
    const int n = 2;
    const auto s = specialize(closed_series(n), std::nullopt, std::nullopt);
    for (int h = 0; h <= 4; ++h) {
        for (int k = -3; k <= 3; ++k) {
            long direct = 0;
            const int lo = -1 - h / 2;
            for (int a = lo; a <= k - lo; ++a) {
                direct += hilbert_function(n, md(h, {a, k - a}));
            }
            EXPECT_EQ(series_coefficient(s, {h, k}), direct) << h << " " << k;
        }
    }
}

TEST(Specialize, ConstantsAndErrors)
{
    for (int n = 1; n <= 3; ++n) {
        const auto s = specialize(closed_series(n), mpq_class(0), mpq_class(0));
        EXPECT_EQ(s.numerator, LaurentPoly::constant(2, 1));
        EXPECT_TRUE(s.factors.empty());
    }
    const auto one = specialize(closed_series(1), mpq_class(3), mpq_class(1, 2));
    EXPECT_EQ(one.numerator, LaurentPoly::constant(2, 1));
    EXPECT_THROW(specialize(closed_series(2), mpq_class(1), mpq_class(0)), algebra_error);
    EXPECT_THROW(specialize(closed_series(2), std::nullopt, mpq_class(1)), algebra_error);
}

TEST(Kunneth, Examples)
{
    EXPECT_TRUE(same_rational_function(kunneth_series({3}), closed_series(3)));
    const auto ones = kunneth_series({1, 1}).reduced();
    EXPECT_EQ(ones.numerator, LaurentPoly::constant(3, 1));
    EXPECT_TRUE(ones.factors.empty());
    EXPECT_EQ(coefficient(kunneth_series({2, 2}), md(0, {0, 0, 0, 0})), 1);
    EXPECT_THROW(kunneth_series({}), algebra_error);
}

TEST(Kunneth, MatchesBlockProducts)
{
    const auto rep = kunneth_spot_check({2, 2}, 30, 7);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.cases, 30u);
    const auto s = kunneth_series({1, 2});
    for (const auto &mu : multidegree_box(3, 4, 2)) {
        EXPECT_EQ(coefficient(s, mu), mpq_class(static_cast<long>(hilbert_function_blocks({1, 2}, mu))));
    }
}
