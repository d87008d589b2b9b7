#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace hhci;
using namespace testing_helpers;

namespace
{

const IndexSet e1 = IndexSet::from_members({1});
const IndexSet e2 = IndexSet::from_members({2});
const IndexSet e12 = IndexSet::from_members({1, 2});

GCPolynomial X(int n, int i)
{
    return GCPolynomial(GCMonomial::x(n, i));
}
GCPolynomial Y(int n, int i)
{
    return GCPolynomial(GCMonomial::y(n, i));
}
GCPolynomial Z(int n)
{
    return GCPolynomial(GCMonomial::z(n));
}

int koszul(const StandardCochain &f, const StandardCochain &g)
{
    return (f.set().size() * g.set().size()) % 2 == 0 ? 1 : -1;
}

} // namespace

TEST(Cup, Examples)
{
    EXPECT_EQ(cup(Cochain(sc(e1, 0, {1, 0, 0})), Cochain(sc(e2, 0, {0, 1, 0}))), Cochain(sc(e12, 0, {1, 1, 0})));
    EXPECT_TRUE(cup(Cochain(sc(e1, 0, {1, 0})), Cochain(sc(e1, 0, {1, 0}))).is_zero());
    EXPECT_TRUE(cup(Cochain(sc(e1, 0, {1, 0})), Cochain(sc(e2, 0, {0, 1}))).is_zero());
    EXPECT_THROW(cup(Cochain(sc(e1, 0, {0, 1})), Cochain(sc(e2, 0, {0, 1}))), algebra_error);
}

// Chain-level oracle: the closed form is f o g~, and g o f~ differs by the
// Koszul sign.
TEST(Cup, MatchesCompositionOfLifts)
{
    for (int n = 1; n <= 3; ++n) {
        const auto fs = cocycles_in_box(n, 3, 1);
        for (const auto &f : fs) {
            for (const auto &g : fs) {
                const auto closed = cup(Cochain(f), Cochain(g));
                EXPECT_EQ(closed, yoneda(Cochain(g), Cochain(f))) << f.to_string() << " " << g.to_string();
                EXPECT_EQ(closed.scaled(koszul(f, g)), yoneda(Cochain(f), Cochain(g)))
                    << f.to_string() << " " << g.to_string();
            }
        }
    }
}

TEST(Cup, GradedCommutativeAssociativeUnital)
{
    for (int n = 1; n <= 3; ++n) {
        const auto cs = cocycles_in_box(n, 3, 1);
        const Cochain unit(unit_cochain(n));
        for (const auto &a : cs) {
            const Cochain ca(a);
            EXPECT_EQ(cup(unit, ca), ca);
            EXPECT_EQ(cup(ca, unit), ca);
            for (const auto &b : cs) {
                const Cochain cb(b);
                EXPECT_EQ(cup(ca, cb), cup(cb, ca).scaled(koszul(a, b)));
                for (const auto &c : cs) {
                    EXPECT_EQ(cup(cup(ca, cb), Cochain(c)), cup(ca, cup(cb, Cochain(c))));
                }
            }
        }
    }
}

TEST(GCMonomial, KoszulSignAndDegrees)
{
    const auto [s, m] = gc_mul(GCMonomial::y(2, 2), GCMonomial::y(2, 1));
    EXPECT_EQ(s, -1);
    EXPECT_EQ(m.to_string(), "Y1*Y2");
    EXPECT_EQ(Y(2, 2) * Y(2, 1), Y(2, 1) * Y(2, 2) * GCPolynomial(GCMonomial(2), -1));
    EXPECT_EQ(GCMonomial::z(2).multidegree(), (Multidegree{2, ExponentVector{-1, -1}}));
    EXPECT_EQ(GCMonomial::y(2, 1).multidegree(), (Multidegree{1, ExponentVector{0, 0}}));
    EXPECT_EQ(GCMonomial::x(2, 1).multidegree(), (Multidegree{0, ExponentVector{1, 0}}));
    EXPECT_EQ((X(3, 1) * Y(3, 2) * Y(3, 2) * Z(3)).to_string(), "X1*Y2^2*Z");
}

TEST(Factorize, Examples)
{
    auto word = [](std::initializer_list<int> x, std::initializer_list<int> y, int z) {
        return GCMonomial(ExponentVector(x), ExponentVector(y), z);
    };
    EXPECT_EQ(factorize(sc(e1, 0, {2, 0})), word({1, 0}, {1, 0}, 0));
    EXPECT_EQ(factorize(sc({}, 1, {0, 0})), GCMonomial::z(2));
    EXPECT_EQ(factorize(sc(e12, 1, {1, 1, 0})), word({0, 0, 0}, {1, 1, 0}, 1));
    EXPECT_THROW(factorize(sc(e1, 0, {0, 1})), algebra_error);
}

TEST(Factorize, ExpansionReproducesCocycle)
{
    for (int n = 1; n <= 3; ++n) {
        for (const auto &s : cocycles_in_box(n, 5, 2)) {
            const auto w = factorize(s);
            EXPECT_EQ(expand_word(w), Cochain(s)) << s.to_string();
            EXPECT_EQ(psi(w), s);
            EXPECT_EQ(psi_inverse(psi(w)), w);
        }
    }
}

TEST(Psi, Examples)
{
    EXPECT_EQ(psi(GCMonomial(ExponentVector{0, 0}, ExponentVector{1, 0}, 1)), sc(e1, 1, {1, 0}));
    EXPECT_EQ(psi(GCMonomial(ExponentVector{0, 3}, ExponentVector{0, 0}, 0)), sc({}, 0, {0, 3}));
    EXPECT_EQ(psi(GCMonomial(ExponentVector{1, 0}, ExponentVector{1, 0}, 0)), sc(e1, 0, {2, 0}));
    EXPECT_THROW(psi(GCMonomial(ExponentVector{1, 0}, ExponentVector{0, 1}, 0)), algebra_error);
    EXPECT_THROW(psi(GCMonomial(ExponentVector{0, 0}, ExponentVector{2, 0}, 0)), algebra_error);
}

TEST(BoundaryGenerator, Examples)
{
    EXPECT_EQ(boundary_generator(2, e12), Cochain(sc(e2, 1, {0, 1})) - Cochain(sc(e1, 1, {1, 0})));
    EXPECT_EQ(boundary_generator(2, e1), Cochain(sc({}, 1, {0, 1})));
    EXPECT_EQ(boundary_generator(2, e2), Cochain(sc({}, 1, {1, 0})));
    EXPECT_THROW(boundary_generator(2, IndexSet{}), algebra_error);
    for (int n = 1; n <= 4; ++n) {
        for_each_subset(IndexSet::full(n), [&](IndexSet s) {
            if (!s.empty()) {
                EXPECT_EQ(boundary_generator(n, s), partial(StandardCochain(s, 0, ExponentVector(n))));
            }
        });
    }
}

TEST(Presentation, TwoVariables)
{
    const auto p = presentation(2);
    std::vector<std::string> got;
    for (const auto &r : p.relations) {
        got.push_back(r.poly.to_string());
    }
    const std::vector<std::string> want{"X1*X2", "X1*Y2", "X2*Y1", "Y1*Y2", "Y1^2", "Y2^2", "X2*Z", "X1*Z", "Y2*Z - Y1*Z"};
    EXPECT_EQ(got, want);
    // (Y1+Y2)Z is not a relation: it is twice a nonzero class.
    EXPECT_FALSE(gc_normalize((Y(2, 1) + Y(2, 2)) * Z(2)).is_zero());
    EXPECT_TRUE(gc_normalize(Y(2, 1) * Z(2) - Y(2, 2) * Z(2)).is_zero());
}

TEST(Presentation, CountsAndSmallCases)
{
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(presentation(n).relations.size(), (std::size_t{1} << n) + n + (std::size_t{1} << n) - 1);
    }
    EXPECT_EQ(presentation(3).relations.size(), 18u);
    std::vector<std::string> one;
    for (const auto &r : presentation(1).relations) {
        one.push_back(r.poly.to_string());
    }
    EXPECT_EQ(one, (std::vector<std::string>{"X1", "Y1", "Y1^2", "Z"}));
    EXPECT_THROW(presentation(0), algebra_error);
}

TEST(Normalize, Examples)
{
    EXPECT_TRUE(gc_normalize(X(2, 1) * Z(2)).is_zero());
    for (int a = 1; a <= 4; ++a) {
        GCPolynomial w = X(2, 1);
        for (int k = 1; k < a; ++k) {
            w = w * X(2, 1);
        }
        const auto nf = gc_normalize(w);
        ASSERT_EQ(nf.coords.size(), 1u);
        EXPECT_EQ(nf.coords.begin()->first, sc({}, 0, {a, 0}));
    }
    EXPECT_THROW(gc_normalize(X(2, 1) + Z(2)), algebra_error);
}

TEST(Presentation, VerifiedPerMultidegree)
{
    for (int n = 1; n <= 3; ++n) {
        const auto p = presentation(n);
        for (const auto &mu : multidegree_box(n, n == 3 ? 4 : 5, n == 3 ? 2 : 3)) {
            const auto rep = verify_presentation_at(p, mu);
            EXPECT_TRUE(rep.ok()) << mu.to_string() << " " << (rep.ok() ? "" : rep.failures.front().inputs);
        }
    }
}

TEST(Presentation, OneVariableQuotientIsField)
{
    const auto p = presentation(1);
    for (const auto &mu : multidegree_box(1, 6, 4)) {
        const bool origin = mu.hdeg == 0 && mu.rdeg[0] == 0;
        EXPECT_EQ(presentation_dim(p, mu), origin ? 1u : 0u) << mu.to_string();
    }
}
