#ifndef HHCI_CHAIN_MAP_HPP
#define HHCI_CHAIN_MAP_HPP

#include <string>
#include <vector>

#include <hhci/cochain.hpp>
#include <hhci/resolution.hpp>

namespace hhci
{

// Whether lift() recomputes every value with the triple-sum formula and
// throws on disagreement.
enum class LiftCheck { none, cross_check };

// x_i | f(e_I t^(q)) for every i in I, i.e. the fraction f(x) / x_S in the
// chain map is integral for every S contained in I.
inline bool divisibility_check(const Cochain &f, const BasisSymbol &sym)
{
    const auto value = f.value_at(sym);
    for (const auto &[m, c] : value.terms()) {
        if (!m.divide(sym.set)) {
            return false;
        }
    }
    return true;
}

namespace detail
{

inline void check_lift_degrees(int fdeg, int j, const BasisSymbol &x)
{
    if (j < 0) {
        throw algebra_error("lift: negative stage");
    }
    if (x.degree() != fdeg + j) {
        throw algebra_error("lift: symbol " + x.to_string() + " is not in degree " + std::to_string(fdeg + j));
    }
}

inline AMonomial exact_quotient(const AMonomial &m, IndexSet set)
{
    auto q = m.divide(set);
    if (!q) {
        throw algebra_error("lift: " + m.to_string() + " is not divisible by x_" + set.to_string()
                            + " (input is not a cocycle)");
    }
    return *q;
}

// The summand for one N of the set-indexed lift formula of a standard cochain.
inline ResolutionElement lift_standard(const StandardCochain &f, const BasisSymbol &x)
{
    const int n = f.nvars();
    const auto big_k = f.set();
    const int v = f.q();
    const auto big_i = x.set;
    const int m = big_i.size();
    ResolutionElement out(n);
    for_each_subset(big_i & big_k, [&](IndexSet small_n) {
        const int tpow = x.q - v - big_k.size() + small_n.size();
        if (tpow < 0) {
            return;
        }
        const auto k_minus_n = big_k - small_n;
        const auto i_minus_n = big_i - small_n;
        const int s_n = k_minus_n.size();
        int sign = (m * s_n) % 2 == 0 ? 1 : -1;
        sign *= sgn_sets(i_minus_n, small_n) * sgn_sets(small_n, k_minus_n);
        const auto fraction = exact_quotient(f.value(), k_minus_n);
        const auto coeff = TensorCoefficient::pure(fraction, AMonomial::one(n), sign);
        const auto e_part = ResolutionElement::basis(n, BasisSymbol{i_minus_n, 0}, coeff);
        out += wedge_product(u_wedge(n, k_minus_n), e_part).with_t_power(tpow);
    });
    return out;
}

} // namespace detail

// The triple-sum form of the lift: a sum over (u, J, L) with |J| + |L| + 2u = j,
// J a set of positions in I and L a subset of [n]. Works for any cochain f
// whose relevant values are divisible by x_L.
inline ResolutionElement lift_triple_sum(const Cochain &f, int j, const BasisSymbol &x)
{
    detail::check_lift_degrees(f.hdeg(), j, x);
    const int n = f.nvars();
    const auto big_i = x.set;
    const int m = big_i.size();
    ResolutionElement out(n);
    for (int u = 0; 2 * u <= j; ++u) {
        const int rs = j - 2 * u;
        for_each_subset(big_i, [&](IndexSet picked) {
            const int r = picked.size();
            const int s = rs - r;
            if (s < 0 || s > n) {
                return;
            }
            const int inner_q = x.q - u - s;
            if (inner_q < 0) {
                return;
            }
            // j_1 + ... + j_r: positions of the picked members inside I.
            int position_sum = 0;
            picked.for_each([&](int i) { position_sum += big_i.count_below(i) + 1; });
            int base_sign = (m * s + position_sum - r) % 2 == 0 ? 1 : -1;
            // e_{i_{j_r}} ^ ... ^ e_{i_{j_1}} is the reversal of e_J.
            if ((r * (r - 1) / 2) % 2 != 0) {
                base_sign = -base_sign;
            }
            const auto rest = big_i - picked;
            for_each_subset(IndexSet::full(n), [&](IndexSet ell) {
                if (ell.size() != s || !rest.disjoint(ell)) {
                    return;
                }
                const int sign = base_sign * sgn_sets(rest, ell);
                const auto value = f.value_at(BasisSymbol{rest | ell, inner_q});
                if (value.is_zero()) {
                    return;
                }
                const auto u_part = u_wedge(n, ell);
                if (u_part.is_zero()) {
                    return;
                }
                TensorCoefficient coeff(n);
                for (const auto &[mono, c] : value.terms()) {
                    coeff.add(detail::exact_quotient(mono, ell), AMonomial::one(n), c * sign);
                }
                const auto e_part = ResolutionElement::basis(n, BasisSymbol{picked, 0}, coeff);
                out += wedge_product(u_part, e_part).with_t_power(u);
            });
        });
    }
    return out;
}

// The chain map f~_j evaluated on a basis symbol of degree deg(f) + j.
// Stage 0 is f(x) (x) 1 for any cochain; later stages require a cocycle.
inline ResolutionElement lift(const Cochain &f, int j, const BasisSymbol &x, LiftCheck check = LiftCheck::none)
{
    detail::check_lift_degrees(f.hdeg(), j, x);
    const int n = f.nvars();
    ResolutionElement out(n);
    for (const auto &[s, c] : f.terms()) {
        if (j >= 1 && !is_cocycle(s)) {
            throw algebra_error("lift: " + s.to_string() + " is not a cocycle");
        }
        out += detail::lift_standard(s, x).scaled(c);
    }
    if (check == LiftCheck::cross_check) {
        const auto other = lift_triple_sum(f, j, x);
        if (!(other == out)) {
            throw algebra_error("lift: set-indexed and triple-sum forms disagree on " + x.to_string() + ": "
                                + out.to_string() + " vs " + other.to_string());
        }
    }
    return out;
}

// A^e-linear extension of lift to arbitrary elements of F_{deg(f)+j}.
inline ResolutionElement lift(const Cochain &f, int j, const ResolutionElement &x, LiftCheck check = LiftCheck::none)
{
    ResolutionElement out(x.nvars());
    for (const auto &[sym, c] : x.terms()) {
        out += scalar_action(c, lift(f, j, sym, check));
    }
    return out;
}

struct SquareFailure {
    int stage = 0;
    BasisSymbol symbol;
    std::string lhs;
    std::string rhs;
};

struct SquareReport {
    std::size_t checked = 0;
    std::vector<SquareFailure> failures;

    bool ok() const noexcept
    {
        return failures.empty();
    }
};

// Checks eps o f~_0 = f on degree-i symbols and d o f~_j = f~_{j-1} o d on
// degree-(i+j) symbols for 1 <= j <= j_max.
inline SquareReport verify_squares(const Cochain &f, int j_max, LiftCheck check = LiftCheck::none)
{
    SquareReport report;
    const int n = f.nvars();
    const int i = f.hdeg();
    for_each_basis_symbol(n, i, [&](const BasisSymbol &sym) {
        ++report.checked;
        const auto lhs = augmentation(lift(f, 0, sym, check));
        const auto rhs = f.value_at(sym);
        if (!(lhs == rhs)) {
            report.failures.push_back({0, sym, lhs.to_string(), rhs.to_string()});
        }
    });
    for (int j = 1; j <= j_max; ++j) {
        for_each_basis_symbol(n, i + j, [&](const BasisSymbol &sym) {
            ++report.checked;
            const auto lhs = d(lift(f, j, sym, check));
            const auto rhs = lift(f, j - 1, d(ResolutionElement::basis(n, sym)), check);
            if (!(lhs == rhs)) {
                report.failures.push_back({j, sym, lhs.to_string(), rhs.to_string()});
            }
        });
    }
    return report;
}

// The Yoneda product f u g = g o f~_j with j = deg(g).
inline Cochain yoneda(const Cochain &f, const Cochain &g, LiftCheck check = LiftCheck::none)
{
    if (f.nvars() != g.nvars()) {
        throw algebra_error("yoneda: mismatched number of variables");
    }
    for (const auto *c : {&f, &g}) {
        for (const auto &[s, coeff] : c->terms()) {
            if (!is_cocycle(s)) {
                throw algebra_error("yoneda: " + s.to_string() + " is not a cocycle");
            }
        }
    }
    const int n = f.nvars();
    const int j = g.hdeg();
    return cochain_from_values(n, f.hdeg() + j, [&](const BasisSymbol &sym) { return evaluate(g, lift(f, j, sym, check)); });
}

} // namespace hhci

#endif
