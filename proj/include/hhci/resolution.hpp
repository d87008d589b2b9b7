#ifndef HHCI_RESOLUTION_HPP
#define HHCI_RESOLUTION_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <hhci/core/a_element.hpp>
#include <hhci/core/index_set.hpp>
#include <hhci/core/monomial.hpp>
#include <hhci/core/scalar.hpp>

namespace hhci
{

// An element of A^e = A (x) A, as a combination of pure tensors of nonzero
// monomials. Reduction modulo x_1...x_n happens eagerly on both legs.
class TensorCoefficient
{
public:
    using key_type = std::pair<AMonomial, AMonomial>;
    using terms_type = std::map<key_type, Scalar>;

    TensorCoefficient() = default;
    explicit TensorCoefficient(int n) : m_n(n) {}

    // c * (left (x) right).
    static TensorCoefficient pure(const AMonomial &left, const AMonomial &right, const Scalar &c = 1)
    {
        TensorCoefficient t(left.nvars());
        t.add(left, right, c);
        return t;
    }
    static TensorCoefficient one(int n)
    {
        return pure(AMonomial::one(n), AMonomial::one(n));
    }

    int nvars() const noexcept
    {
        return m_n;
    }
    const terms_type &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    void add(const AMonomial &left, const AMonomial &right, const Scalar &c)
    {
        if (left.is_zero() || right.is_zero() || c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(key_type{left, right}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    TensorCoefficient &operator+=(const TensorCoefficient &o)
    {
        for (const auto &[k, c] : o.m_terms) {
            add(k.first, k.second, c);
        }
        return *this;
    }
    TensorCoefficient scaled(const Scalar &s) const
    {
        TensorCoefficient r(m_n);
        for (const auto &[k, c] : m_terms) {
            r.add(k.first, k.second, c * s);
        }
        return r;
    }
    friend TensorCoefficient operator*(const TensorCoefficient &a, const TensorCoefficient &b)
    {
        TensorCoefficient r(a.m_n);
        for (const auto &[ka, ca] : a.m_terms) {
            for (const auto &[kb, cb] : b.m_terms) {
                r.add(monomial_mul(ka.first, kb.first), monomial_mul(ka.second, kb.second), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const TensorCoefficient &a, const TensorCoefficient &b)
    {
        return a.m_terms == b.m_terms;
    }

    // The multiplication map a (x) b -> ab.
    AElement multiply_out() const
    {
        AElement r(m_n);
        for (const auto &[k, c] : m_terms) {
            r.add(monomial_mul(k.first, k.second), c);
        }
        return r;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[k, c] : m_terms) {
            if (!s.empty()) {
                s += " + ";
            }
            s += c.to_string() + "*(" + k.first.to_string() + "|" + k.second.to_string() + ")";
        }
        return s;
    }

private:
    int m_n = 0;
    terms_type m_terms;
};

// The free generator e_I t^(q) of F_{|I| + 2q}.
struct BasisSymbol {
    IndexSet set;
    int q = 0;

    int degree() const noexcept
    {
        return set.size() + 2 * q;
    }
    friend bool operator==(const BasisSymbol &, const BasisSymbol &) = default;
    friend std::strong_ordering operator<=>(const BasisSymbol &a, const BasisSymbol &b)
    {
        if (auto c = a.q <=> b.q; c != 0) {
            return c;
        }
        return a.set <=> b.set;
    }
    std::string to_string() const
    {
        std::string s = "e" + set.to_string();
        if (q > 0) {
            s += "t^" + std::to_string(q);
        }
        return s;
    }
};

// e_i ^ (e_I t^(q)): zero when i is in I, otherwise sgn(i, I) e_{I u i} t^(q).
inline std::optional<std::pair<int, BasisSymbol>> wedge(const BasisSymbol &e, int i)
{
    check_index(i);
    if (e.set.contains(i)) {
        return std::nullopt;
    }
    return std::pair{sgn_index(i, e.set), BasisSymbol{e.set.with(i), e.q}};
}

// Calls f(symbol) for every basis symbol of F_m over n variables.
template <typename F>
void for_each_basis_symbol(int n, int m, F &&f)
{
    for (int q = 0; 2 * q <= m; ++q) {
        const int s = m - 2 * q;
        if (s > n) {
            continue;
        }
        for_each_subset(IndexSet::full(n), [&](IndexSet set) {
            if (set.size() == s) {
                f(BasisSymbol{set, q});
            }
        });
    }
}

// An element of the free A^e-module F_m.
class ResolutionElement
{
public:
    using terms_type = std::map<BasisSymbol, TensorCoefficient>;

    ResolutionElement() = default;
    explicit ResolutionElement(int n) : m_n(n) {}

    static ResolutionElement basis(int n, const BasisSymbol &sym, const TensorCoefficient &c)
    {
        ResolutionElement r(n);
        r.add(sym, c);
        return r;
    }
    static ResolutionElement basis(int n, const BasisSymbol &sym)
    {
        return basis(n, sym, TensorCoefficient::one(n));
    }
    // 1 (x) 1 on e_empty.
    static ResolutionElement identity(int n)
    {
        return basis(n, BasisSymbol{});
    }

    int nvars() const noexcept
    {
        return m_n;
    }
    const terms_type &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    // Homological degree, or nullopt for the zero element.
    std::optional<int> degree() const
    {
        if (m_terms.empty()) {
            return std::nullopt;
        }
        return m_terms.begin()->first.degree();
    }

    void add(const BasisSymbol &sym, const TensorCoefficient &c)
    {
        if (c.is_zero()) {
            return;
        }
        if (!m_terms.empty() && m_terms.begin()->first.degree() != sym.degree()) {
            throw algebra_error("resolution element mixes degrees " + std::to_string(m_terms.begin()->first.degree())
                                + " and " + std::to_string(sym.degree()));
        }
        auto [it, inserted] = m_terms.try_emplace(sym, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    ResolutionElement &operator+=(const ResolutionElement &o)
    {
        for (const auto &[s, c] : o.m_terms) {
            add(s, c);
        }
        return *this;
    }
    friend ResolutionElement operator+(ResolutionElement a, const ResolutionElement &b)
    {
        a += b;
        return a;
    }
    ResolutionElement scaled(const Scalar &s) const
    {
        ResolutionElement r(m_n);
        for (const auto &[sym, c] : m_terms) {
            r.add(sym, c.scaled(s));
        }
        return r;
    }
    // Multiplies every divided power t^(q) by t^(shift) without binomial factors;
    // only meaningful on elements with q = 0.
    ResolutionElement with_t_power(int shift) const
    {
        ResolutionElement r(m_n);
        for (const auto &[sym, c] : m_terms) {
            r.add(BasisSymbol{sym.set, sym.q + shift}, c);
        }
        return r;
    }

    friend bool operator==(const ResolutionElement &a, const ResolutionElement &b)
    {
        return a.m_terms == b.m_terms;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[sym, c] : m_terms) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "[" + c.to_string() + "]" + sym.to_string();
        }
        return s;
    }

private:
    int m_n = 0;
    terms_type m_terms;
};

// The A^e-module action c * x.
inline ResolutionElement scalar_action(const TensorCoefficient &c, const ResolutionElement &x)
{
    if (c.nvars() != x.nvars()) {
        throw algebra_error("scalar_action: mismatched number of variables");
    }
    ResolutionElement r(x.nvars());
    for (const auto &[sym, coeff] : x.terms()) {
        r.add(sym, c * coeff);
    }
    return r;
}

// X_j = x_1...x_{j-1} (x) x_{j+1}...x_n.
inline TensorCoefficient split_monomial(int n, int j)
{
    const auto below = IndexSet::full(n) & IndexSet::from_bits((std::uint32_t{1} << (j - 1)) - 1);
    const auto above = IndexSet::full(n) - below - IndexSet{j};
    return TensorCoefficient::pure(AMonomial::product_of(n, below), AMonomial::product_of(n, above));
}

namespace detail
{

inline ResolutionElement differential_of_symbol(int n, const BasisSymbol &sym)
{
    ResolutionElement r(n);
    // Koszul part: sum_j (-1)^{j-1} (1 (x) x_{i_j} - x_{i_j} (x) 1) e_{I \ i_j} t^(q).
    int position = 0;
    sym.set.for_each([&](int i) {
        const Scalar sign = position % 2 == 0 ? 1 : -1;
        ++position;
        const auto xi = AMonomial::product_of(n, IndexSet{i});
        TensorCoefficient c(n);
        c.add(AMonomial::one(n), xi, sign);
        c.add(xi, AMonomial::one(n), -sign);
        r.add(BasisSymbol{sym.set.without(i), sym.q}, c);
    });
    // d_2(t) . e_I t^(q-1), with e_j moved into position by the wedge sign.
    if (sym.q >= 1) {
        for (int j = 1; j <= n; ++j) {
            if (auto w = wedge(BasisSymbol{sym.set, sym.q - 1}, j)) {
                r.add(w->second, split_monomial(n, j).scaled(w->first));
            }
        }
    }
    return r;
}

} // namespace detail

// The differential d of the resolution F.
inline ResolutionElement d(const ResolutionElement &x)
{
    const auto deg = x.degree();
    if (deg && *deg == 0) {
        throw algebra_error("d: element of degree 0 has no differential");
    }
    const int n = x.nvars();
    ResolutionElement r(n);
    for (const auto &[sym, c] : x.terms()) {
        r += scalar_action(c, detail::differential_of_symbol(n, sym));
    }
    return r;
}

// The augmentation F_0 -> A, a (x) b -> ab.
inline AElement augmentation(const ResolutionElement &x)
{
    AElement r(x.nvars());
    for (const auto &[sym, c] : x.terms()) {
        if (sym.degree() != 0) {
            throw algebra_error("augmentation: element is not in degree 0");
        }
        r += c.multiply_out();
    }
    return r;
}

// U_z = sum_{j > z} X_j e_j; U_n = 0.
inline ResolutionElement u_element(int n, int z)
{
    check_nvars(n);
    if (z < 1 || z > n) {
        throw algebra_error("u_element: index " + std::to_string(z) + " outside 1.." + std::to_string(n));
    }
    ResolutionElement r(n);
    for (int j = z + 1; j <= n; ++j) {
        r.add(BasisSymbol{IndexSet{j}, 0}, split_monomial(n, j));
    }
    return r;
}

// Exterior product of two elements without t-part.
inline ResolutionElement wedge_product(const ResolutionElement &a, const ResolutionElement &b)
{
    if (a.nvars() != b.nvars()) {
        throw algebra_error("wedge_product: mismatched number of variables");
    }
    ResolutionElement r(a.nvars());
    for (const auto &[sa, ca] : a.terms()) {
        for (const auto &[sb, cb] : b.terms()) {
            if (sa.q != 0 || sb.q != 0) {
                throw algebra_error("wedge_product: operands must not involve t");
            }
            if (!sa.set.disjoint(sb.set)) {
                continue;
            }
            r.add(BasisSymbol{sa.set | sb.set, 0}, (ca * cb).scaled(sgn_sets(sa.set, sb.set)));
        }
    }
    return r;
}

// U_M = U_{i_r} ^ ... ^ U_{i_1} for M = {i_1 < ... < i_r}; U_empty is the identity.
inline ResolutionElement u_wedge(int n, IndexSet set)
{
    auto r = ResolutionElement::identity(n);
    set.for_each([&](int z) { r = wedge_product(u_element(n, z), r); });
    return r;
}

} // namespace hhci

#endif
