#ifndef HHCI_COCHAIN_HPP
#define HHCI_COCHAIN_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hhci/core/a_element.hpp>
#include <hhci/core/index_set.hpp>
#include <hhci/core/monomial.hpp>
#include <hhci/core/scalar.hpp>
#include <hhci/linalg.hpp>
#include <hhci/resolution.hpp>

namespace hhci
{

// The standard cochain (e_I t^(q), x^alpha): sends e_I t^(q) to x^alpha and
// every other basis symbol to zero.
//
// Canonical order is by I (lexicographic on member lists), then q, then alpha.
class StandardCochain
{
public:
    StandardCochain() = default;
    StandardCochain(IndexSet set, int q, ExponentVector alpha) : m_set(set), m_q(q), m_alpha(alpha)
    {
        if (q < 0) {
            throw algebra_error("standard cochain with negative t-power");
        }
        if (!alpha.nonnegative()) {
            throw algebra_error("standard cochain with negative exponent " + alpha.to_string());
        }
        if (set.max_member() > alpha.size()) {
            throw algebra_error("standard cochain index set " + set.to_string() + " exceeds n = "
                                + std::to_string(alpha.size()));
        }
        if (AMonomial(alpha).is_zero()) {
            throw algebra_error("monomial " + alpha.to_string() + " is zero in A");
        }
    }

    IndexSet set() const noexcept
    {
        return m_set;
    }
    int q() const noexcept
    {
        return m_q;
    }
    const ExponentVector &alpha() const noexcept
    {
        return m_alpha;
    }
    int nvars() const noexcept
    {
        return m_alpha.size();
    }
    int hdeg() const noexcept
    {
        return m_set.size() + 2 * m_q;
    }
    BasisSymbol symbol() const noexcept
    {
        return {m_set, m_q};
    }
    AMonomial value() const
    {
        return AMonomial(m_alpha);
    }
    Multidegree multidegree() const
    {
        return mdeg(m_set, m_q, m_alpha);
    }

    friend bool operator==(const StandardCochain &, const StandardCochain &) = default;
    friend std::strong_ordering operator<=>(const StandardCochain &a, const StandardCochain &b)
    {
        if (auto c = a.m_set <=> b.m_set; c != 0) {
            return c;
        }
        if (auto c = a.m_q <=> b.m_q; c != 0) {
            return c;
        }
        return a.m_alpha <=> b.m_alpha;
    }

    std::string to_string() const
    {
        std::string s = "(";
        s += m_set.empty() ? "" : "e" + m_set.to_string();
        if (m_q > 0) {
            s += "t^" + std::to_string(m_q);
        }
        if (m_set.empty() && m_q == 0) {
            s += "1";
        }
        return s + ", " + AMonomial(m_alpha).to_string() + ")";
    }

private:
    IndexSet m_set;
    int m_q = 0;
    ExponentVector m_alpha;
};

// A finite linear combination of standard cochains of one homological degree.
class Cochain
{
public:
    using terms_type = std::map<StandardCochain, Scalar>;

    Cochain() = default;
    Cochain(int n, int hdeg) : m_n(n), m_hdeg(hdeg) {}
    Cochain(const StandardCochain &s, const Scalar &c = 1) : m_n(s.nvars()), m_hdeg(s.hdeg())
    {
        add(s, c);
    }

    int nvars() const noexcept
    {
        return m_n;
    }
    int hdeg() const noexcept
    {
        return m_hdeg;
    }
    const terms_type &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }
    Scalar coefficient(const StandardCochain &s) const
    {
        auto it = m_terms.find(s);
        return it == m_terms.end() ? Scalar(0) : it->second;
    }

    void add(const StandardCochain &s, const Scalar &c)
    {
        if (s.hdeg() != m_hdeg || s.nvars() != m_n) {
            throw algebra_error("cochain of degree " + std::to_string(m_hdeg) + " cannot hold " + s.to_string());
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    Cochain &operator+=(const Cochain &o)
    {
        if (m_terms.empty() && m_n == 0) {
            m_n = o.m_n;
            m_hdeg = o.m_hdeg;
        }
        for (const auto &[s, c] : o.m_terms) {
            add(s, c);
        }
        return *this;
    }
    friend Cochain operator+(Cochain a, const Cochain &b)
    {
        a += b;
        return a;
    }
    friend Cochain operator-(Cochain a, const Cochain &b)
    {
        a += b.scaled(-1);
        return a;
    }
    Cochain scaled(const Scalar &s) const
    {
        Cochain r(m_n, m_hdeg);
        for (const auto &[t, c] : m_terms) {
            r.add(t, c * s);
        }
        return r;
    }

    // The value on one basis symbol.
    AElement value_at(const BasisSymbol &sym) const
    {
        AElement r(m_n);
        for (const auto &[s, c] : m_terms) {
            if (s.symbol() == sym) {
                r.add(s.value(), c);
            }
        }
        return r;
    }

    // The multidegrees of the terms (a homogeneous cochain has at most one).
    std::vector<Multidegree> multidegrees() const
    {
        std::vector<Multidegree> out;
        for (const auto &[s, c] : m_terms) {
            auto m = s.multidegree();
            if (std::find(out.begin(), out.end(), m) == out.end()) {
                out.push_back(m);
            }
        }
        return out;
    }

    friend bool operator==(const Cochain &a, const Cochain &b)
    {
        return a.m_terms == b.m_terms;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[t, c] : m_terms) {
            if (!s.empty()) {
                s += " + ";
            }
            s += (c.is_one() ? "" : c.to_string() + "*") + t.to_string();
        }
        return s;
    }

private:
    int m_n = 0;
    int m_hdeg = 0;
    terms_type m_terms;
};

// x_1...x_n / x_i as an exponent vector.
inline ExponentVector complement_product(int n, int i)
{
    auto e = ExponentVector::filled(n, 1);
    e[i - 1] = 0;
    return e;
}

// The coboundary:
// d(e_I t^(q), x^a) = sum_{i in I \ supp(a)} sgn(i, I) (e_{I\i} t^(q+1), x^a x_1..^x_i..x_n).
inline Cochain partial(const StandardCochain &s)
{
    const int n = s.nvars();
    Cochain r(n, s.hdeg() + 1);
    const auto candidates = s.set() - support(s.alpha());
    candidates.for_each([&](int i) {
        r.add(StandardCochain(s.set().without(i), s.q() + 1, s.alpha() + complement_product(n, i)), sgn_index(i, s.set()));
    });
    return r;
}

inline Cochain partial(const Cochain &c)
{
    Cochain r(c.nvars(), c.hdeg() + 1);
    for (const auto &[s, coeff] : c.terms()) {
        r += partial(s).scaled(coeff);
    }
    return r;
}

// Standard cocycles are exactly those with I contained in supp(alpha).
inline bool is_cocycle(const StandardCochain &s)
{
    return s.set().subset_of(support(s.alpha()));
}

// The unique standard element whose coboundary has s as a component, if any:
// requires q > 0 and supp(alpha) = [n] \ {i} for some i outside I.
inline std::optional<StandardCochain> image_preimage(const StandardCochain &s)
{
    if (s.q() == 0) {
        return std::nullopt;
    }
    const int n = s.nvars();
    const auto missing = IndexSet::full(n) - support(s.alpha());
    if (missing.size() != 1 || s.set().contains(missing.max_member())) {
        return std::nullopt;
    }
    const int i = missing.max_member();
    return StandardCochain(s.set().with(i), s.q() - 1, s.alpha() - complement_product(n, i));
}

inline bool is_image_component(const StandardCochain &s)
{
    return image_preimage(s).has_value();
}

// All standard elements of a multidegree, in canonical order.
inline std::vector<StandardCochain> enumerate_standard(const Multidegree &mu)
{
    std::vector<StandardCochain> out;
    const int n = mu.nvars();
    if (mu.hdeg < 0) {
        return out;
    }
    for_each_subset(IndexSet::full(n), [&](IndexSet set) {
        const int rest = mu.hdeg - set.size();
        if (rest < 0 || rest % 2 != 0) {
            return;
        }
        const int q = rest / 2;
        ExponentVector alpha(n);
        for (int i = 0; i < n; ++i) {
            alpha[i] = mu.rdeg[i] + (set.contains(i + 1) ? 1 : 0) + q;
            if (alpha[i] < 0) {
                return;
            }
        }
        if (AMonomial(alpha).is_zero()) {
            return;
        }
        out.emplace_back(set, q, alpha);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Gamma: the standard elements that are not a component of any coboundary.
inline std::vector<StandardCochain> gamma_elements(const Multidegree &mu)
{
    auto all = enumerate_standard(mu);
    std::erase_if(all, [](const StandardCochain &s) { return is_image_component(s); });
    return all;
}

// The two-term complex M_gamma: gamma -> (+/-) targets.
struct Subcomplex {
    StandardCochain source;
    std::vector<std::pair<StandardCochain, int>> targets;
};

inline Subcomplex subcomplex(const StandardCochain &gamma)
{
    if (is_image_component(gamma)) {
        throw algebra_error(gamma.to_string() + " is an image component, not an element of Gamma");
    }
    Subcomplex m{gamma, {}};
    const auto image = partial(gamma);
    for (const auto &[t, c] : image.terms()) {
        m.targets.emplace_back(t, c == Scalar(1) ? 1 : -1);
    }
    return m;
}

// dim H at mu = #cocycles at mu - #non-cocycles at (hdeg - 1, rdeg).
inline std::size_t cohomology_dim(const Multidegree &mu)
{
    const auto here = enumerate_standard(mu);
    const auto below = enumerate_standard(Multidegree{mu.hdeg - 1, mu.rdeg});
    const auto cocycles = static_cast<std::size_t>(std::count_if(here.begin(), here.end(), is_cocycle));
    const auto killers = static_cast<std::size_t>(std::count_if(below.begin(), below.end(), [](const auto &s) {
        return !is_cocycle(s);
    }));
    return cocycles - killers;
}

// One representative per basis class at mu: every standard cocycle except the
// smallest target of each non-cocycle one degree below (a sole target is a
// coboundary; with several targets the smallest is eliminated by the relation).
inline std::vector<StandardCochain> cohomology_basis(const Multidegree &mu)
{
    std::vector<StandardCochain> out;
    for (const auto &s : enumerate_standard(mu)) {
        if (!is_cocycle(s)) {
            continue;
        }
        if (auto pre = image_preimage(s)) {
            const auto targets = partial(*pre);
            if (targets.terms().begin()->first == s) {
                continue;
            }
        }
        out.push_back(s);
    }
    return out;
}

// Coordinates of a cohomology class with respect to cohomology_basis(mu).
struct ClassCoordinates {
    std::optional<Multidegree> multidegree;
    std::map<StandardCochain, Scalar> coords;

    bool is_zero() const noexcept
    {
        return coords.empty();
    }
    friend bool operator==(const ClassCoordinates &a, const ClassCoordinates &b)
    {
        return a.coords == b.coords;
    }
    std::string to_string() const
    {
        if (coords.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[t, c] : coords) {
            if (!s.empty()) {
                s += " + ";
            }
            s += (c.is_one() ? "" : c.to_string() + "*") + t.to_string();
        }
        return s;
    }
};

// Rewrites a homogeneous cocycle in the basis of its multidegree.
inline ClassCoordinates reduce(const Cochain &c)
{
    ClassCoordinates out;
    const auto degrees = c.multidegrees();
    if (degrees.size() > 1) {
        throw algebra_error("reduce: cochain " + c.to_string() + " mixes multidegrees");
    }
    if (!degrees.empty()) {
        out.multidegree = degrees.front();
    }
    auto accumulate = [&](const StandardCochain &s, const Scalar &v) {
        if (v.is_zero()) {
            return;
        }
        auto [it, inserted] = out.coords.try_emplace(s, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) {
                out.coords.erase(it);
            }
        }
    };
    for (const auto &[s, coeff] : c.terms()) {
        if (!is_cocycle(s)) {
            throw algebra_error("reduce: " + s.to_string() + " is not a cocycle");
        }
        const auto pre = image_preimage(s);
        if (!pre) {
            accumulate(s, coeff);
            continue;
        }
        const auto relation = partial(*pre);
        const auto &[smallest, smallest_sign] = *relation.terms().begin();
        if (smallest != s) {
            accumulate(s, coeff);
            continue;
        }
        // smallest = -(1/sign) * sum of the other targets.
        const auto factor = -coeff / smallest_sign;
        for (const auto &[t, sign] : relation.terms()) {
            if (t != s) {
                accumulate(t, factor * sign);
            }
        }
    }
    return out;
}

// (a (x) b) . v = abv; evaluates a cochain on an element of the resolution.
inline AElement evaluate(const Cochain &f, const ResolutionElement &x)
{
    AElement r(x.nvars());
    for (const auto &[sym, coeff] : x.terms()) {
        const auto v = f.value_at(sym);
        if (v.is_zero()) {
            continue;
        }
        r += coeff.multiply_out() * v;
    }
    return r;
}

// Collects the values of a degree-h map on all degree-h basis symbols into a cochain.
template <typename ValueFn>
Cochain cochain_from_values(int n, int hdeg, ValueFn &&value_of)
{
    Cochain r(n, hdeg);
    for_each_basis_symbol(n, hdeg, [&](const BasisSymbol &sym) {
        const AElement v = value_of(sym);
        for (const auto &[m, c] : v.terms()) {
            r.add(StandardCochain(sym.set, sym.q, m.exponents()), c);
        }
    });
    return r;
}

// The coboundary computed through the resolution: (f o d)(x) on every basis symbol.
inline Cochain partial_via_resolution(const Cochain &f)
{
    const int n = f.nvars();
    return cochain_from_values(n, f.hdeg() + 1, [&](const BasisSymbol &sym) {
        return evaluate(f, d(ResolutionElement::basis(n, sym)));
    });
}

// Cached differentials d(e_I t^(q)) for every basis symbol of F up to a degree.
class DifferentialTable
{
public:
    DifferentialTable(int n, int max_degree) : m_n(n)
    {
        for (int m = 1; m <= max_degree; ++m) {
            for_each_basis_symbol(n, m, [&](const BasisSymbol &sym) {
                m_table.emplace(sym, d(ResolutionElement::basis(n, sym)));
            });
        }
    }
    int nvars() const noexcept
    {
        return m_n;
    }
    const ResolutionElement &of(const BasisSymbol &sym) const
    {
        auto it = m_table.find(sym);
        if (it == m_table.end()) {
            throw algebra_error("DifferentialTable: symbol " + sym.to_string() + " outside the cached range");
        }
        return it->second;
    }

private:
    int m_n;
    std::map<BasisSymbol, ResolutionElement> m_table;
};

// The matrix of the coboundary from multidegree (h, r) to (h + 1, r), with
// entries computed from the resolution differential rather than the closed formula.
inline SparseMatrix coboundary_matrix(const DifferentialTable &table, const std::vector<StandardCochain> &domain,
                                      const std::vector<StandardCochain> &codomain, const Field &field)
{
    SparseMatrix m(codomain.size(), domain.size(), field);
    std::map<StandardCochain, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) {
        row_of.emplace(codomain[r], r);
    }
    std::map<BasisSymbol, std::vector<std::size_t>> rows_by_symbol;
    for (std::size_t r = 0; r < codomain.size(); ++r) {
        rows_by_symbol[codomain[r].symbol()].push_back(r);
    }
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const auto &f = domain[col];
        const auto fval = f.value();
        for (const auto &[sym, rows] : rows_by_symbol) {
            const auto &dsym = table.of(sym);
            auto it = dsym.terms().find(f.symbol());
            if (it == dsym.terms().end()) {
                continue;
            }
            for (const auto &[k, c] : it->second.terms()) {
                const auto target = monomial_mul(monomial_mul(k.first, k.second), fval);
                if (target.is_zero()) {
                    continue;
                }
                auto rit = row_of.find(StandardCochain(sym.set, sym.q, target.exponents()));
                if (rit == row_of.end()) {
                    throw algebra_error("coboundary_matrix: image leaves the multidegree");
                }
                m.add(rit->second, col, c);
            }
        }
    }
    return m;
}

// Cohomology dimension at mu from ranks of the coboundary matrices.
inline std::size_t elimination_dim(const DifferentialTable &table, const Multidegree &mu, const Field &field = {})
{
    const auto below = enumerate_standard(Multidegree{mu.hdeg - 1, mu.rdeg});
    const auto here = enumerate_standard(mu);
    const auto above = enumerate_standard(Multidegree{mu.hdeg + 1, mu.rdeg});
    const auto out_rank = coboundary_matrix(table, here, above, field).rank();
    const auto in_rank = below.empty() ? 0 : coboundary_matrix(table, below, here, field).rank();
    return here.size() - out_rank - in_rank;
}

// True when the kernel of the coboundary at mu, computed by elimination, is
// spanned exactly by the standard cocycles (each basis vector a unit vector
// at a cocycle, and every cocycle appearing).
inline bool kernel_is_standard_cocycles(const DifferentialTable &table, const Multidegree &mu, const Field &field = {})
{
    const auto here = enumerate_standard(mu);
    const auto above = enumerate_standard(Multidegree{mu.hdeg + 1, mu.rdeg});
    const auto kernel = coboundary_matrix(table, here, above, field).nullspace();
    std::vector<StandardCochain> found;
    for (const auto &v : kernel) {
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) {
                ++nonzero;
                where = i;
            }
        }
        if (nonzero != 1 || !is_cocycle(here[where])) {
            return false;
        }
        found.push_back(here[where]);
    }
    return found.size() == static_cast<std::size_t>(std::count_if(here.begin(), here.end(), is_cocycle));
}

} // namespace hhci

#endif
