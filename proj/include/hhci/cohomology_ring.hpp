#ifndef HHCI_COHOMOLOGY_RING_HPP
#define HHCI_COHOMOLOGY_RING_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <hhci/cochain.hpp>
#include <hhci/linalg.hpp>
#include <hhci/report.hpp>

namespace hhci
{

// Closed-form product sgn(I,J) (e_{I u J} t^(p+q), x^(alpha+beta)); empty when
// I and J meet or the monomial vanishes in A.
inline std::optional<std::pair<int, StandardCochain>> cup(const StandardCochain &f, const StandardCochain &g)
{
    if (f.nvars() != g.nvars()) {
        throw algebra_error("cup: mismatched number of variables");
    }
    for (const auto *s : {&f, &g}) {
        if (!is_cocycle(*s)) {
            throw algebra_error("cup: " + s->to_string() + " is not a cocycle");
        }
    }
    if (!f.set().disjoint(g.set())) {
        return std::nullopt;
    }
    const auto alpha = f.alpha() + g.alpha();
    if (AMonomial(alpha).is_zero()) {
        return std::nullopt;
    }
    return std::pair{sgn_sets(f.set(), g.set()), StandardCochain(f.set() | g.set(), f.q() + g.q(), alpha)};
}

inline Cochain cup(const Cochain &f, const Cochain &g)
{
    if (f.nvars() != g.nvars()) {
        throw algebra_error("cup: mismatched number of variables");
    }
    Cochain out(f.nvars(), f.hdeg() + g.hdeg());
    for (const auto &[s, a] : f.terms()) {
        for (const auto &[t, b] : g.terms()) {
            if (auto p = cup(s, t)) {
                out.add(p->second, a * b * p->first);
            }
        }
    }
    return out;
}

inline StandardCochain unit_cochain(int n)
{
    return StandardCochain({}, 0, ExponentVector(n));
}
inline StandardCochain x_generator(int n, int i)
{
    return StandardCochain({}, 0, ExponentVector::indicator(n, IndexSet{i}));
}
inline StandardCochain y_generator(int n, int i)
{
    return StandardCochain(IndexSet{i}, 0, ExponentVector::indicator(n, IndexSet{i}));
}
inline StandardCochain z_generator(int n)
{
    return StandardCochain({}, 1, ExponentVector(n));
}

// X^x Y^y Z^z in the graded-commutative ring S: Y's anticommute with each
// other for distinct indices; Y_i^2 is kept as a monomial.
struct GCMonomial {
    ExponentVector xexp;
    ExponentVector yexp;
    int zexp = 0;

    explicit GCMonomial(int n = 0) : xexp(n), yexp(n) {}
    GCMonomial(ExponentVector x, ExponentVector y, int z) : xexp(x), yexp(y), zexp(z)
    {
        if (x.size() != y.size() || !x.nonnegative() || !y.nonnegative() || z < 0) {
            throw algebra_error("GCMonomial: invalid exponents");
        }
    }

    static GCMonomial x(int n, int i)
    {
        GCMonomial m(n);
        m.xexp[i - 1] = 1;
        return m;
    }
    static GCMonomial y(int n, int i)
    {
        GCMonomial m(n);
        m.yexp[i - 1] = 1;
        return m;
    }
    static GCMonomial z(int n)
    {
        GCMonomial m(n);
        m.zexp = 1;
        return m;
    }

    int nvars() const noexcept
    {
        return xexp.size();
    }
    Multidegree multidegree() const
    {
        return Multidegree{yexp.total() + 2 * zexp, xexp - ExponentVector::filled(nvars(), zexp)};
    }
    IndexSet yset() const
    {
        return support(yexp);
    }
    // Lies in the monomial ideal J (repeated Y or full support).
    bool in_j() const
    {
        for (int v : yexp.values()) {
            if (v >= 2) {
                return true;
            }
        }
        return (support(xexp) | yset()) == IndexSet::full(nvars());
    }

    friend bool operator==(const GCMonomial &, const GCMonomial &) = default;
    friend std::strong_ordering operator<=>(const GCMonomial &a, const GCMonomial &b)
    {
        if (auto c = a.zexp <=> b.zexp; c != 0) {
            return c;
        }
        if (auto c = a.yexp <=> b.yexp; c != 0) {
            return c;
        }
        return a.xexp <=> b.xexp;
    }

    std::string to_string() const
    {
        std::string s;
        auto put = [&](char name, int index, int e) {
            if (e == 0) {
                return;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += name;
            if (index > 0) {
                s += std::to_string(index);
            }
            if (e > 1) {
                s += "^" + std::to_string(e);
            }
        };
        for (int i = 0; i < nvars(); ++i) {
            put('X', i + 1, xexp[i]);
        }
        for (int i = 0; i < nvars(); ++i) {
            put('Y', i + 1, yexp[i]);
        }
        put('Z', 0, zexp);
        return s.empty() ? "1" : s;
    }
};

// Sign and product of two monomials of S.
inline std::pair<int, GCMonomial> gc_mul(const GCMonomial &a, const GCMonomial &b)
{
    if (a.nvars() != b.nvars()) {
        throw algebra_error("gc_mul: mismatched number of variables");
    }
    const int n = a.nvars();
    int swaps = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = j + 1; i < n; ++i) {
            swaps += b.yexp[j] * a.yexp[i];
        }
    }
    return {swaps % 2 == 0 ? 1 : -1, GCMonomial(a.xexp + b.xexp, a.yexp + b.yexp, a.zexp + b.zexp)};
}

class GCPolynomial
{
public:
    using terms_type = std::map<GCMonomial, Scalar>;

    explicit GCPolynomial(int n = 0) : m_n(n) {}
    GCPolynomial(const GCMonomial &m, const Scalar &c = 1) : m_n(m.nvars())
    {
        add(m, c);
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
    void add(const GCMonomial &m, const Scalar &c)
    {
        if (m.nvars() != m_n) {
            throw algebra_error("GCPolynomial: mismatched number of variables");
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    GCPolynomial &operator+=(const GCPolynomial &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add(m, c);
        }
        return *this;
    }
    friend GCPolynomial operator+(GCPolynomial a, const GCPolynomial &b)
    {
        a += b;
        return a;
    }
    friend GCPolynomial operator-(GCPolynomial a, const GCPolynomial &b)
    {
        for (const auto &[m, c] : b.m_terms) {
            a.add(m, -c);
        }
        return a;
    }
    friend GCPolynomial operator*(const GCPolynomial &a, const GCPolynomial &b)
    {
        GCPolynomial out(a.m_n);
        for (const auto &[m, c] : a.m_terms) {
            for (const auto &[k, e] : b.m_terms) {
                auto [sign, p] = gc_mul(m, k);
                out.add(p, c * e * sign);
            }
        }
        return out;
    }
    friend bool operator==(const GCPolynomial &a, const GCPolynomial &b)
    {
        return a.m_terms == b.m_terms;
    }

    std::optional<Multidegree> multidegree() const
    {
        std::optional<Multidegree> mu;
        for (const auto &[m, c] : m_terms) {
            const auto here = m.multidegree();
            if (mu && !(*mu == here)) {
                throw algebra_error("GC polynomial " + to_string() + " is not homogeneous");
            }
            mu = here;
        }
        return mu;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[m, c] : m_terms) {
            const bool neg = c.modulus() == 0 && c.rational() < 0;
            const auto mag = neg ? -c : c;
            if (s.empty()) {
                s += neg ? "-" : "";
            } else {
                s += neg ? " - " : " + ";
            }
            s += (mag.is_one() ? "" : mag.to_string() + "*") + m.to_string();
        }
        return s;
    }

private:
    int m_n = 0;
    terms_type m_terms;
};

// psi(X^a Y^b Z^q) = (e_b t^(q), x^(a+b)) on monomials outside J.
inline StandardCochain psi(const GCMonomial &m)
{
    if (m.in_j()) {
        throw algebra_error("psi: " + m.to_string() + " lies in J");
    }
    return StandardCochain(m.yset(), m.zexp, m.xexp + m.yexp);
}

inline GCMonomial psi_inverse(const StandardCochain &s)
{
    if (!is_cocycle(s)) {
        throw algebra_error("psi_inverse: " + s.to_string() + " is not a cocycle");
    }
    const auto y = ExponentVector::indicator(s.nvars(), s.set());
    return GCMonomial(s.alpha() - y, y, s.q());
}

// X^(alpha - eps_I) Y_I Z^q.
inline GCMonomial factorize(const StandardCochain &s)
{
    if (!is_cocycle(s)) {
        throw algebra_error("factorize: " + s.to_string() + " is not a cocycle");
    }
    return psi_inverse(s);
}

// Cup-expands a word: X's, then Y's ascending, then Z's.
inline Cochain expand_word(const GCMonomial &m)
{
    const int n = m.nvars();
    Cochain acc(unit_cochain(n));
    // Generators are built lazily: X_1 is zero in A when n = 1.
    auto times = [&](auto make, int power) {
        for (int k = 0; k < power; ++k) {
            acc = cup(acc, Cochain(make()));
        }
    };
    for (int i = 1; i <= n; ++i) {
        times([&] { return x_generator(n, i); }, m.xexp[i - 1]);
    }
    for (int i = 1; i <= n; ++i) {
        times([&] { return y_generator(n, i); }, m.yexp[i - 1]);
    }
    times([&] { return z_generator(n); }, m.zexp);
    return acc;
}

// sum_j (-1)^(j+1) (e_{I - i_j} t, x_1...x_n / x_{i_j}).
inline Cochain boundary_generator(int n, IndexSet set)
{
    if (set.empty()) {
        throw algebra_error("boundary_generator: empty index set");
    }
    Cochain out(n, set.size() + 1);
    const auto members = set.members();
    for (std::size_t j = 0; j < members.size(); ++j) {
        const int i = members[j];
        out.add(StandardCochain(set.without(i), 1, complement_product(n, i)), j % 2 == 0 ? 1 : -1);
    }
    return out;
}

struct Relation {
    int family = 0;
    std::optional<IndexSet> set; // the index set of a third-family relation
    GCPolynomial poly;
};

struct Presentation {
    int n = 0;
    std::vector<Relation> relations;
};

inline Presentation presentation(int n)
{
    check_nvars(n);
    Presentation p{n, {}};
    // a_1...a_n with a_i in {X_i, Y_i}; the first index is the most significant.
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
        GCMonomial m(n);
        for (int i = 1; i <= n; ++i) {
            if ((code >> (n - i)) & 1u) {
                m.yexp[i - 1] = 1;
            } else {
                m.xexp[i - 1] = 1;
            }
        }
        p.relations.push_back({1, std::nullopt, GCPolynomial(m)});
    }
    for (int i = 1; i <= n; ++i) {
        GCMonomial m(n);
        m.yexp[i - 1] = 2;
        p.relations.push_back({2, std::nullopt, GCPolynomial(m)});
    }
    std::vector<IndexSet> sets;
    for_each_subset(IndexSet::full(n), [&](IndexSet s) {
        if (!s.empty()) {
            sets.push_back(s);
        }
    });
    std::stable_sort(sets.begin(), sets.end(), [](IndexSet a, IndexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto set : sets) {
        const auto members = set.members();
        GCPolynomial poly(n);
        for (std::size_t j = 0; j < members.size(); ++j) {
            const auto ys = set.without(members[j]);
            GCMonomial m(ExponentVector::indicator(n, IndexSet::full(n) - set), ExponentVector::indicator(n, ys), 1);
            poly.add(m, j % 2 == 0 ? 1 : -1);
        }
        p.relations.push_back({3, set, poly});
    }
    return p;
}

// psi extended linearly; monomials in J map to 0.
inline Cochain expand_relation(const GCPolynomial &w)
{
    const auto mu = w.multidegree();
    Cochain c(w.nvars(), mu ? mu->hdeg : 0);
    for (const auto &[m, coeff] : w.terms()) {
        if (!m.in_j()) {
            c.add(psi(m), coeff);
        }
    }
    return c;
}

// Coordinates of the image in HH* of a homogeneous element of S.
inline ClassCoordinates gc_normalize(const GCPolynomial &w)
{
    const auto mu = w.multidegree();
    auto out = reduce(expand_relation(w));
    out.multidegree = mu;
    return out;
}

// Monomials of S at mu, optionally only those with square-free Y part.
inline std::vector<GCMonomial> gc_monomials(int n, const Multidegree &mu, bool square_free_y = false)
{
    std::vector<GCMonomial> out;
    if (mu.hdeg < 0 || mu.rdeg.size() != n) {
        return out;
    }
    for (int z = 0; 2 * z <= mu.hdeg; ++z) {
        const auto x = mu.rdeg + ExponentVector::filled(n, z);
        if (!x.nonnegative()) {
            continue;
        }
        const int ydeg = mu.hdeg - 2 * z;
        ExponentVector y(n);
        // Compositions of ydeg into n parts.
        auto rec = [&](auto &&self, int i, int left) -> void {
            if (i == n - 1) {
                if (square_free_y && left > 1) {
                    return;
                }
                y[i] = left;
                out.emplace_back(x, y, z);
                return;
            }
            for (int v = 0; v <= (square_free_y ? std::min(left, 1) : left); ++v) {
                y[i] = v;
                self(self, i + 1, left - v);
            }
        };
        if (n > 0) {
            rec(rec, 0, ydeg);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Basis of S/J at mu.
inline std::vector<GCMonomial> quotient_basis(int n, const Multidegree &mu)
{
    auto all = gc_monomials(n, mu, true);
    std::erase_if(all, [](const GCMonomial &m) { return m.in_j(); });
    return all;
}

// dim (S/I)_mu by elimination over all monomial multiples of the relations.
inline std::size_t presentation_dim(const Presentation &p, const Multidegree &mu, const Field &field = {})
{
    const auto cols = gc_monomials(p.n, mu);
    std::map<GCMonomial, std::size_t> index;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        index.emplace(cols[i], i);
    }
    std::vector<GCPolynomial> rows;
    for (const auto &rel : p.relations) {
        const auto rho = rel.poly.multidegree();
        for (const auto &m : gc_monomials(p.n, Multidegree{mu.hdeg - rho->hdeg, mu.rdeg - rho->rdeg})) {
            rows.push_back(GCPolynomial(m) * rel.poly);
        }
    }
    SparseMatrix mat(rows.size(), cols.size(), field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto &[m, c] : rows[r].terms()) {
            mat.add(r, index.at(m), c);
        }
    }
    return cols.size() - mat.rank();
}

// Multidegrees with hdeg <= hdeg_max and every rdeg entry in [-rdeg_abs, rdeg_abs].
inline std::vector<Multidegree> multidegree_box(int n, int hdeg_max, int rdeg_abs)
{
    std::vector<Multidegree> out;
    const int side = 2 * rdeg_abs + 1;
    long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= side;
    }
    for (int h = 0; h <= hdeg_max; ++h) {
        for (long code = 0; code < count; ++code) {
            ExponentVector r(n);
            long c = code;
            for (int i = n - 1; i >= 0; --i) {
                r[i] = static_cast<int>(c % side) - rdeg_abs;
                c /= side;
            }
            out.push_back({h, r});
        }
    }
    return out;
}

// The psi bijection, relation membership and dimension checks at one multidegree.
inline Report verify_presentation_at(const Presentation &p, const Multidegree &mu, const Field &field = {})
{
    Report rep;
    rep.suite = "presentation";
    const auto label = "n=" + std::to_string(p.n) + " mu=" + mu.to_string();

    std::set<StandardCochain> images;
    for (const auto &m : quotient_basis(p.n, mu)) {
        const auto s = psi(m);
        rep.check(is_cocycle(s) && psi_inverse(s) == m && images.insert(s).second, label + " psi(" + m.to_string() + ")",
                  s.to_string(), "distinct standard cocycle with psi_inverse = " + m.to_string());
    }
    std::set<StandardCochain> cocycles;
    for (const auto &s : enumerate_standard(mu)) {
        if (is_cocycle(s)) {
            cocycles.insert(s);
        }
    }
    rep.check(images == cocycles, label + " psi onto cocycles", std::to_string(images.size()) + " images",
              std::to_string(cocycles.size()) + " cocycles");

    for (const auto &rel : p.relations) {
        const auto rho = rel.poly.multidegree();
        for (const auto &m : gc_monomials(p.n, Multidegree{mu.hdeg - rho->hdeg, mu.rdeg - rho->rdeg})) {
            const auto w = GCPolynomial(m) * rel.poly;
            const auto nf = gc_normalize(w);
            rep.check(nf.is_zero(), label + " " + m.to_string() + " * (" + rel.poly.to_string() + ")", nf.to_string(),
                      "0");
        }
    }

    const auto lhs = presentation_dim(p, mu, field);
    const auto rhs = cohomology_dim(mu);
    rep.check(lhs == rhs, label + " dim", std::to_string(lhs), std::to_string(rhs));
    return rep;
}

} // namespace hhci

#endif
