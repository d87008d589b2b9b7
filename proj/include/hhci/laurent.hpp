#ifndef HHCI_LAURENT_HPP
#define HHCI_LAURENT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <hhci/core/scalar.hpp>

namespace hhci
{

using Exponents = std::vector<int>;

// Laurent polynomial with rational coefficients in a fixed number of variables.
class LaurentPoly
{
public:
    using terms_type = std::map<Exponents, mpq_class>;

    explicit LaurentPoly(std::size_t nvars = 0) : m_nvars(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const mpq_class &c)
    {
        LaurentPoly p(nvars);
        p.add(Exponents(nvars, 0), c);
        return p;
    }
    static LaurentPoly monomial(const Exponents &e, const mpq_class &c = 1)
    {
        LaurentPoly p(e.size());
        p.add(e, c);
        return p;
    }
    static LaurentPoly variable(std::size_t nvars, std::size_t i)
    {
        Exponents e(nvars, 0);
        e[i] = 1;
        return monomial(e);
    }

    std::size_t nvars() const noexcept
    {
        return m_nvars;
    }
    const terms_type &terms() const noexcept
    {
        return m_terms;
    }
    bool is_zero() const noexcept
    {
        return m_terms.empty();
    }

    void add(const Exponents &e, const mpq_class &c)
    {
        if (e.size() != m_nvars) {
            throw algebra_error("LaurentPoly: exponent length mismatch");
        }
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    LaurentPoly &operator+=(const LaurentPoly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add(e, c);
        }
        return *this;
    }
    LaurentPoly &operator-=(const LaurentPoly &o)
    {
        for (const auto &[e, c] : o.m_terms) {
            add(e, -c);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        a += b;
        return a;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        a -= b;
        return a;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
    {
        LaurentPoly out(a.m_nvars);
        for (const auto &[e, c] : a.m_terms) {
            for (const auto &[f, d] : b.m_terms) {
                out.add(plus(e, f), c * d);
            }
        }
        return out;
    }
    LaurentPoly scaled(const mpq_class &s) const
    {
        LaurentPoly out(m_nvars);
        for (const auto &[e, c] : m_terms) {
            out.add(e, c * s);
        }
        return out;
    }
    LaurentPoly shifted(const Exponents &by) const
    {
        LaurentPoly out(m_nvars);
        for (const auto &[e, c] : m_terms) {
            out.add(plus(e, by), c);
        }
        return out;
    }
    LaurentPoly pow(int k) const
    {
        auto out = constant(m_nvars, 1);
        for (int i = 0; i < k; ++i) {
            out = out * *this;
        }
        return out;
    }
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.m_terms == b.m_terms;
    }

    // Componentwise minimum exponent (zero vector for the zero polynomial).
    Exponents min_exponents() const
    {
        Exponents lo(m_nvars, 0);
        bool first = true;
        for (const auto &[e, c] : m_terms) {
            for (std::size_t i = 0; i < m_nvars; ++i) {
                lo[i] = first ? e[i] : std::min(lo[i], e[i]);
            }
            first = false;
        }
        return lo;
    }

    // Replaces variable i by the rational value v.
    LaurentPoly substitute(std::size_t i, const mpq_class &v) const
    {
        LaurentPoly out(m_nvars);
        for (const auto &[e, c] : m_terms) {
            if (v == 0 && e[i] < 0) {
                throw algebra_error("substitution of 0 into a negative power");
            }
            auto f = e;
            f[i] = 0;
            out.add(f, c * power(v, e[i]));
        }
        return out;
    }

    // Maps every exponent vector through fn (e.g. to merge variables).
    template <typename Fn>
    LaurentPoly remap(std::size_t nvars, Fn fn) const
    {
        LaurentPoly out(nvars);
        for (const auto &[e, c] : m_terms) {
            out.add(fn(e), c);
        }
        return out;
    }

    // The quotient when g divides this in the Laurent ring.
    std::optional<LaurentPoly> exact_divide(const LaurentPoly &g) const
    {
        if (g.is_zero()) {
            throw algebra_error("LaurentPoly: division by zero");
        }
        const auto glo = g.min_exponents();
        const auto nlo = min_exponents();
        auto rem = shifted(negate(nlo));
        const auto div = g.shifted(negate(glo));
        const auto &[lead_e, lead_c] = *div.m_terms.rbegin();
        LaurentPoly quot(m_nvars);
        while (!rem.is_zero()) {
            const auto [e, c] = *rem.m_terms.rbegin();
            Exponents t(m_nvars);
            for (std::size_t i = 0; i < m_nvars; ++i) {
                t[i] = e[i] - lead_e[i];
                if (t[i] < 0) {
                    return std::nullopt;
                }
            }
            const mpq_class k = c / lead_c;
            quot.add(t, k);
            rem -= div.shifted(t).scaled(k);
        }
        Exponents back(m_nvars);
        for (std::size_t i = 0; i < m_nvars; ++i) {
            back[i] = nlo[i] - glo[i];
        }
        return quot.shifted(back);
    }

    // Terms in decreasing lexicographic exponent order.
    std::string to_string(const std::vector<std::string> &names) const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            const auto &[e, c] = *it;
            const bool neg = c < 0;
            const mpq_class mag = neg ? mpq_class(-c) : c;
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            for (std::size_t i = 0; i < m_nvars; ++i) {
                if (e[i] == 0) {
                    continue;
                }
                if (!mono.empty()) {
                    mono += "*";
                }
                mono += names[i];
                if (e[i] != 1) {
                    mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
                }
            }
            if (mono.empty()) {
                s += mag.get_str();
            } else {
                s += (mag == 1 ? "" : mag.get_str() + "*") + mono;
            }
        }
        return s;
    }

    static mpq_class power(const mpq_class &v, int k)
    {
        mpq_class out = 1;
        const mpq_class base = k < 0 ? mpq_class(1 / v) : v;
        for (int i = 0; i < std::abs(k); ++i) {
            out *= base;
        }
        return out;
    }

private:
    static Exponents plus(const Exponents &a, const Exponents &b)
    {
        Exponents out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = a[i] + b[i];
        }
        return out;
    }
    static Exponents negate(Exponents a)
    {
        for (auto &v : a) {
            v = -v;
        }
        return a;
    }

    std::size_t m_nvars;
    terms_type m_terms;
};

} // namespace hhci

#endif
