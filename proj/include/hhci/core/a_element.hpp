#ifndef HHCI_CORE_A_ELEMENT_HPP
#define HHCI_CORE_A_ELEMENT_HPP

#include <map>
#include <string>

#include <hhci/core/monomial.hpp>
#include <hhci/core/scalar.hpp>

namespace hhci
{

// A finite linear combination of nonzero monomials of A.
class AElement
{
public:
    using terms_type = std::map<AMonomial, Scalar>;

    AElement() = default;
    explicit AElement(int n) : m_n(n) {}

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

    // Adds c * m; zero monomials and zero scalars are dropped.
    void add(const AMonomial &m, const Scalar &c)
    {
        if (m.is_zero() || c.is_zero()) {
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
    AElement &operator+=(const AElement &o)
    {
        for (const auto &[m, c] : o.m_terms) {
            add(m, c);
        }
        return *this;
    }
    friend AElement operator*(const AElement &a, const AElement &b)
    {
        AElement r(a.m_n);
        for (const auto &[ma, ca] : a.m_terms) {
            for (const auto &[mb, cb] : b.m_terms) {
                r.add(monomial_mul(ma, mb), ca * cb);
            }
        }
        return r;
    }
    friend bool operator==(const AElement &a, const AElement &b)
    {
        return a.m_terms == b.m_terms;
    }

    std::string to_string() const
    {
        if (m_terms.empty()) {
            return "0";
        }
        std::string s;
        for (const auto &[m, c] : m_terms) {
            if (!s.empty()) {
                s += " + ";
            }
            s += c.to_string() + "*" + m.to_string();
        }
        return s;
    }

private:
    int m_n = 0;
    terms_type m_terms;
};

} // namespace hhci

#endif
