#ifndef HHCI_CORE_MONOMIAL_HPP
#define HHCI_CORE_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>

#include <hhci/core/index_set.hpp>

namespace hhci
{

// An n-tuple of integers, n <= 16. Used both for exponents of monomials
// (nonnegative) and for internal degrees (arbitrary sign).
class ExponentVector
{
public:
    ExponentVector() = default;
    explicit ExponentVector(int n) : m_size(n)
    {
        check_nvars(n);
    }
    ExponentVector(std::initializer_list<int> values) : m_size(static_cast<int>(values.size()))
    {
        check_nvars(m_size);
        std::copy(values.begin(), values.end(), m_data.begin());
    }
    static ExponentVector filled(int n, int value)
    {
        ExponentVector v(n);
        std::fill_n(v.m_data.begin(), n, value);
        return v;
    }
    // The 0/1 vector of a subset.
    static ExponentVector indicator(int n, IndexSet set)
    {
        ExponentVector v(n);
        set.for_each([&](int i) { v[i - 1] = 1; });
        return v;
    }
    static ExponentVector from_span(std::span<const int> values)
    {
        ExponentVector v(static_cast<int>(values.size()));
        std::copy(values.begin(), values.end(), v.m_data.begin());
        return v;
    }

    int size() const noexcept
    {
        return m_size;
    }
    int &operator[](int i) noexcept
    {
        return m_data[static_cast<std::size_t>(i)];
    }
    int operator[](int i) const noexcept
    {
        return m_data[static_cast<std::size_t>(i)];
    }
    std::span<const int> values() const noexcept
    {
        return {m_data.data(), static_cast<std::size_t>(m_size)};
    }

    bool nonnegative() const noexcept
    {
        return std::all_of(m_data.begin(), m_data.begin() + m_size, [](int x) { return x >= 0; });
    }
    int total() const noexcept
    {
        int s = 0;
        for (int i = 0; i < m_size; ++i) {
            s += m_data[static_cast<std::size_t>(i)];
        }
        return s;
    }

    friend ExponentVector operator+(const ExponentVector &a, const ExponentVector &b)
    {
        check_same(a, b);
        ExponentVector r(a.m_size);
        for (int i = 0; i < a.m_size; ++i) {
            r[i] = a[i] + b[i];
        }
        return r;
    }
    friend ExponentVector operator-(const ExponentVector &a, const ExponentVector &b)
    {
        check_same(a, b);
        ExponentVector r(a.m_size);
        for (int i = 0; i < a.m_size; ++i) {
            r[i] = a[i] - b[i];
        }
        return r;
    }

    friend bool operator==(const ExponentVector &a, const ExponentVector &b) noexcept
    {
        return a.m_size == b.m_size && std::equal(a.m_data.begin(), a.m_data.begin() + a.m_size, b.m_data.begin());
    }
    friend std::strong_ordering operator<=>(const ExponentVector &a, const ExponentVector &b) noexcept
    {
        if (auto c = a.m_size <=> b.m_size; c != 0) {
            return c;
        }
        return std::lexicographical_compare_three_way(a.m_data.begin(), a.m_data.begin() + a.m_size, b.m_data.begin(),
                                                      b.m_data.begin() + b.m_size);
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (int i = 0; i < m_size; ++i) {
            s += (i ? "," : "") + std::to_string(m_data[static_cast<std::size_t>(i)]);
        }
        return s + ")";
    }

private:
    static void check_same(const ExponentVector &a, const ExponentVector &b)
    {
        if (a.m_size != b.m_size) {
            throw algebra_error("exponent vectors of different lengths " + std::to_string(a.m_size) + " and "
                                + std::to_string(b.m_size));
        }
    }

    std::array<int, max_vars> m_data{};
    int m_size = 0;
};

// supp(x^a) = {i : a_i > 0}.
inline IndexSet support(const ExponentVector &a)
{
    std::uint32_t bits = 0;
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] > 0) {
            bits |= std::uint32_t{1} << i;
        }
    }
    return IndexSet::from_bits(bits);
}

// A monomial of A = k[x_1..x_n]/(x_1...x_n). The raw exponents are kept even
// when the coset is zero, so that exact division can happen before reduction.
class AMonomial
{
public:
    AMonomial() = default;
    explicit AMonomial(ExponentVector exponents) : m_exps(exponents)
    {
        if (!m_exps.nonnegative()) {
            throw algebra_error("monomial with negative exponent " + m_exps.to_string());
        }
        m_zero = support(m_exps) == IndexSet::full(m_exps.size());
    }
    static AMonomial one(int n)
    {
        return AMonomial(ExponentVector(n));
    }
    // x_1 ... x_n / x_i, or the product over a subset.
    static AMonomial product_of(int n, IndexSet set)
    {
        return AMonomial(ExponentVector::indicator(n, set));
    }

    const ExponentVector &exponents() const noexcept
    {
        return m_exps;
    }
    int nvars() const noexcept
    {
        return m_exps.size();
    }
    bool is_zero() const noexcept
    {
        return m_zero;
    }

    // Exact division by the square-free monomial x_S; nullopt if not divisible.
    std::optional<AMonomial> divide(IndexSet set) const
    {
        auto e = m_exps;
        bool ok = true;
        set.for_each([&](int i) {
            if (e[i - 1] < 1) {
                ok = false;
            } else {
                --e[i - 1];
            }
        });
        if (!ok) {
            return std::nullopt;
        }
        return AMonomial(e);
    }

    friend bool operator==(const AMonomial &a, const AMonomial &b) noexcept
    {
        return a.m_exps == b.m_exps;
    }
    friend std::strong_ordering operator<=>(const AMonomial &a, const AMonomial &b) noexcept
    {
        return a.m_exps <=> b.m_exps;
    }

    std::string to_string() const
    {
        if (m_zero) {
            return "0";
        }
        std::string s;
        for (int i = 0; i < m_exps.size(); ++i) {
            if (m_exps[i] == 0) {
                continue;
            }
            if (!s.empty()) {
                s += "*";
            }
            s += "x" + std::to_string(i + 1);
            if (m_exps[i] > 1) {
                s += "^" + std::to_string(m_exps[i]);
            }
        }
        return s.empty() ? "1" : s;
    }

private:
    ExponentVector m_exps;
    bool m_zero = false;
};

// Product in A; zero when either factor is zero or the summed support is full.
inline AMonomial monomial_mul(const AMonomial &a, const AMonomial &b)
{
    if (a.nvars() != b.nvars()) {
        throw algebra_error("monomial_mul: mismatched number of variables");
    }
    return AMonomial(a.exponents() + b.exponents());
}

// The (homological degree, internal degree) grading.
struct Multidegree {
    int hdeg = 0;
    ExponentVector rdeg;

    int nvars() const noexcept
    {
        return rdeg.size();
    }

    friend Multidegree operator+(const Multidegree &a, const Multidegree &b)
    {
        return {a.hdeg + b.hdeg, a.rdeg + b.rdeg};
    }
    friend bool operator==(const Multidegree &, const Multidegree &) = default;
    friend std::strong_ordering operator<=>(const Multidegree &a, const Multidegree &b)
    {
        if (auto c = a.hdeg <=> b.hdeg; c != 0) {
            return c;
        }
        return a.rdeg <=> b.rdeg;
    }

    std::string to_string() const
    {
        return "(" + std::to_string(hdeg) + "," + rdeg.to_string() + ")";
    }
};

// mdeg(e_I t^(q), x^a) = (|I| + 2q, a - eps_I - q(1,...,1)).
inline Multidegree mdeg(IndexSet set, int q, const ExponentVector &alpha)
{
    if (!alpha.nonnegative()) {
        throw algebra_error("mdeg: negative exponent in " + alpha.to_string());
    }
    const int n = alpha.size();
    Multidegree m{set.size() + 2 * q, ExponentVector(n)};
    for (int i = 0; i < n; ++i) {
        m.rdeg[i] = alpha[i] - (set.contains(i + 1) ? 1 : 0) - q;
    }
    return m;
}

} // namespace hhci

#endif
