#ifndef HHCI_HILBERT_HPP
#define HHCI_HILBERT_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <hhci/cochain.hpp>
#include <hhci/laurent.hpp>

namespace hhci
{

// 1 - c * a^m in the denominator, expanded as sum_k c^k a^(km).
struct GeometricFactor {
    mpq_class c = 1;
    Exponents m;

    LaurentPoly poly() const
    {
        return LaurentPoly::constant(m.size(), 1) - LaurentPoly::monomial(m, c);
    }
    friend bool operator==(const GeometricFactor &, const GeometricFactor &) = default;
};

// numerator / (unit * prod factors), with an expansion fixed by the factors.
struct RationalSeries {
    std::vector<std::string> names;
    LaurentPoly numerator;
    Exponents unit;
    std::vector<GeometricFactor> factors;

    std::size_t nvars() const noexcept
    {
        return names.size();
    }
    LaurentPoly denominator() const
    {
        auto d = LaurentPoly::monomial(unit);
        for (const auto &f : factors) {
            d = d * f.poly();
        }
        return d;
    }
    // numerator * unit^-1, the series with the unit folded in.
    LaurentPoly scaled_numerator() const
    {
        Exponents inv(unit.size());
        for (std::size_t i = 0; i < unit.size(); ++i) {
            inv[i] = -unit[i];
        }
        return numerator.shifted(inv);
    }

    std::string to_string() const
    {
        return "(" + numerator.to_string(names) + ") / (" + denominator().to_string(names) + ")";
    }
    std::string factored_denominator() const
    {
        const bool trivial_unit = std::all_of(unit.begin(), unit.end(), [](int e) { return e == 0; });
        std::string s = trivial_unit && !factors.empty() ? "" : LaurentPoly::monomial(unit).to_string(names);
        for (const auto &f : factors) {
            s += (s.empty() ? "(" : " * (") + f.poly().to_string(names) + ")";
        }
        return s;
    }

    // Cancels every factor that divides the numerator; the unit is folded in.
    RationalSeries reduced() const
    {
        RationalSeries out{names, scaled_numerator(), Exponents(nvars(), 0), {}};
        for (const auto &f : factors) {
            if (auto q = out.numerator.exact_divide(f.poly())) {
                out.numerator = *q;
            } else {
                out.factors.push_back(f);
            }
        }
        return out;
    }
};

inline std::vector<std::string> series_names(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    return names;
}

namespace detail
{

inline LaurentPoly a_var(int n, int i)
{
    return LaurentPoly::variable(n + 1, i);
}

// 1 / ((1 - a0^2 (a1...an)^-1)(1 - a1)...(1 - an)).
inline std::vector<GeometricFactor> standard_factors(int n)
{
    std::vector<GeometricFactor> fs;
    Exponents lead(n + 1, -1);
    lead[0] = 2;
    fs.push_back({1, lead});
    for (int i = 1; i <= n; ++i) {
        Exponents e(n + 1, 0);
        e[i] = 1;
        fs.push_back({1, e});
    }
    return fs;
}

} // namespace detail

inline RationalSeries closed_series(int n)
{
    check_nvars(n);
    if (n < 1) {
        throw algebra_error("closed_series: need n >= 1");
    }
    const auto one = LaurentPoly::constant(n + 1, 1);
    const auto a0 = detail::a_var(n, 0);
    auto prod_a = one;
    auto prod_sum = one;
    for (int i = 1; i <= n; ++i) {
        prod_a = prod_a * detail::a_var(n, i);
        prod_sum = prod_sum * (a0 + detail::a_var(n, i));
    }
    auto num = (a0 + one).pow(n + 1) * prod_a - prod_sum * (a0 + prod_a);
    Exponents unit(n + 1, 1);
    unit[0] = 0;
    return {series_names(n), num, unit, detail::standard_factors(n)};
}

// Series of the standard cocycles.
inline RationalSeries h1(int n)
{
    check_nvars(n);
    const auto one = LaurentPoly::constant(n + 1, 1);
    const auto a0 = detail::a_var(n, 0);
    auto p = one;
    auto q = one;
    for (int i = 1; i <= n; ++i) {
        p = p * (a0 + one);
        q = q * (a0 + detail::a_var(n, i));
    }
    return {series_names(n), p - q, Exponents(n + 1, 0), detail::standard_factors(n)};
}

// Series of the coboundaries.
inline RationalSeries h2(int n)
{
    check_nvars(n);
    const auto one = LaurentPoly::constant(n + 1, 1);
    const auto a0 = detail::a_var(n, 0);
    auto p = one;
    auto q = one;
    for (int i = 1; i <= n; ++i) {
        Exponents inv(n + 1, 0);
        inv[0] = 1;
        inv[i] = -1;
        p = p * (LaurentPoly::monomial(inv) + one);
        q = q * (a0 + one);
    }
    return {series_names(n), a0 * (p - q), Exponents(n + 1, 0), detail::standard_factors(n)};
}

// a - b with the union of the denominators.
inline RationalSeries subtract(const RationalSeries &a, const RationalSeries &b)
{
    if (a.names != b.names) {
        throw algebra_error("subtract: series over different variables");
    }
    if (a.unit == b.unit && a.factors == b.factors) {
        return {a.names, a.numerator - b.numerator, a.unit, a.factors};
    }
    auto num = a.scaled_numerator();
    auto other = b.scaled_numerator();
    for (const auto &f : b.factors) {
        num = num * f.poly();
    }
    for (const auto &f : a.factors) {
        other = other * f.poly();
    }
    auto factors = a.factors;
    factors.insert(factors.end(), b.factors.begin(), b.factors.end());
    return {a.names, num - other, Exponents(a.nvars(), 0), factors};
}

// a == b as rational functions, by cross-multiplication.
inline bool same_rational_function(const RationalSeries &a, const RationalSeries &b)
{
    return a.numerator * b.denominator() == b.numerator * a.denominator();
}

// Coefficient of a^target in the expansion fixed by the factors: factors
// carrying a0 are enumerated, single-variable factors are counted per variable.
inline mpq_class series_coefficient(const RationalSeries &s, const Exponents &target)
{
    const std::size_t k = s.nvars();
    if (target.size() != k) {
        throw algebra_error("coefficient: exponent length mismatch");
    }
    std::vector<const GeometricFactor *> lead;
    std::vector<std::vector<std::pair<int, mpq_class>>> simple(k);
    for (const auto &f : s.factors) {
        if (f.m[0] > 0) {
            lead.push_back(&f);
            continue;
        }
        int var = -1;
        for (std::size_t i = 0; i < k; ++i) {
            if (f.m[i] < 0 || (f.m[i] > 0 && var >= 0)) {
                throw algebra_error("coefficient: non-expandable factor " + f.poly().to_string(s.names));
            }
            if (f.m[i] > 0) {
                var = static_cast<int>(i);
            }
        }
        if (var < 0) {
            throw algebra_error("coefficient: constant factor " + f.poly().to_string(s.names));
        }
        simple[var].emplace_back(f.m[var], f.c);
    }
    // Weighted number of ways to reach e with the simple factors on variable i.
    auto ways = [&](std::size_t i, int e) -> mpq_class {
        if (e < 0) {
            return 0;
        }
        std::vector<mpq_class> dp(e + 1, 0);
        dp[0] = 1;
        for (const auto &[step, c] : simple[i]) {
            for (int v = step; v <= e; ++v) {
                dp[v] += c * dp[v - step];
            }
        }
        return dp[e];
    };
    mpq_class total = 0;
    const auto num = s.scaled_numerator();
    for (const auto &[e, c] : num.terms()) {
        Exponents rest(k);
        for (std::size_t i = 0; i < k; ++i) {
            rest[i] = target[i] - e[i];
        }
        auto rec = [&](auto &&self, std::size_t idx, mpq_class weight) -> void {
            if (idx == lead.size()) {
                if (rest[0] != 0) {
                    return;
                }
                mpq_class w = weight;
                for (std::size_t i = 1; i < k && w != 0; ++i) {
                    w *= ways(i, rest[i]);
                }
                total += c * w;
                return;
            }
            const auto &f = *lead[idx];
            mpq_class pw = 1;
            int used = 0;
            while (true) {
                self(self, idx + 1, weight * pw);
                if (rest[0] < f.m[0]) {
                    break;
                }
                for (std::size_t i = 0; i < k; ++i) {
                    rest[i] -= f.m[i];
                }
                ++used;
                pw *= f.c;
            }
            for (std::size_t i = 0; i < k; ++i) {
                rest[i] += used * f.m[i];
            }
        };
        rec(rec, 0, 1);
    }
    return total;
}

inline mpq_class coefficient(const RationalSeries &s, const Multidegree &mu)
{
    Exponents target{mu.hdeg};
    for (int v : mu.rdeg.values()) {
        target.push_back(v);
    }
    return series_coefficient(s, target);
}

// dim HH at mu by enumeration, independent of the closed form.
inline std::size_t hilbert_function(int n, const Multidegree &mu)
{
    check_nvars(n);
    if (mu.rdeg.size() != n) {
        throw algebra_error("hilbert_function: rdeg length " + std::to_string(mu.rdeg.size()) + " for n = "
                            + std::to_string(n));
    }
    return cohomology_dim(mu);
}

// Product over disjoint blocks of variables with a shared a0.
inline RationalSeries kunneth_series(const std::vector<int> &blocks)
{
    if (blocks.empty()) {
        throw algebra_error("kunneth_series: empty factor list");
    }
    int total = 0;
    for (int b : blocks) {
        if (b < 1) {
            throw algebra_error("kunneth_series: empty block");
        }
        total += b;
    }
    check_nvars(total);
    const std::size_t k = total + 1;
    RationalSeries out{series_names(total), LaurentPoly::constant(k, 1), Exponents(k, 0), {}};
    int offset = 0;
    for (int b : blocks) {
        const auto s = closed_series(b);
        auto embed = [&](const Exponents &e) {
            Exponents f(k, 0);
            f[0] = e[0];
            for (int i = 1; i <= b; ++i) {
                f[offset + i] = e[i];
            }
            return f;
        };
        out.numerator = out.numerator * s.numerator.remap(k, embed);
        const auto u = embed(s.unit);
        for (std::size_t i = 0; i < k; ++i) {
            out.unit[i] += u[i];
        }
        for (const auto &f : s.factors) {
            out.factors.push_back({f.c, embed(f.m)});
        }
        offset += b;
    }
    return out;
}

// Sum over hdeg splits of the product of per-block dimensions.
inline std::size_t hilbert_function_blocks(const std::vector<int> &blocks, const Multidegree &mu)
{
    int total = 0;
    for (int b : blocks) {
        total += b;
    }
    if (mu.rdeg.size() != total) {
        throw algebra_error("hilbert_function: rdeg length does not match the blocks");
    }
    auto rec = [&](auto &&self, std::size_t idx, int offset, int hleft) -> std::size_t {
        const int b = blocks[idx];
        ExponentVector r(b);
        for (int i = 0; i < b; ++i) {
            r[i] = mu.rdeg[offset + i];
        }
        if (idx + 1 == blocks.size()) {
            return hilbert_function(b, Multidegree{hleft, r});
        }
        std::size_t sum = 0;
        for (int h = 0; h <= hleft; ++h) {
            const auto here = hilbert_function(b, Multidegree{h, r});
            if (here != 0) {
                sum += here * self(self, idx + 1, offset + b, hleft - h);
            }
        }
        return sum;
    };
    return rec(rec, 0, 0, mu.hdeg);
}

// Sends a0 to u and every a_i to v, then substitutes the given numeric values
// (u first). Factors that become constant are divided out.
inline RationalSeries specialize(const RationalSeries &s, std::optional<mpq_class> u, std::optional<mpq_class> v)
{
    auto merge = [](const Exponents &e) {
        Exponents f{e[0], 0};
        for (std::size_t i = 1; i < e.size(); ++i) {
            f[1] += e[i];
        }
        return f;
    };
    RationalSeries out{{"u", "v"}, s.scaled_numerator().remap(2, merge), Exponents{0, 0}, {}};
    for (const auto &f : s.factors) {
        out.factors.push_back({f.c, merge(f.m)});
    }
    out = out.reduced();
    auto plug = [&](std::size_t var, const mpq_class &value) {
        RationalSeries next{out.names, out.numerator.substitute(var, value), Exponents{0, 0}, {}};
        for (auto f : out.factors) {
            if (value == 0 && f.m[var] < 0) {
                throw algebra_error("non-expandable substitution: factor " + f.poly().to_string(out.names)
                                    + " has a negative power");
            }
            f.c *= LaurentPoly::power(value, f.m[var]);
            f.m[var] = 0;
            if (f.m == Exponents{0, 0}) {
                const mpq_class k = 1 - f.c;
                if (k == 0) {
                    throw algebra_error("non-expandable substitution: a denominator factor vanishes");
                }
                next.numerator = next.numerator.scaled(1 / k);
            } else if (f.c != 0) {
                next.factors.push_back(f);
            }
        }
        out = next.reduced();
    };
    if (u) {
        plug(0, *u);
    }
    if (v) {
        plug(1, *v);
    }
    return out;
}

} // namespace hhci

#endif
