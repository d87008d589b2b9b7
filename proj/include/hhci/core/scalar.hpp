#ifndef HHCI_CORE_SCALAR_HPP
#define HHCI_CORE_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace hhci
{

// Thrown for every violated precondition on algebraic input.
class algebra_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// An element of the coefficient field: either an exact rational number
// (modulus 0) or a residue modulo a prime p.
//
// Values built from plain integers are rational; combining a rational with
// a residue mod p reduces the rational into GF(p). Two residues must share
// the same modulus.
class Scalar
{
public:
    Scalar() = default;
    Scalar(long v) : m_q(v) {}
    explicit Scalar(mpq_class q) : m_q(std::move(q))
    {
        m_q.canonicalize();
    }

    static Scalar residue(std::int64_t v, std::uint32_t p)
    {
        Scalar s;
        s.m_p = p;
        auto r = v % static_cast<std::int64_t>(p);
        if (r < 0) {
            r += p;
        }
        s.m_r = static_cast<std::uint64_t>(r);
        return s;
    }

    std::uint32_t modulus() const noexcept
    {
        return m_p;
    }
    bool is_zero() const noexcept
    {
        return m_p == 0 ? sgn(m_q) == 0 : m_r == 0;
    }
    bool is_one() const noexcept
    {
        return m_p == 0 ? m_q == 1 : m_r == 1;
    }
    const mpq_class &rational() const
    {
        if (m_p != 0) {
            throw algebra_error("scalar is a residue, not a rational");
        }
        return m_q;
    }
    std::uint64_t residue_value() const noexcept
    {
        return m_r;
    }

    // Reduce into GF(p); p == 0 leaves the value unchanged.
    Scalar in_field(std::uint32_t p) const
    {
        if (p == m_p) {
            return *this;
        }
        if (m_p != 0) {
            throw algebra_error("cannot move a residue mod " + std::to_string(m_p) + " into another field");
        }
        const auto num = reduce(m_q.get_num(), p);
        const auto den = reduce(m_q.get_den(), p);
        if (den == 0) {
            throw algebra_error("denominator of " + m_q.get_str() + " vanishes mod " + std::to_string(p));
        }
        Scalar s;
        s.m_p = p;
        s.m_r = num * inverse_mod(den, p) % p;
        return s;
    }

    Scalar operator-() const
    {
        Scalar s = *this;
        if (m_p == 0) {
            s.m_q = -m_q;
        } else {
            s.m_r = m_r == 0 ? 0 : m_p - m_r;
        }
        return s;
    }

    friend Scalar operator+(const Scalar &a, const Scalar &b)
    {
        return combine(a, b, [](auto x, auto y, std::uint32_t p) { return p == 0 ? 0 : (x + y) % p; },
                       [](const mpq_class &x, const mpq_class &y) { return mpq_class(x + y); });
    }
    friend Scalar operator-(const Scalar &a, const Scalar &b)
    {
        return a + (-b);
    }
    friend Scalar operator*(const Scalar &a, const Scalar &b)
    {
        return combine(a, b, [](auto x, auto y, std::uint32_t p) { return p == 0 ? 0 : (x * y) % p; },
                       [](const mpq_class &x, const mpq_class &y) { return mpq_class(x * y); });
    }
    friend Scalar operator/(const Scalar &a, const Scalar &b)
    {
        return a * b.inverse();
    }
    Scalar &operator+=(const Scalar &o)
    {
        return *this = *this + o;
    }
    Scalar &operator-=(const Scalar &o)
    {
        return *this = *this - o;
    }
    Scalar &operator*=(const Scalar &o)
    {
        return *this = *this * o;
    }

    Scalar inverse() const
    {
        if (is_zero()) {
            throw algebra_error("division by zero scalar");
        }
        Scalar s = *this;
        if (m_p == 0) {
            s.m_q = 1 / m_q;
        } else {
            s.m_r = inverse_mod(m_r, m_p);
        }
        return s;
    }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        if (a.m_p == b.m_p) {
            return a.m_p == 0 ? a.m_q == b.m_q : a.m_r == b.m_r;
        }
        return (a - b).is_zero();
    }

    std::string to_string() const
    {
        return m_p == 0 ? m_q.get_str() : std::to_string(m_r);
    }
    friend std::ostream &operator<<(std::ostream &os, const Scalar &s)
    {
        return os << s.to_string();
    }

private:
    static std::uint64_t reduce(const mpz_class &z, std::uint32_t p)
    {
        mpz_class r = z % p;
        if (r < 0) {
            r += p;
        }
        return r.get_ui();
    }

    static std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p)
    {
        // Fermat; p is prime.
        std::uint64_t result = 1, base = a % p, e = p - 2;
        while (e != 0) {
            if (e & 1u) {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

    template <typename ModOp, typename QOp>
    static Scalar combine(const Scalar &a, const Scalar &b, ModOp mod_op, QOp q_op)
    {
        if (a.m_p == 0 && b.m_p == 0) {
            return Scalar(q_op(a.m_q, b.m_q));
        }
        const auto p = a.m_p != 0 ? a.m_p : b.m_p;
        const auto x = a.in_field(p), y = b.in_field(p);
        Scalar s;
        s.m_p = p;
        s.m_r = mod_op(x.m_r, y.m_r, p);
        return s;
    }

    mpq_class m_q{0};
    std::uint64_t m_r = 0;
    std::uint32_t m_p = 0;
};

// The session coefficient field: Q (prime == 0) or GF(prime).
struct Field {
    std::uint32_t prime = 0;

    Scalar make(long v) const
    {
        return prime == 0 ? Scalar(v) : Scalar::residue(v, prime);
    }
    Scalar make(const Scalar &s) const
    {
        return s.in_field(prime);
    }
    std::string name() const
    {
        return prime == 0 ? "q" : "fp:" + std::to_string(prime);
    }

    // Accepts "q" or "fp:<prime>".
    static Field parse(const std::string &text)
    {
        if (text == "q" || text == "Q") {
            return {};
        }
        if (text.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoull(text.substr(3), &used);
                if (used != text.size() - 3) {
                    throw algebra_error("bad prime");
                }
            } catch (const std::exception &) {
                throw algebra_error("malformed field '" + text + "'");
            }
            if (p < 2 || p >= (1ull << 31) || !is_prime(p)) {
                throw algebra_error("field modulus " + std::to_string(p) + " is not a prime below 2^31");
            }
            return {static_cast<std::uint32_t>(p)};
        }
        throw algebra_error("unknown field '" + text + "' (expected q or fp:<prime>)");
    }

    static bool is_prime(std::uint64_t p)
    {
        if (p < 2) {
            return false;
        }
        for (std::uint64_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Field &, const Field &) = default;
};

} // namespace hhci

#endif
