#ifndef HHCI_PARSE_HPP
#define HHCI_PARSE_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include <hhci/cochain.hpp>

namespace hhci
{

class parse_error : public algebra_error
{
public:
    parse_error(const std::string &what, std::size_t pos)
        : algebra_error(what + " at position " + std::to_string(pos)), m_pos(pos)
    {
    }
    std::size_t position() const noexcept
    {
        return m_pos;
    }

private:
    std::size_t m_pos;
};

// A product of disjoint square-free monomials, relabeled so that block b
// occupies consecutive variables in generator order.
struct IdealSpec {
    int n_total = 0;
    std::vector<IndexSet> generators;
    std::vector<int> blocks;
    std::vector<int> relabel; // relabel[old - 1] = new index

    bool single_block() const noexcept
    {
        return blocks.size() == 1;
    }
};

namespace detail
{

class Cursor
{
public:
    explicit Cursor(std::string_view text) : m_text(text) {}

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }
    bool done()
    {
        skip_space();
        return m_pos >= m_text.size();
    }
    char peek()
    {
        skip_space();
        return m_pos < m_text.size() ? m_text[m_pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }
    long number()
    {
        skip_space();
        const auto start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected a number");
        }
        if (m_pos - start > 9) {
            m_pos = start;
            fail("number too large");
        }
        return std::stol(std::string(m_text.substr(start, m_pos - start)));
    }
    std::size_t pos() const noexcept
    {
        return m_pos;
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what, m_pos);
    }

private:
    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace detail

inline IdealSpec parse_ideal(std::string_view text)
{
    detail::Cursor cur(text);
    IdealSpec spec;
    IndexSet seen;
    int max_index = 0;
    do {
        IndexSet gen;
        do {
            if (!cur.accept('x')) {
                cur.fail("expected a variable x<int>");
            }
            const auto at = cur.pos();
            const long i = cur.number();
            if (i < 1 || i > max_vars) {
                throw parse_error("variable index " + std::to_string(i) + " outside 1.." + std::to_string(max_vars), at);
            }
            if (gen.contains(static_cast<int>(i))) {
                throw parse_error("generator is not square-free (x" + std::to_string(i) + " repeated)", at);
            }
            if (seen.contains(static_cast<int>(i))) {
                throw parse_error("generators overlap in x" + std::to_string(i), at);
            }
            gen = gen.with(static_cast<int>(i));
            max_index = std::max(max_index, static_cast<int>(i));
        } while (cur.accept('*'));
        seen = seen | gen;
        spec.generators.push_back(gen);
    } while (cur.accept(','));
    if (!cur.done()) {
        cur.fail("unexpected character");
    }
    for (int i = 1; i <= max_index; ++i) {
        if (!seen.contains(i)) {
            throw algebra_error("variable x" + std::to_string(i)
                                + " occurs in no generator (polynomial tensor factors are not supported)");
        }
    }
    spec.n_total = max_index;
    spec.relabel.assign(max_index, 0);
    int next = 1;
    for (const auto gen : spec.generators) {
        spec.blocks.push_back(gen.size());
        gen.for_each([&](int i) { spec.relabel[i - 1] = next++; });
    }
    return spec;
}

// term = [coeff '*'] ['e[' indices ']'] ['t^' nat] ['x[' nats ']'], parts
// joined by '*', terms by '+' or '-'.
inline Cochain parse_element(std::string_view text, int n, const Field &field = {})
{
    check_nvars(n);
    detail::Cursor cur(text);
    std::vector<std::pair<StandardCochain, Scalar>> terms;
    if (cur.done()) {
        cur.fail("empty element");
    }
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.accept('-')) {
            sign = -1;
        } else if (!cur.accept('+') && !first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;
        const auto term_start = cur.pos();
        mpq_class coeff = sign;
        std::vector<int> e_indices;
        int q = 0;
        ExponentVector alpha(n);
        bool any = false;
        bool seen_e = false, seen_t = false, seen_x = false;
        do {
            const char c = cur.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                if (any) {
                    cur.fail("coefficient must come first");
                }
                mpz_class num = cur.number();
                mpz_class den = 1;
                if (cur.accept('/')) {
                    const auto at = cur.pos();
                    den = cur.number();
                    if (den == 0) {
                        throw parse_error("zero denominator", at);
                    }
                }
                coeff *= mpq_class(num, den);
                coeff.canonicalize();
            } else if (c == 'e' && !seen_e) {
                cur.accept('e');
                cur.expect('[');
                if (!cur.accept(']')) {
                    do {
                        const auto at = cur.pos();
                        const long i = cur.number();
                        if (i < 1 || i > n) {
                            throw parse_error("e index " + std::to_string(i) + " outside 1.." + std::to_string(n), at);
                        }
                        for (int j : e_indices) {
                            if (j == i) {
                                throw parse_error("repeated index " + std::to_string(i) + " in e[...]", at);
                            }
                        }
                        e_indices.push_back(static_cast<int>(i));
                    } while (cur.accept(','));
                    cur.expect(']');
                }
                seen_e = true;
            } else if (c == 't' && !seen_t) {
                cur.accept('t');
                q = cur.accept('^') ? static_cast<int>(cur.number()) : 1;
                seen_t = true;
            } else if (c == 'x' && !seen_x) {
                cur.accept('x');
                cur.expect('[');
                for (int i = 0; i < n; ++i) {
                    if (i > 0) {
                        cur.expect(',');
                    }
                    alpha[i] = static_cast<int>(cur.number());
                }
                cur.expect(']');
                seen_x = true;
            } else {
                cur.fail("unexpected character in term");
            }
            any = true;
        } while (cur.accept('*'));
        // Sort the e indices, tracking the sign of the permutation.
        for (std::size_t a = 0; a < e_indices.size(); ++a) {
            for (std::size_t b = a + 1; b < e_indices.size(); ++b) {
                if (e_indices[b] < e_indices[a]) {
                    coeff = -coeff;
                }
            }
        }
        if (AMonomial(alpha).is_zero()) {
            throw parse_error("monomial is zero in A", term_start);
        }
        terms.emplace_back(StandardCochain(IndexSet::from_members(e_indices), q, alpha), field.make(Scalar(coeff)));
        if (terms.back().first.hdeg() != terms.front().first.hdeg()) {
            throw parse_error("terms of different homological degree", term_start);
        }
    }
    Cochain out(n, terms.front().first.hdeg());
    for (const auto &[s, c] : terms) {
        out.add(s, c);
    }
    return out;
}

inline std::string print_standard(const StandardCochain &s)
{
    std::vector<std::string> parts;
    if (!s.set().empty()) {
        std::string e = "e[";
        for (int i : s.set().members()) {
            e += (e.size() > 2 ? "," : "") + std::to_string(i);
        }
        parts.push_back(e + "]");
    }
    if (s.q() > 0) {
        parts.push_back("t^" + std::to_string(s.q()));
    }
    if (s.alpha().total() > 0) {
        std::string x = "x[";
        for (int i = 0; i < s.nvars(); ++i) {
            x += (i > 0 ? "," : "") + std::to_string(s.alpha()[i]);
        }
        parts.push_back(x + "]");
    }
    if (parts.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &p : parts) {
        out += (out.empty() ? "" : "*") + p;
    }
    return out;
}

// Inverse of parse_element on canonical cochains.
inline std::string print_element(const Cochain &c)
{
    if (c.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[s, coeff] : c.terms()) {
        const bool neg = coeff.modulus() == 0 && coeff.rational() < 0;
        const auto mag = neg ? -coeff : coeff;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const auto body = print_standard(s);
        if (mag.is_one()) {
            out += body;
        } else {
            out += mag.to_string() + (body == "1" ? "" : "*" + body);
        }
    }
    return out;
}

} // namespace hhci

#endif
