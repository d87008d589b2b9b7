#ifndef HHCI_CORE_INDEX_SET_HPP
#define HHCI_CORE_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <hhci/core/scalar.hpp>

namespace hhci
{

// Upper bound on the number of variables of A.
inline constexpr int max_vars = 16;

inline void check_index(int i)
{
    if (i < 1 || i > max_vars) {
        throw algebra_error("index " + std::to_string(i) + " outside 1.." + std::to_string(max_vars));
    }
}

inline void check_nvars(int n)
{
    if (n < 1 || n > max_vars) {
        throw algebra_error("number of variables " + std::to_string(n) + " outside 1.." + std::to_string(max_vars));
    }
}

// A subset of {1, ..., 16}, stored as a bitmask (bit i-1 for index i).
//
// Ordering is lexicographic on the increasing member lists, so the empty
// set is smallest and {1} < {1,2} < {2}.
class IndexSet
{
public:
    constexpr IndexSet() = default;
    IndexSet(std::initializer_list<int> members)
    {
        for (int i : members) {
            check_index(i);
            m_bits |= bit(i);
        }
    }
    static constexpr IndexSet from_bits(std::uint32_t bits) noexcept
    {
        IndexSet s;
        s.m_bits = bits;
        return s;
    }
    static IndexSet full(int n)
    {
        check_nvars(n);
        return from_bits((std::uint32_t{1} << n) - 1);
    }
    static IndexSet from_members(const std::vector<int> &members)
    {
        IndexSet s;
        for (int i : members) {
            check_index(i);
            s.m_bits |= bit(i);
        }
        return s;
    }

    constexpr std::uint32_t bits() const noexcept
    {
        return m_bits;
    }
    constexpr bool contains(int i) const noexcept
    {
        return i >= 1 && i <= max_vars && (m_bits & bit(i)) != 0;
    }
    constexpr int size() const noexcept
    {
        return std::popcount(m_bits);
    }
    constexpr bool empty() const noexcept
    {
        return m_bits == 0;
    }
    // Number of members strictly smaller than i.
    constexpr int count_below(int i) const noexcept
    {
        return std::popcount(m_bits & (bit(i) - 1));
    }
    constexpr int max_member() const noexcept
    {
        return m_bits == 0 ? 0 : 32 - std::countl_zero(m_bits);
    }
    constexpr bool subset_of(IndexSet o) const noexcept
    {
        return (m_bits & ~o.m_bits) == 0;
    }
    constexpr bool disjoint(IndexSet o) const noexcept
    {
        return (m_bits & o.m_bits) == 0;
    }

    constexpr IndexSet with(int i) const noexcept
    {
        return from_bits(m_bits | bit(i));
    }
    constexpr IndexSet without(int i) const noexcept
    {
        return from_bits(m_bits & ~bit(i));
    }
    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept
    {
        return from_bits(a.m_bits | b.m_bits);
    }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept
    {
        return from_bits(a.m_bits & b.m_bits);
    }
    // Set difference.
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept
    {
        return from_bits(a.m_bits & ~b.m_bits);
    }

    std::vector<int> members() const
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (auto b = m_bits; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b) + 1);
        }
        return out;
    }

    // Calls f(i) for every member in increasing order.
    template <typename F>
    void for_each(F &&f) const
    {
        for (auto b = m_bits; b != 0; b &= b - 1) {
            f(std::countr_zero(b) + 1);
        }
    }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept
    {
        auto x = a.m_bits, y = b.m_bits;
        while (true) {
            if (x == 0 || y == 0) {
                return (x == 0 ? 0 : 1) <=> (y == 0 ? 0 : 1);
            }
            const int lx = std::countr_zero(x), ly = std::countr_zero(y);
            if (lx != ly) {
                return lx <=> ly;
            }
            x &= x - 1;
            y &= y - 1;
        }
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            s += (first ? "" : ",") + std::to_string(i);
            first = false;
        });
        return s + "}";
    }

private:
    static constexpr std::uint32_t bit(int i) noexcept
    {
        return std::uint32_t{1} << (i - 1);
    }

    std::uint32_t m_bits = 0;
};

// (-1)^{#{j in I : j < i}}.
inline int sgn_index(int i, IndexSet set) noexcept
{
    return set.count_below(i) % 2 == 0 ? 1 : -1;
}

// The sign with e_M ^ e_N = sgn(M, N) e_{M u N}; M and N must be disjoint.
inline int sgn_sets(IndexSet m, IndexSet n)
{
    if (!m.disjoint(n)) {
        throw algebra_error("sgn_sets: " + m.to_string() + " and " + n.to_string() + " overlap");
    }
    int inversions = 0;
    m.for_each([&](int i) { inversions += n.count_below(i); });
    return inversions % 2 == 0 ? 1 : -1;
}

// Calls f(S) for every subset S of the given set, in increasing bitmask order.
template <typename F>
void for_each_subset(IndexSet set, F &&f)
{
    const auto full = set.bits();
    std::uint32_t sub = 0;
    while (true) {
        f(IndexSet::from_bits(sub));
        if (sub == full) {
            break;
        }
        sub = (sub - full) & full;
    }
}

} // namespace hhci

#endif
