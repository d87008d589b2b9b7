#ifndef HHCI_TESTS_HELPERS_HPP
#define HHCI_TESTS_HELPERS_HPP

#include <hhci/hhci.hpp>

namespace testing_helpers
{

using namespace hhci;

inline AMonomial mono(std::initializer_list<int> e)
{
    return AMonomial(ExponentVector(e));
}

inline StandardCochain sc(IndexSet set, int q, std::initializer_list<int> alpha)
{
    return StandardCochain(set, q, ExponentVector(alpha));
}

inline ResolutionElement term(int n, IndexSet set, int q, const AMonomial &l, const AMonomial &r, long c = 1)
{
    return ResolutionElement::basis(n, BasisSymbol{set, q}, TensorCoefficient::pure(l, r, c));
}

// Parity of the permutation sorting a sequence, by bubble sort.
inline int bubble_parity(std::vector<int> v)
{
    int swaps = 0;
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = 0; b + 1 < v.size() - a; ++b) {
            if (v[b] > v[b + 1]) {
                std::swap(v[b], v[b + 1]);
                ++swaps;
            }
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

} // namespace testing_helpers

#endif
