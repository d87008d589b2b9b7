#ifndef HHCI_LINALG_HPP
#define HHCI_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <hhci/core/scalar.hpp>

namespace hhci
{

// A sparse row: (column, value) pairs with increasing columns and no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Exact sparse matrix over the session field, stored by rows.
class SparseMatrix
{
public:
    SparseMatrix(std::size_t rows, std::size_t cols, Field field = {}) : m_rows(rows), m_cols(cols), m_field(field) {}

    std::size_t rows() const noexcept
    {
        return m_rows.size();
    }
    std::size_t cols() const noexcept
    {
        return m_cols;
    }
    const Field &field() const noexcept
    {
        return m_field;
    }

    void add(std::size_t row, std::size_t col, const Scalar &value)
    {
        if (row >= m_rows.size() || col >= m_cols) {
            throw algebra_error("SparseMatrix::add: index out of range");
        }
        auto &r = m_rows[row];
        const auto v = m_field.make(value);
        auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto &e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == col) {
            it->second += v;
            if (it->second.is_zero()) {
                r.erase(it);
            }
        } else if (!v.is_zero()) {
            r.insert(it, {col, v});
        }
    }
    const SparseRow &row(std::size_t i) const
    {
        return m_rows[i];
    }
    Scalar at(std::size_t row, std::size_t col) const
    {
        for (const auto &[c, v] : m_rows[row]) {
            if (c == col) {
                return v;
            }
        }
        return m_field.make(0);
    }

    // Rank by fraction-free elimination: a row r meeting pivot row p in its
    // leading column is replaced by lead(p) * r - r[lead] * p.
    std::size_t rank() const
    {
        std::map<std::size_t, SparseRow> pivots;
        for (auto r : m_rows) {
            while (!r.empty()) {
                const auto lead = r.front().first;
                auto it = pivots.find(lead);
                if (it == pivots.end()) {
                    pivots.emplace(lead, std::move(r));
                    break;
                }
                r = combine(r, it->second.front().second, it->second, -r.front().second);
            }
        }
        return pivots.size();
    }

    // Basis of {v : M v = 0}, one vector per free column of the reduced row
    // echelon form; each basis vector has a 1 in its free column.
    std::vector<std::vector<Scalar>> nullspace() const
    {
        const auto rref = reduced_echelon();
        std::vector<bool> is_pivot(m_cols, false);
        for (const auto &r : rref) {
            is_pivot[r.front().first] = true;
        }
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t free = 0; free < m_cols; ++free) {
            if (is_pivot[free]) {
                continue;
            }
            std::vector<Scalar> v(m_cols, m_field.make(0));
            v[free] = m_field.make(1);
            for (const auto &r : rref) {
                for (const auto &[c, val] : r) {
                    if (c == free) {
                        v[r.front().first] = -val;
                    }
                }
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Rows of the reduced row echelon form, ordered by pivot column.
    std::vector<SparseRow> reduced_echelon() const
    {
        std::map<std::size_t, SparseRow> pivots;
        for (auto r : m_rows) {
            r = reduce_by(r, pivots);
            if (r.empty()) {
                continue;
            }
            const auto inv = r.front().second.inverse();
            for (auto &e : r) {
                e.second = e.second * inv;
            }
            const auto lead = r.front().first;
            // Clear the new pivot column from the existing rows.
            for (auto &[c, p] : pivots) {
                const auto coeff = entry(p, lead);
                if (!coeff.is_zero()) {
                    p = combine(p, m_field.make(1), r, -coeff);
                }
            }
            pivots.emplace(lead, std::move(r));
        }
        std::vector<SparseRow> out;
        for (auto &[c, r] : pivots) {
            out.push_back(std::move(r));
        }
        return out;
    }

private:
    static Scalar entry(const SparseRow &r, std::size_t col)
    {
        for (const auto &[c, v] : r) {
            if (c == col) {
                return v;
            }
        }
        return Scalar(0);
    }

    // Reduces a row against normalized pivot rows until its support avoids
    // every pivot column.
    SparseRow reduce_by(SparseRow r, const std::map<std::size_t, SparseRow> &pivots) const
    {
        bool changed = true;
        while (changed && !r.empty()) {
            changed = false;
            for (const auto &[c, v] : r) {
                auto it = pivots.find(c);
                if (it != pivots.end()) {
                    r = combine(r, m_field.make(1), it->second, -v);
                    changed = true;
                    break;
                }
            }
        }
        return r;
    }

    // a * x + b * y.
    static SparseRow combine(const SparseRow &x, const Scalar &a, const SparseRow &y, const Scalar &b)
    {
        SparseRow out;
        out.reserve(x.size() + y.size());
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
                auto v = a * x[i].second;
                if (!v.is_zero()) {
                    out.emplace_back(x[i].first, std::move(v));
                }
                ++i;
            } else if (i == x.size() || y[j].first < x[i].first) {
                auto v = b * y[j].second;
                if (!v.is_zero()) {
                    out.emplace_back(y[j].first, std::move(v));
                }
                ++j;
            } else {
                auto v = a * x[i].second + b * y[j].second;
                if (!v.is_zero()) {
                    out.emplace_back(x[i].first, std::move(v));
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::vector<SparseRow> m_rows;
    std::size_t m_cols;
    Field m_field;
};

} // namespace hhci

#endif
