#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace bicolor {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Sparse vector: (column, value) pairs, columns strictly increasing, no stored zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

inline Rational parse_rational(const std::string& text) { return Rational(text); }

inline std::string to_string(const Rational& q) { return q.str(); }

/// dst += factor * src
inline void sparse_axpy(SparseRow& dst, const Rational& factor, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(std::move(dst[a++]));
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            out.emplace_back(src[b].first, factor * src[b].second);
            ++b;
        } else {
            Rational v = dst[a].second + factor * src[b].second;
            if (v != 0) out.emplace_back(dst[a].first, std::move(v));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

/**
 * Row echelon form built one row at a time over exact rationals.
 *
 * Each stored row has pivot coefficient 1 at its first column and no other stored row
 * shares that pivot column.
 */
class SparseEchelon {
public:
    explicit SparseEchelon(int columns) : columns_(columns), pivot_row_(static_cast<std::size_t>(columns), -1) {}

    int columns() const { return columns_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces `row` against the basis; returns true if it was independent (and keeps it).
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        const Rational inv = 1 / row.front().second;
        for (auto& [c, v] : row) v *= inv;
        pivot_row_[static_cast<std::size_t>(row.front().first)] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// True if `row` lies in the span.
    bool contains(SparseRow row) const {
        reduce(row);
        return row.empty();
    }

    /// Basis of the right kernel {x : r.x = 0 for every stored row}, one vector per free column.
    std::vector<SparseRow> nullspace() const {
        // Back-substitution needs pivots processed from the right.
        std::vector<int> pivots;
        for (const auto& r : rows_) pivots.push_back(r.front().first);
        std::vector<int> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots[a] > pivots[b]; });

        std::vector<SparseRow> basis;
        std::vector<Rational> x(static_cast<std::size_t>(columns_));
        for (int f = 0; f < columns_; ++f) {
            if (pivot_row_[static_cast<std::size_t>(f)] >= 0) continue;
            std::fill(x.begin(), x.end(), Rational(0));
            x[static_cast<std::size_t>(f)] = 1;
            for (int idx : order) {
                const auto& r = rows_[static_cast<std::size_t>(idx)];
                Rational s = 0;
                for (std::size_t t = 1; t < r.size(); ++t) {
                    const auto& xv = x[static_cast<std::size_t>(r[t].first)];
                    if (xv != 0) s += r[t].second * xv;
                }
                x[static_cast<std::size_t>(r.front().first)] = -s;
            }
            SparseRow v;
            for (int c = 0; c < columns_; ++c)
                if (x[static_cast<std::size_t>(c)] != 0) v.emplace_back(c, x[static_cast<std::size_t>(c)]);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void reduce(SparseRow& row) const {
        std::size_t start = 0;
        while (start < row.size()) {
            const int c = row[start].first;
            const int p = pivot_row_[static_cast<std::size_t>(c)];
            if (p < 0) {
                ++start;
                continue;
            }
            // Entries before `start` sit in non-pivot columns and are never touched again
            // because stored rows only have support at or after their pivot.
            SparseRow tail(row.begin() + static_cast<std::ptrdiff_t>(start), row.end());
            const Rational factor = -tail.front().second;
            sparse_axpy(tail, factor, rows_[static_cast<std::size_t>(p)]);
            row.resize(start);
            row.insert(row.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
        }
        // Full reduction leaves only non-pivot columns; the row is independent iff non-empty.
    }

    int columns_;
    std::vector<int> pivot_row_;
    std::vector<SparseRow> rows_;
};

/// Determinant of a dense square rational matrix by Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace bicolor
