#pragma once

// Exact dense linear algebra over the rationals, sized for small invariant
// systems: row reduction, rank, and consistent solves.

#include <cstddef>
#include <optional>
#include <vector>

#include "logcob/rational.hpp"

namespace logcob {

using Matrix = std::vector<std::vector<Rational>>;

namespace detail {

// Reduced row echelon form in place; returns pivot column per pivot row.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline std::size_t matrix_rank(Matrix m) { return detail::rref(m).size(); }

// A solution of A x = b if one exists (free variables set to zero).
inline std::optional<std::vector<Rational>> solve_exact(const Matrix& a,
                                                        const std::vector<Rational>& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    Matrix aug(rows, std::vector<Rational>(cols + 1, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = detail::rref(aug);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        if (pivots[p] == cols) return std::nullopt; // row (0 ... 0 | 1)
    std::vector<Rational> x(cols, 0);
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug[p][cols];
    return x;
}

} // namespace logcob
