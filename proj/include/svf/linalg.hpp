#pragma once

#include <cstddef>
#include <vector>

#include "svf/rational.hpp"

namespace svf {

using Row = std::vector<Rational>;
using Mat = std::vector<Row>;

/// Reduced row echelon form in place; returns the rank. Exact arithmetic, no
/// pivot tolerance: verdicts built on this are discrete.
inline std::size_t rref(Mat& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational factor = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    m.resize(rank, Row(cols, Rational(0)));
    return rank;
}

/// Determinant of a square matrix by fraction-free-ish Gaussian elimination.
inline Rational determinant(Mat m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rational inv = Rational(1) / m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational factor = m[i][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    return det;
}

/// Reduces v against rref rows in place: afterwards v has zeros in every
/// pivot coordinate, so it is the canonical representative of v modulo the
/// row space.
inline void reduce_against(const Mat& rref_rows, Row& v) {
    for (const auto& row : rref_rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size()) continue;
        if (v[lead] == 0) continue;
        Rational factor = v[lead];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * row[j];
    }
}

/// Is v in the row space of an rref matrix? Exact reduction to zero.
inline bool in_row_space(const Mat& rref_rows, Row v) {
    reduce_against(rref_rows, v);
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Pivot coordinate of each rref row (row.size() for a zero row).
inline std::vector<std::size_t> pivot_columns(const Mat& rref_rows) {
    std::vector<std::size_t> pivots;
    for (const auto& row : rref_rows) {
        std::size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        pivots.push_back(lead);
    }
    return pivots;
}

/// Canonical basis of the null space {v : m v = 0}, rows in rref.
inline Mat kernel_basis(Mat m) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    rref(m);
    std::vector<std::size_t> pivots = pivot_columns(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots)
        if (p < cols) is_pivot[p] = true;
    Mat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Row v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (pivots[i] < cols) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

/// Canonical basis of the column space of m, rows in rref.
inline Mat image_basis(const Mat& m) {
    if (m.empty()) return {};
    Mat t(m[0].size(), Row(m.size(), Rational(0)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    rref(t);
    return t;
}

} // namespace svf
