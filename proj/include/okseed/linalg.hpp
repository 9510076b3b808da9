#pragma once

// Small dense exact linear algebra over the rationals. Dimensions here are
// at most a few dozen, so plain Gauss-Jordan elimination is all we need.

#include "okseed/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace okseed {

using RatMatrix = std::vector<RatVector>;  // row-major
using IntMatrix = std::vector<IntVector>;  // row-major

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = to_rational(m[i]);
    return out;
}

template <class T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& m) {
    if (m.empty()) return {};
    std::vector<std::vector<T>> t(m[0].size(), std::vector<T>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

// Matrix whose columns are the given vectors.
template <class T>
std::vector<std::vector<T>> from_columns(const std::vector<std::vector<T>>& cols) {
    return transpose(cols);
}

inline RatMatrix identity_matrix(std::size_t n) {
    RatMatrix id(n, RatVector(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.empty()) return {};
    if (a[0].size() != b.size()) throw InvalidArgument("multiply: dimension mismatch");
    std::size_t cols = b.empty() ? 0 : b[0].size();
    RatMatrix c(a.size(), RatVector(cols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline RatVector multiply(const RatMatrix& a, const RatVector& x) {
    RatVector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw InvalidArgument("multiply: dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty()) return {};
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMatrix c(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IntVector multiply(const IntMatrix& a, const IntVector& x) {
    IntVector y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    return detail::rref(m, m[0].size()).size();
}

inline Rational determinant(RatMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidArgument("determinant: matrix not square");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

inline Rational determinant(const IntMatrix& m) { return determinant(to_rational(m)); }

// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
    std::size_t n = a.size();
    RatMatrix aug(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw InvalidArgument("inverse: matrix not square");
        aug[i] = a[i];
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    if (detail::rref(aug, n).size() != n) return std::nullopt;
    RatMatrix inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + n, aug[i].end());
    return inv;
}

// Unique solution of A x = b for A with full column rank. Returns nullopt when
// the system is inconsistent; throws when A is rank deficient.
inline std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("solve: dimension mismatch");
    if (a.empty()) return RatVector{};
    std::size_t ncols = a[0].size();
    RatMatrix aug(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        aug[i] = a[i];
        aug[i].push_back(b[i]);
    }
    auto pivots = detail::rref(aug, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    if (pivots.size() != ncols) throw InvariantViolation("solve: matrix is rank deficient");
    RatVector x(ncols);
    for (std::size_t i = 0; i < ncols; ++i) x[i] = aug[i][ncols];
    return x;
}

}  // namespace okseed
