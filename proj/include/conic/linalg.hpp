#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "conic/rational.hpp"

namespace conic::linalg {

using Matrix = std::vector<RationalVector>;

struct Echelon {
    Matrix rows;                       // reduced row echelon form, zero rows removed
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination over the rationals. `cols` is needed when `m` has no rows.
inline Echelon reduce(Matrix m, std::size_t cols) {
    Echelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const Matrix& m, std::size_t cols) { return reduce(m, cols).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<RationalVector> nullspace(const Matrix& m, std::size_t cols) {
    Echelon e = reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational dot(const RationalVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const IntegerVector& a, const RationalVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
    return s;
}

/// Scales a nonzero rational vector to a primitive integer vector (same direction).
inline IntegerVector primitive(const RationalVector& v) {
    Integer lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    IntegerVector out;
    out.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        Integer z = numerator(x) * (lcm / denominator(x));
        g = boost::multiprecision::gcd(g, z);
        out.push_back(std::move(z));
    }
    if (g > 1) {
        for (auto& z : out) z /= g;
    }
    return out;
}

}  // namespace conic::linalg
