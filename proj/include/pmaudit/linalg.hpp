#pragma once

// Small dense-matrix helpers. Dimensions in this project are tiny (feature
// width 22, detector dimension 1-3), so a minimal row-major matrix plus a
// Cholesky factorization is all that is needed.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "pmaudit/core.hpp"

namespace pmaudit {

struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    std::span<double> row(std::size_t r) { return {a.data() + r * cols, cols}; }
    std::span<const double> row(std::size_t r) const { return {a.data() + r * cols, cols}; }
};

/// Lower-triangular Cholesky factor of a symmetric matrix. Returns false when
/// a pivot is not safely positive (relative floor `rel_tol` against the
/// largest diagonal entry), i.e. the matrix is singular or not SPD.
inline bool cholesky(const Matrix& s, Matrix& lower, double rel_tol = 1e-13) {
    const std::size_t d = s.rows;
    lower = Matrix(d, d);
    double max_diag = 0.0;
    for (std::size_t i = 0; i < d; ++i) max_diag = std::max(max_diag, std::abs(s(i, i)));
    const double floor = max_diag > 0 ? max_diag * rel_tol : 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = s(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= lower(i, k) * lower(j, k);
            if (i == j) {
                if (acc <= floor) return false;
                lower(i, i) = std::sqrt(acc);
            } else {
                lower(i, j) = acc / lower(j, j);
            }
        }
    }
    return true;
}

/// Solves L y = b then L^T x = y.
inline std::vector<double> chol_solve(const Matrix& lower, std::span<const double> b) {
    const std::size_t d = lower.rows;
    std::vector<double> x(b.begin(), b.end());
    for (std::size_t i = 0; i < d; ++i) {
        double acc = x[i];
        for (std::size_t k = 0; k < i; ++k) acc -= lower(i, k) * x[k];
        x[i] = acc / lower(i, i);
    }
    for (std::size_t ii = d; ii-- > 0;) {
        double acc = x[ii];
        for (std::size_t k = ii + 1; k < d; ++k) acc -= lower(k, ii) * x[k];
        x[ii] = acc / lower(ii, ii);
    }
    return x;
}

inline double chol_det(const Matrix& lower) {
    double det = 1.0;
    for (std::size_t i = 0; i < lower.rows; ++i) det *= lower(i, i) * lower(i, i);
    return det;
}

/// Crude condition estimate from the Cholesky diagonal; exact for diagonal
/// matrices, a lower bound otherwise. Used only for singularity guards.
inline double chol_cond_estimate(const Matrix& lower) {
    double lo = lower(0, 0), hi = lower(0, 0);
    for (std::size_t i = 1; i < lower.rows; ++i) {
        lo = std::min(lo, lower(i, i));
        hi = std::max(hi, lower(i, i));
    }
    return (hi / lo) * (hi / lo);
}

} // namespace pmaudit
