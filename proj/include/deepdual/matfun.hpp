#pragma once

#include "deepdual/matrix.hpp"

namespace deepdual {

/// Relative cutoff below which a singular value counts as zero:
/// sigma_i is nonzero iff sigma_i > kRankTol * sigma_1.
inline constexpr double kRankTol = 1e-10;

struct SvdResult {
    Matrix U;      ///< left singular vectors, orthonormal columns
    Vector sigma;  ///< singular values, nonincreasing
    Matrix V;      ///< right singular vectors, orthonormal columns
    Index rank;    ///< number of singular values above the cutoff
};

/// Thin SVD with the library-wide rank cutoff applied.
SvdResult compute_svd(const Matrix& a);

/// Schatten-p quasi-norm (sum_i sigma_i^p)^(1/p) over singular values
/// above the rank cutoff. p = 1 is the nuclear norm, p = 2 Frobenius.
/// For p < 1 this is not a norm (no triangle inequality) but it is
/// absolutely homogeneous.
double schatten_quasi_norm(const Matrix& a, double p);

/// Nuclear norm, sum of singular values.
double nuclear_norm(const Matrix& a);

/// Largest singular value.
double spectral_norm(const Matrix& a);

/// Moore-Penrose pseudo-inverse via SVD with the rank cutoff.
Matrix pseudo_inverse(const Matrix& a);

/// Elementwise max(z, 0).
Matrix positive_part(const Matrix& a);

/// Test helper: checks sum_i A_ii^p >= sum_i lambda_i(A)^p - 1e-10
/// for a symmetric PSD matrix and p in (0,1). The input is symmetrized
/// as (A + A^T)/2 first; matrices with min eigenvalue < -1e-8 are rejected.
bool diag_eig_power_inequality_check(const Matrix& a, double p);

/// Test helper: checks sigma_i(P W) <= sigma_i(W) + 1e-10 for all i,
/// where P must be a symmetric projection (||P^2 - P||_F <= 1e-8).
bool projection_shrinks_singvals_check(const Matrix& p, const Matrix& w);

} // namespace deepdual
