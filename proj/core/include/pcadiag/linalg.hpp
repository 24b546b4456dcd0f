#pragma once

#include <cstddef>
#include <vector>

#include "pcadiag/matrix.hpp"

namespace pcadiag {

/// Symmetric eigendecomposition. Eigenvalues sorted non-increasing, ties kept
/// in original index order; column j of `vectors` pairs with values[j]. Each
/// column is sign-canonicalized: its largest-magnitude entry is positive
/// (lowest index wins ties).
struct EigResult {
  std::vector<double> values;
  Matrix vectors;  // p x p orthogonal
};

/// Thin SVD of an n x p matrix with p <= n. Singular values sorted
/// non-increasing; V columns sign-canonicalized with U flipped in tandem so
/// that u * diag(sigma) * v^T reproduces the input.
struct SvdResult {
  Matrix u;                   // n x p, column-orthonormal
  std::vector<double> sigma;  // p values, all >= 0
  Matrix v;                   // p x p orthogonal
};

/// Cyclic Jacobi eigensolver for a symmetric matrix. Convergence: off-diagonal
/// Frobenius norm <= 1e-14 * ||S||_F, sweep cap 100.
/// Throws InvalidMatrix (non-square or asymmetric), NonFiniteInput,
/// ConvergenceFailure.
EigResult jacobi_eigh(const Matrix& s);

/// One-sided Jacobi SVD acting on the columns of x, which diagonalizes x^T x
/// implicitly without forming it. Same convergence rule and sweep cap as
/// jacobi_eigh. Throws ShapeViolation (p > n), NonFiniteInput,
/// ConvergenceFailure.
SvdResult svd(const Matrix& x);

/// x^T x with the upper triangle computed and mirrored, so the result is
/// symmetric by construction. Throws NonFiniteInput.
Matrix gram(const Matrix& x);

/// Sum of the k largest squared singular values of x, 1 <= k <= p.
/// Throws IndexViolation.
double partial_spectral_sum(const Matrix& x, std::size_t k);

/// Prefix sum of squares over an already-sorted singular value list.
double squared_prefix_sum(const std::vector<double>& sigma, std::size_t k);

/// Number of singular values above rel_tol * sigma_max. Values below the
/// cutoff count as exact zeros for rank purposes but are never modified.
std::size_t numerical_rank(const std::vector<double>& sigma, double rel_tol = 1e-12);

/// Flips each column of v so its largest-magnitude entry is positive
/// (lowest index wins ties).
void canonicalize_columns(Matrix& v);

/// Same rule applied to v with u columns flipped in tandem, preserving the
/// product u * diag(sigma) * v^T.
void canonicalize_columns_paired(Matrix& v, Matrix& u);

}  // namespace pcadiag
