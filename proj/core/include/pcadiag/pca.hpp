#pragma once

#include <cstddef>
#include <vector>

#include "pcadiag/linalg.hpp"
#include "pcadiag/matrix.hpp"

namespace pcadiag {

enum class PcaScheme {
  CovarianceEig,   // eigendecomposition of the empirical covariance
  SvdCentered,     // SVD of the centered data matrix
  SvdUncentered,   // SVD of the raw data matrix (the skipped-centering variant)
};

const char* to_string(PcaScheme scheme);

struct PcaModel {
  Matrix projection;             // p x k, orthonormal columns
  std::vector<double> mean;      // column mean of the source data
  PcaScheme scheme;
  std::vector<double> spectrum;  // full eigenvalue (scheme 1) or squared
                                 // singular value (scheme 2) list, descending
};

struct Embedding {
  Matrix coords;  // n x k
  PcaModel model;
};

/// Arithmetic mean of each column. Throws InvalidMatrix on an empty matrix.
std::vector<double> column_mean(const Matrix& x);

/// x minus the rank-one mean term 1_n * mean^T.
Matrix center(const Matrix& x);

/// Empirical covariance gram(center(x)) / (n - 1). Throws InsufficientData
/// when n < 2.
Matrix covariance(const Matrix& x);

/// PCA via eigendecomposition of the empirical covariance matrix. The
/// embedding multiplies the raw x by the projection; pass project_centered to
/// project the centered data instead (the convention many libraries use).
/// Throws IndexViolation (k outside [1, p-1]), InsufficientData (n < 2),
/// ShapeViolation (p >= n).
Embedding scheme1(const Matrix& x, std::size_t k, bool project_centered = false);

/// PCA via SVD of the (optionally centered) data matrix. The embedding always
/// multiplies the raw x unless project_centered is set.
/// Throws IndexViolation, ShapeViolation.
Embedding scheme2(const Matrix& x, std::size_t k, bool do_center = true,
                  bool project_centered = false);

}  // namespace pcadiag
