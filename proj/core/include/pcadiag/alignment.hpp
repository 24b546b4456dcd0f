#pragma once

#include <vector>

#include "pcadiag/matrix.hpp"

namespace pcadiag {

struct AlignmentResult {
  Matrix rotation;                // k x k orthogonal (reflections permitted)
  Matrix aligned;                 // second embedding after centering + rotation
  double rmsd = 0.0;              // root-mean-square per-point displacement
  std::vector<double> per_point;  // per-point displacement magnitudes
  double scaling = 1.0;           // optimal scalar when allow_scaling is set
};

/// Subtracts column means so every coordinate axis has zero mean.
Matrix normalize_embedding(const Matrix& y);

/// Orthogonal Procrustes: rotates (and optionally scales) z onto y after
/// centering both, using the SVD of z^T y. Minimizes ||y - z R||_F over
/// orthogonal R. Throws ShapeViolation on mismatched shapes or k > n.
AlignmentResult procrustes(const Matrix& y, const Matrix& z, bool allow_scaling = false);

}  // namespace pcadiag
