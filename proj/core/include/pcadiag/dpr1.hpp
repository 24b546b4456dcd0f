#pragma once

#include <cstddef>
#include <vector>

#include "pcadiag/matrix.hpp"

namespace pcadiag {

/// Diagonal-plus-rank-one eigenproblem D + rho * mu * mu^T with rho > 0.
struct Dpr1Problem {
  std::vector<double> d;
  double rho = 1.0;
  std::vector<double> mu;
};

/// Eigenpair fixed during deflation, expressed in the original coordinates.
struct DeflatedPair {
  std::size_t index;  // index in the (sorted) working problem it came from
  double value;
  std::vector<double> vector;
};

/// Output of deflate(): a reduced problem with strictly decreasing d and all
/// mu entries nonzero, the orthogonal transform that got there, and the
/// eigenpairs already resolved.
struct Dpr1Deflation {
  Dpr1Problem reduced;
  std::vector<std::size_t> kept;     // transformed-coordinate indices kept
  Matrix transform;                  // T with T (D + rho mu mu^T) T^T block form
  std::vector<DeflatedPair> resolved;
};

struct Dpr1Spectrum {
  std::vector<double> values;         // sorted non-increasing
  Matrix vectors;                     // p x p, column j pairs with values[j]
  std::vector<std::size_t> deflated;  // output positions resolved by deflation
};

/// The secular function w(lambda) = 1 + rho * sum_j mu_j^2 / (d_j - lambda),
/// evaluated with compensated summation. Throws PoleEvaluation when lambda
/// coincides with a diagonal entry to machine tolerance, InvalidProblem on a
/// malformed problem.
double secular(double lambda, const Dpr1Problem& prob);

/// Removes degenerate components: mu entries at or below tol * ||mu|| become
/// exact eigenpairs (d_j, e_j); diagonal entries closer than tol * (|d_1|+1)
/// are merged by a planar rotation that zeroes one mu component. The input is
/// sorted non-increasing along the way.
Dpr1Deflation deflate(const Dpr1Problem& prob, double tol = 1e-12);

/// Full eigendecomposition via the secular equation: deflation, then one
/// bracketed root per surviving interval (bisection warm-up + safeguarded
/// Newton), eigenvectors (D - lambda I)^{-1} mu normalized. Throws
/// InvalidProblem (rho <= 0, size mismatch), NonFiniteInput,
/// ConvergenceFailure (root finder exceeds 200 iterations).
Dpr1Spectrum solve(const Dpr1Problem& prob, double deflation_tol = 1e-12);

}  // namespace pcadiag
