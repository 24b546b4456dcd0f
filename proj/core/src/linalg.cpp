#include "pcadiag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pcadiag/error.hpp"

namespace pcadiag {

namespace {

constexpr double kConvergenceRel = 1e-14;  // off-diagonal F-norm vs ||S||_F
constexpr int kSweepCap = 100;

double off_diagonal_norm(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      acc += 2.0 * a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

// Indices that sort `values` non-increasing, ties by original index.
std::vector<std::size_t> descending_order(const std::vector<double>& values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return idx;
}

Matrix permute_columns(const Matrix& m, const std::vector<std::size_t>& order) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, order[j]);
  }
  return out;
}

std::size_t dominant_row(const Matrix& v, std::size_t j) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double a = std::abs(v(i, j));
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  return arg;
}

}  // namespace

void canonicalize_columns(Matrix& v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    if (v(dominant_row(v, j), j) < 0.0) {
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) = -v(i, j);
    }
  }
}

void canonicalize_columns_paired(Matrix& v, Matrix& u) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    if (v(dominant_row(v, j), j) < 0.0) {
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) = -v(i, j);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) = -u(i, j);
    }
  }
}

EigResult jacobi_eigh(const Matrix& s) {
  if (s.rows() != s.cols()) {
    raise(ErrorKind::InvalidMatrix, "jacobi_eigh: matrix is not square");
  }
  if (s.rows() == 0) {
    raise(ErrorKind::InvalidMatrix, "jacobi_eigh: empty matrix");
  }
  if (!all_finite(s)) {
    raise(ErrorKind::NonFiniteInput, "jacobi_eigh: non-finite entries");
  }
  const std::size_t p = s.rows();
  const double sym_tol = 1e-12 * max_abs(s);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      if (std::abs(s(i, j) - s(j, i)) > sym_tol) {
        raise(ErrorKind::InvalidMatrix, "jacobi_eigh: matrix is not symmetric");
      }
    }
  }

  Matrix a = s;
  // Symmetrize exactly so rotations keep both triangles in lockstep.
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const double m = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = a(j, i) = m;
    }
  }
  Matrix v = Matrix::identity(p);
  const double total_norm = frobenius_norm(a);

  bool converged = off_diagonal_norm(a) <= kConvergenceRel * total_norm;
  for (int sweep = 0; sweep < kSweepCap && !converged; ++sweep) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        const double apq = a(i, j);
        if (apq == 0.0) continue;
        const double tau = (a(j, j) - a(i, i)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;

        for (std::size_t k = 0; k < p; ++k) {
          const double aki = a(k, i);
          const double akj = a(k, j);
          a(k, i) = c * aki - sn * akj;
          a(k, j) = sn * aki + c * akj;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const double aik = a(i, k);
          const double ajk = a(j, k);
          a(i, k) = c * aik - sn * ajk;
          a(j, k) = sn * aik + c * ajk;
        }
        a(i, j) = a(j, i) = 0.0;

        for (std::size_t k = 0; k < p; ++k) {
          const double vki = v(k, i);
          const double vkj = v(k, j);
          v(k, i) = c * vki - sn * vkj;
          v(k, j) = sn * vki + c * vkj;
        }
      }
    }
    converged = off_diagonal_norm(a) <= kConvergenceRel * total_norm;
  }
  if (!converged) {
    raise(ErrorKind::ConvergenceFailure, "jacobi_eigh: sweep cap reached");
  }

  std::vector<double> values(p);
  for (std::size_t i = 0; i < p; ++i) values[i] = a(i, i);
  const std::vector<std::size_t> order = descending_order(values);

  EigResult result;
  result.values.resize(p);
  for (std::size_t j = 0; j < p; ++j) result.values[j] = values[order[j]];
  result.vectors = permute_columns(v, order);
  canonicalize_columns(result.vectors);
  return result;
}

SvdResult svd(const Matrix& x) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (n == 0 || p == 0) {
    raise(ErrorKind::InvalidMatrix, "svd: empty matrix");
  }
  if (p > n) {
    raise(ErrorKind::ShapeViolation, "svd: requires p <= n, got n=" + std::to_string(n) +
                                         " p=" + std::to_string(p));
  }
  if (!all_finite(x)) {
    raise(ErrorKind::NonFiniteInput, "svd: non-finite entries");
  }

  Matrix w = x;  // columns rotated in place
  Matrix v = Matrix::identity(p);

  // Convergence follows the implicit Gram matrix G = W^T W: stop when its
  // off-diagonal Frobenius norm drops below kConvergenceRel * ||G||_F.
  const auto gram_norms = [&]() {
    double off = 0.0, total = 0.0;
    std::vector<double> colsq(p, 0.0);
    for (std::size_t j = 0; j < p; ++j) colsq[j] = dot(w.col(j), w.col(j));
    for (std::size_t j = 0; j < p; ++j) total += colsq[j] * colsq[j];
    for (std::size_t i = 0; i < p; ++i) {
      const std::vector<double> ci = w.col(i);
      for (std::size_t j = i + 1; j < p; ++j) {
        const double g = dot(ci, w.col(j));
        off += 2.0 * g * g;
        total += 2.0 * g * g;
      }
    }
    return std::pair<double, double>(std::sqrt(off), std::sqrt(total));
  };

  bool converged = false;
  {
    const auto [off, total] = gram_norms();
    converged = off <= kConvergenceRel * total;
  }
  for (int sweep = 0; sweep < kSweepCap && !converged; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        double aii = 0.0, ajj = 0.0, aij = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double wi = w(k, i);
          const double wj = w(k, j);
          aii += wi * wi;
          ajj += wj * wj;
          aij += wi * wj;
        }
        if (std::abs(aij) <= 1e-15 * std::sqrt(aii * ajj)) continue;
        rotated = true;
        const double zeta = (ajj - aii) / (2.0 * aij);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double wi = w(k, i);
          const double wj = w(k, j);
          w(k, i) = c * wi - sn * wj;
          w(k, j) = sn * wi + c * wj;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const double vi = v(k, i);
          const double vj = v(k, j);
          v(k, i) = c * vi - sn * vj;
          v(k, j) = sn * vi + c * vj;
        }
      }
    }
    const auto [off, total] = gram_norms();
    converged = off <= kConvergenceRel * total || !rotated;
  }
  if (!converged) {
    raise(ErrorKind::ConvergenceFailure, "svd: sweep cap reached");
  }

  std::vector<double> sigma(p);
  for (std::size_t j = 0; j < p; ++j) sigma[j] = norm(w.col(j));
  const std::vector<std::size_t> order = descending_order(sigma);

  SvdResult result;
  result.sigma.resize(p);
  for (std::size_t j = 0; j < p; ++j) result.sigma[j] = sigma[order[j]];
  result.v = permute_columns(v, order);
  result.u = Matrix(n, p);
  for (std::size_t j = 0; j < p; ++j) {
    const std::vector<double> wj = w.col(order[j]);
    if (result.sigma[j] > 0.0) {
      for (std::size_t i = 0; i < n; ++i) result.u(i, j) = wj[i] / result.sigma[j];
    }
  }
  // Exactly-zero singular values leave U columns undetermined; fill them with
  // an orthonormal completion drawn from the standard basis.
  for (std::size_t j = 0; j < p; ++j) {
    if (result.sigma[j] > 0.0) continue;
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<double> cand(n, 0.0);
      cand[e] = 1.0;
      for (std::size_t q = 0; q < p; ++q) {
        if (q == j || (result.sigma[q] <= 0.0 && q > j)) continue;
        const std::vector<double> uq = result.u.col(q);
        const double proj = dot(cand, uq);
        for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * uq[i];
      }
      const double r = norm(cand);
      if (r > 0.5) {
        for (std::size_t i = 0; i < n; ++i) result.u(i, j) = cand[i] / r;
        break;
      }
    }
  }
  canonicalize_columns_paired(result.v, result.u);
  return result;
}

Matrix gram(const Matrix& x) {
  if (!all_finite(x)) {
    raise(ErrorKind::NonFiniteInput, "gram: non-finite entries");
  }
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  Matrix g(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += x(k, i) * x(k, j);
      g(i, j) = acc;
      g(j, i) = acc;
    }
  }
  return g;
}

double partial_spectral_sum(const Matrix& x, std::size_t k) {
  if (k < 1 || k > x.cols()) {
    raise(ErrorKind::IndexViolation, "partial_spectral_sum: k out of [1, p]");
  }
  return squared_prefix_sum(svd(x).sigma, k);
}

double squared_prefix_sum(const std::vector<double>& sigma, std::size_t k) {
  double acc = 0.0;
  for (std::size_t j = 0; j < k && j < sigma.size(); ++j) acc += sigma[j] * sigma[j];
  return acc;
}

std::size_t numerical_rank(const std::vector<double>& sigma, double rel_tol) {
  if (sigma.empty()) return 0;
  const double cutoff = rel_tol * sigma.front();
  std::size_t r = 0;
  for (double s : sigma) {
    if (s > cutoff && s > 0.0) ++r;
  }
  return r;
}

}  // namespace pcadiag
