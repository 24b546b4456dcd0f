#include "pcadiag/dpr1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pcadiag/error.hpp"

namespace pcadiag {

namespace {

constexpr int kRootIterationCap = 200;

void validate_problem(const Dpr1Problem& prob) {
  if (prob.d.empty() || prob.d.size() != prob.mu.size()) {
    raise(ErrorKind::InvalidProblem, "dpr1: d and mu must be non-empty and equally sized");
  }
  if (!all_finite(prob.d) || !all_finite(prob.mu) || !std::isfinite(prob.rho)) {
    raise(ErrorKind::NonFiniteInput, "dpr1: non-finite problem data");
  }
  if (prob.rho <= 0.0) {
    raise(ErrorKind::InvalidProblem, "dpr1: rho must be positive");
  }
}

// w(lambda) and w'(lambda) with Kahan-compensated term summation.
struct SecularEval {
  double w;
  double dw;
};

SecularEval eval_secular(const std::vector<double>& d, const std::vector<double>& mu,
                         double rho, double lambda) {
  double sum = 0.0, comp = 0.0;
  double dsum = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    const double gap = d[j] - lambda;
    const double term = mu[j] * mu[j] / gap;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    dsum += (mu[j] * mu[j]) / (gap * gap);
  }
  return {1.0 + rho * sum, rho * dsum};
}

// One bracketed secular root in the open interval (lo, hi) whose endpoint
// signs are known to be (-, +). Bisection narrows the interval to 1e-4 of its
// width, then safeguarded Newton takes over, falling back to bisection steps
// whenever an iterate leaves the bracket.
double secular_root(const std::vector<double>& d, const std::vector<double>& mu, double rho,
                    double lo, double hi) {
  const double width0 = hi - lo;
  double a = lo, b = hi;
  double x = a + 0.5 * (b - a);
  int iter = 0;

  while (b - a > 1e-4 * width0) {
    if (++iter > kRootIterationCap) {
      raise(ErrorKind::ConvergenceFailure, "dpr1: bisection stalled");
    }
    x = a + 0.5 * (b - a);
    if (x <= a || x >= b) return x;
    const double w = eval_secular(d, mu, rho, x).w;
    if (w == 0.0) return x;
    (w < 0.0 ? a : b) = x;
  }

  x = a + 0.5 * (b - a);
  while (true) {
    if (++iter > kRootIterationCap) {
      raise(ErrorKind::ConvergenceFailure, "dpr1: root refinement exceeded iteration cap");
    }
    if (x <= a || x >= b) x = a + 0.5 * (b - a);
    if (x <= a || x >= b) break;  // interval exhausted in floating point
    const SecularEval e = eval_secular(d, mu, rho, x);
    if (e.w == 0.0) return x;
    (e.w < 0.0 ? a : b) = x;
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    if (b - a <= 4.0 * std::numeric_limits<double>::epsilon() * scale) break;
    const double newton = x - e.w / e.dw;
    x = (newton > a && newton < b) ? newton : a + 0.5 * (b - a);
  }
  return a + 0.5 * (b - a);
}

void apply_givens_rows(Matrix& t, std::size_t i, std::size_t j, double c, double s) {
  for (std::size_t k = 0; k < t.cols(); ++k) {
    const double ri = t(i, k);
    const double rj = t(j, k);
    t(i, k) = c * ri + s * rj;
    t(j, k) = -s * ri + c * rj;
  }
}

}  // namespace

double secular(double lambda, const Dpr1Problem& prob) {
  validate_problem(prob);
  if (!std::isfinite(lambda)) {
    raise(ErrorKind::NonFiniteInput, "secular: lambda is not finite");
  }
  for (double dj : prob.d) {
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() *
                       std::max({std::abs(dj), std::abs(lambda), 1.0});
    if (std::abs(lambda - dj) <= tol) {
      raise(ErrorKind::PoleEvaluation, "secular: lambda coincides with a pole at d=" +
                                           std::to_string(dj));
    }
  }
  return eval_secular(prob.d, prob.mu, prob.rho, lambda).w;
}

Dpr1Deflation deflate(const Dpr1Problem& prob, double tol) {
  validate_problem(prob);
  const std::size_t p = prob.d.size();

  // Sort non-increasing by diagonal entry; the permutation seeds the transform.
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return prob.d[a] > prob.d[b]; });

  std::vector<double> d(p), mu(p);
  Matrix t(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    d[i] = prob.d[order[i]];
    mu[i] = prob.mu[order[i]];
    t(i, order[i]) = 1.0;
  }

  const double gap_tol = tol * (std::abs(d[0]) + 1.0);

  // Merge near-equal diagonal entries into the nearest earlier surviving
  // index, zeroing the later mu component with a planar rotation. Iterate to
  // a fixed point; each pass only moves diagonal values within a merged run.
  bool changed = true;
  std::size_t guard = 0;
  while (changed && guard++ <= p) {
    changed = false;
    for (std::size_t j = 1; j < p; ++j) {
      if (mu[j] == 0.0) continue;
      std::size_t i = j;
      while (i > 0) {
        --i;
        if (mu[i] != 0.0) break;
      }
      if (mu[i] == 0.0) continue;
      if (d[i] - d[j] > gap_tol) continue;
      const double r = std::hypot(mu[i], mu[j]);
      const double c = mu[i] / r;
      const double s = mu[j] / r;
      const double di = d[i], dj = d[j];
      mu[i] = r;
      mu[j] = 0.0;
      d[i] = c * c * di + s * s * dj;
      d[j] = s * s * di + c * c * dj;
      apply_givens_rows(t, i, j, c, s);
      changed = true;
    }
  }

  double mu_norm = 0.0;
  for (double m : mu) mu_norm += m * m;
  mu_norm = std::sqrt(mu_norm);

  Dpr1Deflation out;
  out.transform = std::move(t);
  out.reduced.rho = prob.rho;
  for (std::size_t j = 0; j < p; ++j) {
    if (std::abs(mu[j]) <= tol * mu_norm) {
      DeflatedPair pair;
      pair.index = j;
      pair.value = d[j];
      pair.vector.resize(p);
      for (std::size_t k = 0; k < p; ++k) pair.vector[k] = out.transform(j, k);
      out.resolved.push_back(std::move(pair));
    } else {
      out.kept.push_back(j);
      out.reduced.d.push_back(d[j]);
      out.reduced.mu.push_back(mu[j]);
    }
  }
  return out;
}

Dpr1Spectrum solve(const Dpr1Problem& prob, double deflation_tol) {
  validate_problem(prob);
  const std::size_t p = prob.d.size();
  const Dpr1Deflation defl = deflate(prob, deflation_tol);
  const std::vector<double>& d = defl.reduced.d;
  const std::vector<double>& mu = defl.reduced.mu;
  const double rho = defl.reduced.rho;
  const std::size_t m = d.size();

  double mu_sq = 0.0;
  for (double v : mu) mu_sq += v * v;

  std::vector<double> roots(m);
  if (m == 1) {
    roots[0] = d[0] + rho * mu_sq;  // the single secular root in closed form
  } else if (m >= 2) {
    for (std::size_t j = 0; j < m; ++j) {
      const double lo = d[j];
      const double hi = (j == 0) ? d[0] + rho * mu_sq : d[j - 1];
      roots[j] = secular_root(d, mu, rho, lo, hi);
    }
  }

  struct Pair {
    double value;
    std::vector<double> vector;
    bool from_deflation;
  };
  std::vector<Pair> pairs;
  pairs.reserve(p);

  for (std::size_t j = 0; j < m; ++j) {
    const double lambda = roots[j];
    std::vector<double> y(m);
    for (std::size_t k = 0; k < m; ++k) {
      double gap = d[k] - lambda;
      if (gap == 0.0) {
        // Root collapsed onto a pole in floating point; restore the sign the
        // bracket guarantees (below lambda for k >= j, above otherwise).
        const double nudge = std::numeric_limits<double>::epsilon() *
                             std::max(std::abs(d[k]), 1.0);
        gap = (k >= j) ? -nudge : nudge;
      }
      y[k] = mu[k] / gap;
    }
    const double r = norm(y);
    std::vector<double> full(p, 0.0);
    for (std::size_t k = 0; k < m; ++k) full[defl.kept[k]] = y[k] / r;
    // Back to original coordinates through the accumulated transform.
    std::vector<double> orig(p, 0.0);
    for (std::size_t row = 0; row < p; ++row) {
      if (full[row] == 0.0) continue;
      for (std::size_t col = 0; col < p; ++col) orig[col] += defl.transform(row, col) * full[row];
    }
    pairs.push_back({lambda, std::move(orig), false});
  }
  for (const DeflatedPair& pair : defl.resolved) {
    pairs.push_back({pair.value, pair.vector, true});
  }

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pairs[a].value > pairs[b].value;
  });

  Dpr1Spectrum spectrum;
  spectrum.values.resize(p);
  spectrum.vectors = Matrix(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    const Pair& pr = pairs[order[j]];
    spectrum.values[j] = pr.value;
    for (std::size_t i = 0; i < p; ++i) spectrum.vectors(i, j) = pr.vector[i];
    if (pr.from_deflation) spectrum.deflated.push_back(j);
  }
  return spectrum;
}

}  // namespace pcadiag
