#include "pcadiag/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "pcadiag/error.hpp"

namespace pcadiag {

Matrix Matrix::identity(std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::row(std::size_t i) const {
  std::vector<double> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

std::vector<double> Matrix::col(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void Matrix::set_col(std::size_t j, const std::vector<double>& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorKind::ShapeViolation, "matmul: inner dimensions disagree");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::ShapeViolation, "add: shapes disagree");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] += b.data()[i];
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::ShapeViolation, "subtract: shapes disagree");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] -= b.data()[i];
  return c;
}

Matrix scale(const Matrix& a, double c) {
  Matrix s = a;
  for (double& v : s.data()) v *= c;
  return s;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
  if (a.cols() != x.size()) {
    raise(ErrorKind::ShapeViolation, "matvec: dimensions disagree");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

double frobenius_norm(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v * v;
  return std::sqrt(acc);
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

bool all_finite(const Matrix& a) {
  for (double v : a.data()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void validate_data_matrix(const Matrix& x) {
  if (x.rows() < 1 || x.cols() < 1) {
    raise(ErrorKind::InvalidMatrix, "data matrix must have at least one row and column");
  }
  if (!all_finite(x)) {
    raise(ErrorKind::NonFiniteInput, "data matrix contains NaN or Inf");
  }
}

void require_more_rows_than_cols(const Matrix& x) {
  if (x.cols() >= x.rows()) {
    raise(ErrorKind::ShapeViolation,
          "expected p < n (more observations than features), got n=" +
              std::to_string(x.rows()) + " p=" + std::to_string(x.cols()));
  }
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::NonFiniteInput: return "NonFiniteInput";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::IndexViolation: return "IndexViolation";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::PoleEvaluation: return "PoleEvaluation";
    case ErrorKind::InvalidProblem: return "InvalidProblem";
    case ErrorKind::ZeroMeanInput: return "ZeroMeanInput";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::DegenerateDirection: return "DegenerateDirection";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::GenerationFailure: return "GenerationFailure";
  }
  return "UnknownError";
}

}  // namespace pcadiag
