#pragma once

#include <cstddef>
#include <vector>

namespace pcadiag {

/// Dense real matrix, row-major storage. When used as a data matrix, rows are
/// observations and columns are features.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t k);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  std::vector<double> row(std::size_t i) const;
  std::vector<double> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<double>& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double c);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
bool all_finite(const Matrix& a);

// Small dense-vector helpers shared across the library.
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& v);
bool all_finite(const std::vector<double>& v);

/// Checks the data-matrix invariants: n >= 1, p >= 1, finite entries.
/// Throws InvalidMatrix / NonFiniteInput.
void validate_data_matrix(const Matrix& x);

/// Enforces the standing p < n assumption at data-level API boundaries.
/// Throws ShapeViolation.
void require_more_rows_than_cols(const Matrix& x);

}  // namespace pcadiag
