#include "pcadiag/pca.hpp"

#include <string>

#include "pcadiag/error.hpp"

namespace pcadiag {

const char* to_string(PcaScheme scheme) {
  switch (scheme) {
    case PcaScheme::CovarianceEig: return "covariance_eig";
    case PcaScheme::SvdCentered: return "svd_centered";
    case PcaScheme::SvdUncentered: return "svd_uncentered";
  }
  return "unknown";
}

std::vector<double> column_mean(const Matrix& x) {
  validate_data_matrix(x);
  std::vector<double> mean(x.cols(), 0.0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) mean[j] += x(i, j);
  }
  for (double& m : mean) m /= static_cast<double>(x.rows());
  return mean;
}

Matrix center(const Matrix& x) {
  const std::vector<double> mean = column_mean(x);
  Matrix c = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) c(i, j) -= mean[j];
  }
  return c;
}

Matrix covariance(const Matrix& x) {
  validate_data_matrix(x);
  if (x.rows() < 2) {
    raise(ErrorKind::InsufficientData, "covariance: needs n >= 2 observations");
  }
  return scale(gram(center(x)), 1.0 / static_cast<double>(x.rows() - 1));
}

namespace {

void check_embedding_dim(const Matrix& x, std::size_t k) {
  if (k < 1 || k >= x.cols()) {
    raise(ErrorKind::IndexViolation,
          "embedding dimension k must satisfy 1 <= k < p, got k=" + std::to_string(k) +
              " p=" + std::to_string(x.cols()));
  }
}

Matrix leading_columns(const Matrix& m, std::size_t k) {
  Matrix out(m.rows(), k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, j) = m(i, j);
  }
  return out;
}

Embedding assemble(const Matrix& x, const Matrix& basis, std::size_t k,
                   std::vector<double> spectrum, PcaScheme scheme, bool project_centered) {
  PcaModel model;
  model.projection = leading_columns(basis, k);
  model.mean = column_mean(x);
  model.scheme = scheme;
  model.spectrum = std::move(spectrum);

  Embedding emb;
  emb.coords = matmul(project_centered ? center(x) : x, model.projection);
  emb.model = std::move(model);
  return emb;
}

}  // namespace

Embedding scheme1(const Matrix& x, std::size_t k, bool project_centered) {
  validate_data_matrix(x);
  require_more_rows_than_cols(x);
  check_embedding_dim(x, k);
  const EigResult eig = jacobi_eigh(covariance(x));
  return assemble(x, eig.vectors, k, eig.values, PcaScheme::CovarianceEig, project_centered);
}

Embedding scheme2(const Matrix& x, std::size_t k, bool do_center, bool project_centered) {
  validate_data_matrix(x);
  require_more_rows_than_cols(x);
  check_embedding_dim(x, k);
  const SvdResult dec = do_center ? svd(center(x)) : svd(x);
  std::vector<double> spectrum(dec.sigma.size());
  for (std::size_t j = 0; j < dec.sigma.size(); ++j) spectrum[j] = dec.sigma[j] * dec.sigma[j];
  return assemble(x, dec.v, k, std::move(spectrum),
                  do_center ? PcaScheme::SvdCentered : PcaScheme::SvdUncentered,
                  project_centered);
}

}  // namespace pcadiag
