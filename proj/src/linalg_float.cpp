#include <Eigen/Dense>

#include "orthorep/linalg.hpp"

namespace orthorep {
namespace {

Eigen::MatrixXd to_eigen(const std::vector<FloatVector>& columns, int dim) {
  Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(columns.size()));
  for (size_t j = 0; j < columns.size(); ++j) {
    if (static_cast<int>(columns[j].size()) != dim)
      throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < dim; ++i) m(i, static_cast<Eigen::Index>(j)) = columns[j][i];
  }
  return m;
}

int svd_rank(const Eigen::JacobiSVD<Eigen::MatrixXd>& svd, double eps) {
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = eps * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) ++r;
  return r;
}

}  // namespace

int rank(const std::vector<FloatVector>& columns, double eps) {
  if (eps <= 0) throw std::invalid_argument("rank: tolerance must be positive");
  if (columns.empty()) return 0;
  const int dim = static_cast<int>(columns.front().size());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(columns, dim));
  return svd_rank(svd, eps);
}

std::vector<FloatVector> orthonormal_complement_basis(const std::vector<FloatVector>& preceding,
                                                      int dim, double eps) {
  if (eps <= 0) throw std::invalid_argument("tolerance must be positive");
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  std::vector<FloatVector> basis;
  if (preceding.empty()) {
    for (int i = 0; i < dim; ++i) {
      FloatVector e(dim, 0.0);
      e[i] = 1.0;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(preceding, dim), Eigen::ComputeFullU);
  const int r = svd_rank(svd, eps);
  const Eigen::MatrixXd& u = svd.matrixU();
  for (int j = r; j < dim; ++j) {
    FloatVector b(dim);
    for (int i = 0; i < dim; ++i) b[i] = u(i, j);
    basis.push_back(std::move(b));
  }
  return basis;
}

std::vector<double> singular_values(const std::vector<FloatVector>& columns, int dim) {
  if (columns.empty()) return {};
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(columns, dim));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

}  // namespace orthorep
