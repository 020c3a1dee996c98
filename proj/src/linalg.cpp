#include "orbitframe/linalg.hpp"

#include <algorithm>
#include <string>

#include "orbitframe/errors.hpp"

namespace orbitframe {

RVector hermitian_eigenvalues(const CMatrix& g) {
  if (g.rows() != g.cols()) throw InvalidArgument("hermitian_eigenvalues: matrix is not square");
  if (g.rows() == 0) return RVector{};
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(g);
  if (solver.info() != Eigen::Success) throw NumericalError("hermitian eigen solve did not converge");
  const RVector& theta = solver.eigenvalues();
  const CMatrix& v = solver.eigenvectors();
  const double norm = std::max(std::abs(theta(0)), std::abs(theta(theta.size() - 1)));
  const double limit = kEigenResidualTol * std::max(norm, 1e-300);
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    const double residual = (g * v.col(k) - theta(k) * v.col(k)).norm();
    if (residual > limit) {
      throw NumericalError("hermitian eigenpair residual " + std::to_string(residual) +
                           " exceeds tolerance");
    }
  }
  return theta;
}

Extremes extremal_eigenvalues(const CMatrix& g) {
  const RVector theta = hermitian_eigenvalues(g);
  if (theta.size() == 0) return {};
  return {theta(0), theta(theta.size() - 1)};
}

double smallest_singular_value(const CMatrix& a) {
  if (a.cols() == 0) return 0.0;
  if (a.cols() > a.rows()) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

CMatrix principal_submatrix(const CMatrix& g, std::span<const std::size_t> idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  CMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      out(a, b) = g(static_cast<Eigen::Index>(idx[a]), static_cast<Eigen::Index>(idx[b]));
  return out;
}

}  // namespace orbitframe
