#include "orbitframe/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "orbitframe/blaschke.hpp"
#include "orbitframe/errors.hpp"

namespace orbitframe {

Complex kernel_inner(const DiskPoint& lambda, const DiskPoint& mu) {
  const Complex l = lambda.value();
  const Complex u = mu.value();
  return std::sqrt(lambda.weight() * mu.weight()) / (1.0 - std::conj(u) * l);
}

CMatrix cross_gram(const PointSequence& rows, const PointSequence& cols) {
  CMatrix c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t k = 0; k < cols.size(); ++k)
      c(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = kernel_inner(rows[j], cols[k]);
  return c;
}

GramMatrix gram(const PointSequence& points) {
  GramMatrix g{cross_gram(points, points), points};
  for (Eigen::Index j = 0; j < g.entries.rows(); ++j) g.entries(j, j) = 1.0;
  return g;
}

RieszBounds riesz_bounds(const PointSequence& points) {
  if (points.empty()) return {};
  const Extremes e = extremal_eigenvalues(gram(points).entries);
  const bool degenerate = has_repetitions(points);
  return {degenerate ? 0.0 : std::max(e.min, 0.0), e.max, degenerate};
}

CMatrix biorthogonality_matrix(const PointSequence& points) {
  if (has_repetitions(points))
    throw SingularConfiguration("dual kernel family needs distinct points");
  const BlaschkeProduct b(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  CMatrix w(n, n);
  for (std::size_t j = 0; j < points.size(); ++j) {
    const std::size_t omit[] = {j};
    const Complex bj_at_own = b.evaluate(points[j], omit);
    const double sj = std::sqrt(points[j].weight());
    for (std::size_t i = 0; i < points.size(); ++i) {
      // <h k_{lambda_j}, k_{lambda_i}> = (1-|lambda_i|^2)^{1/2} h(lambda_i) k_{lambda_j}(lambda_i)
      const Complex li = points[i].value();
      const Complex kj_at_i = sj / (1.0 - std::conj(points[j].value()) * li);
      const Complex h = b.evaluate(points[i], omit) / bj_at_own;
      w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::sqrt(points[i].weight()) * h * kj_at_i;
    }
  }
  return w;
}

CMatrix dual_gram(const PointSequence& points) {
  const CMatrix w = biorthogonality_matrix(points);
  const CMatrix g = gram(points).entries;
  Eigen::LLT<CMatrix> llt(g);
  if (llt.info() != Eigen::Success)
    throw SingularConfiguration("kernel Gram matrix is not positive definite");
  const CMatrix x = llt.solve(w);
  CMatrix gamma = x.adjoint() * g * x;
  return (gamma + gamma.adjoint()) / 2.0;
}

double min_norm_interpolant_normsq(const PointSequence& points, const CVector& c) {
  if (static_cast<std::size_t>(c.size()) != points.size())
    throw InvalidArgument("interpolation data length does not match the points");
  if (points.empty()) return 0.0;
  const CMatrix gamma = dual_gram(points);
  return std::max((c.adjoint() * gamma * c)(0, 0).real(), 0.0);
}

double interpolation_constant(double delta) {
  if (!(delta > 0.0)) throw InvalidArgument("interpolation constant needs delta > 0");
  return 2.0 / std::pow(delta, 4) * (1.0 - 2.0 * std::log(delta));
}

CMatrix difference_gram(const PointSequence& points, const PointSequence& perturbed) {
  if (points.size() != perturbed.size())
    throw InvalidArgument("diff_bessel needs equally long sequences");
  for (std::size_t j = 0; j < points.size(); ++j)
    if (!(rho(points[j], perturbed[j]) < 1.0))
      throw InvalidArgument("perturbation must stay at pseudo-hyperbolic distance < 1");
  const auto n = static_cast<Eigen::Index>(points.size());
  CMatrix h(n, n);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      // <f_k, f_j> with f = k_lambda - k_lambda'
      h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          kernel_inner(points[j], points[k]) - kernel_inner(points[j], perturbed[k]) -
          kernel_inner(perturbed[j], points[k]) + kernel_inner(perturbed[j], perturbed[k]);
    }
  }
  return (h + h.adjoint()) / 2.0;
}

double diff_bessel(const PointSequence& points, const PointSequence& perturbed) {
  if (points.empty()) return 0.0;
  return std::max(extremal_eigenvalues(difference_gram(points, perturbed)).max, 0.0);
}

CMatrix multi_orbit_form(const GramMatrix& g, const AlphaMatrix& alpha) {
  if (alpha.size() != g.size())
    throw InvalidArgument("alpha has " + std::to_string(alpha.size()) + " columns for " +
                          std::to_string(g.size()) + " points");
  const auto n = static_cast<Eigen::Index>(g.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < alpha.entries().rows(); ++i) {
    const auto row = alpha.entries().row(i);
    m += row.adjoint().asDiagonal() * g.entries * row.transpose().asDiagonal();
  }
  return (m + m.adjoint()) / 2.0;
}

}  // namespace orbitframe
