#pragma once

#include "orbitframe/alpha.hpp"
#include "orbitframe/disk.hpp"

namespace orbitframe {

/// <k_mu, k_lambda> = (1-|lambda|^2)^{1/2} (1-|mu|^2)^{1/2} / (1 - conj(mu) lambda),
/// for the normalized kernels k_a(z) = (1-|a|^2)^{1/2} / (1 - conj(a) z).
Complex kernel_inner(const DiskPoint& lambda, const DiskPoint& mu);

/// G(j, k) = <k_{lambda_k}, k_{lambda_j}>, so that c* G c = ||sum_j c_j k_{lambda_j}||^2.
struct GramMatrix {
  CMatrix entries;
  PointSequence source;

  std::size_t size() const noexcept { return source.size(); }
};

GramMatrix gram(const PointSequence& points);

/// C(j, k) = <k_{cols_k}, k_{rows_j}>.
CMatrix cross_gram(const PointSequence& rows, const PointSequence& cols);

struct RieszBounds {
  double lower = 0.0;  // C0
  double upper = 0.0;  // C1
  bool degenerate = false;
};

/// Extremal eigenvalues of the Gram matrix. Repeated points give
/// lower = 0 and degenerate = true.
RieszBounds riesz_bounds(const PointSequence& points);

/// W(i, j) = <g_j, k_{lambda_i}> with g_j = (B_j / B_j(lambda_j)) k_{lambda_j},
/// assembled through the reproducing property from Blaschke evaluations.
/// Throws SingularConfiguration on repeated points.
CMatrix biorthogonality_matrix(const PointSequence& points);

/// Gamma(i, j) = <g_j, g_i>. Since every g_j lies in span{k_lambda}, its
/// kernel coefficients X solve G X = W and Gamma = X* G X.
CMatrix dual_gram(const PointSequence& points);

/// ||g||^2 for the minimum-norm interpolant g = sum_i c_i g_i of the data
/// <g, k_{lambda_j}> = c_j.
double min_norm_interpolant_normsq(const PointSequence& points, const CVector& c);

/// Shapiro-Shields bound (2/delta^4)(1 - 2 log delta) on ||g||^2 / ||c||^2.
double interpolation_constant(double delta);

/// Gram matrix of the family f_j = k_{lambda_j} - k_{lambda'_j}.
CMatrix difference_gram(const PointSequence& points, const PointSequence& perturbed);

/// Bessel constant (largest eigenvalue of the difference Gram) of
/// {k_{lambda_j} - k_{lambda'_j}}.
double diff_bessel(const PointSequence& points, const PointSequence& perturbed);

/// M = sum_i D_i* G D_i with D_i = diag(alpha(i, .)):
/// c* M c = sum_i ||sum_j alpha(i,j) c_j k_{lambda_j}||^2.
CMatrix multi_orbit_form(const GramMatrix& g, const AlphaMatrix& alpha);

}  // namespace orbitframe
