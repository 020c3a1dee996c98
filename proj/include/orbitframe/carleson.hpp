#pragma once

#include <utility>
#include <vector>

#include "orbitframe/alpha.hpp"
#include "orbitframe/disk.hpp"

namespace orbitframe {

/// mu = sum_j (1 - |lambda_j|^2) delta_{lambda_j}.
struct AtomicMeasure {
  PointSequence atoms;
  std::vector<double> weights;

  static AtomicMeasure from_points(PointSequence points);
  double total_mass() const;
};

/// Q = {r e^{it} : 1 - ell <= r < 1, |t - theta0| <= ell}.
struct AngularSquare {
  double theta0;
  double ell;

  AngularSquare(double theta0, double ell);
  bool contains(const DiskPoint& z) const;
};

double measure_of(const AtomicMeasure& mu, const AngularSquare& q);

/// max of mu(Q) / ell(Q) over the candidate squares with theta0 = arg lambda_j
/// and ell in {pairwise angular gaps in (0, 1]} U {1 - |lambda_j|} U {1}.
/// Membership tests carry a 1e-12 slack so the value is stable under rotation.
double carleson_norm(const AtomicMeasure& mu);

/// Bessel constant B^2 of {alpha(i, j) k_{lambda_j}} over i = 1..m, i.e. the
/// largest eigenvalue of sum_i D_i* G D_i.
double multi_bessel(const PointSequence& points, const AlphaMatrix& alpha);

/// Carleson norms (||mu0||*, ||mu_r||*) for a perturbation with
/// rho(lambda_j, lambda'_j) < r. Throws InvalidArgument otherwise.
std::pair<double, double> perturbation_ratio(const AtomicMeasure& mu0, double r,
                                             const PointSequence& perturbed);

/// Stand-in for C(r): (1 + r)/(1 - r) times the enclosing-square factor 3.
inline double perturbation_constant(double r) { return 3.0 * (1.0 + r) / (1.0 - r); }

}  // namespace orbitframe
