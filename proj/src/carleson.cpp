#include "orbitframe/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "orbitframe/errors.hpp"
#include "orbitframe/kernels.hpp"

namespace orbitframe {
namespace {

constexpr double kSlack = 1e-12;

double angular_distance(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  double d = std::fmod(std::abs(a - b), two_pi);
  return std::min(d, two_pi - d);
}

}  // namespace

AtomicMeasure AtomicMeasure::from_points(PointSequence points) {
  AtomicMeasure mu;
  mu.weights = orbitframe::weights(points);
  mu.atoms = std::move(points);
  return mu;
}

double AtomicMeasure::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

AngularSquare::AngularSquare(double theta0_, double ell_) : theta0(theta0_), ell(ell_) {
  if (!(ell > 0.0 && ell <= 1.0)) throw InvalidArgument("angular square side must lie in (0, 1]");
}

bool AngularSquare::contains(const DiskPoint& z) const {
  if (z.abs() < 1.0 - ell - kSlack) return false;
  // The origin has no argument; it belongs to every square with ell = 1.
  if (z.value() == Complex(0.0, 0.0)) return true;
  return angular_distance(std::arg(z.value()), theta0) <= ell + kSlack;
}

double measure_of(const AtomicMeasure& mu, const AngularSquare& q) {
  double s = 0.0;
  for (std::size_t j = 0; j < mu.atoms.size(); ++j)
    if (q.contains(mu.atoms[j])) s += mu.weights[j];
  return s;
}

double carleson_norm(const AtomicMeasure& mu) {
  if (mu.atoms.empty()) throw InvalidArgument("carleson_norm of an empty measure");
  const std::size_t n = mu.atoms.size();
  std::vector<double> args(n);
  for (std::size_t j = 0; j < n; ++j) args[j] = std::arg(mu.atoms[j].value());

  std::vector<double> sides{1.0};
  for (std::size_t j = 0; j < n; ++j) {
    const double s = 1.0 - mu.atoms[j].abs();
    if (s > 0.0 && s <= 1.0) sides.push_back(s);
    for (std::size_t k = j + 1; k < n; ++k) {
      const double g = angular_distance(args[j], args[k]);
      if (g > 0.0 && g <= 1.0) sides.push_back(g);
    }
  }
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());

  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (double ell : sides) {
      const AngularSquare q(args[j], ell);
      best = std::max(best, measure_of(mu, q) / ell);
    }
  return best;
}

double multi_bessel(const PointSequence& points, const AlphaMatrix& alpha) {
  if (points.empty()) return 0.0;
  return extremal_eigenvalues(multi_orbit_form(gram(points), alpha)).max;
}

std::pair<double, double> perturbation_ratio(const AtomicMeasure& mu0, double r,
                                             const PointSequence& perturbed) {
  if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("perturbation radius must lie in (0, 1)");
  if (perturbed.size() != mu0.atoms.size())
    throw InvalidArgument("perturbed sequence length differs from the measure");
  for (std::size_t j = 0; j < perturbed.size(); ++j)
    if (!(rho(mu0.atoms[j], perturbed[j]) < r))
      throw InvalidArgument("perturbation of atom " + std::to_string(j) + " exceeds r");
  return {carleson_norm(mu0), carleson_norm(AtomicMeasure::from_points(perturbed))};
}

}  // namespace orbitframe
