#include "orbitframe/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "orbitframe/errors.hpp"
#include "orbitframe/rng.hpp"

namespace orbitframe {

Complex blaschke_factor(const DiskPoint& zero, Complex z) {
  const Complex a = zero.value();
  if (a == Complex(0.0, 0.0)) return z;
  return std::conj(a) / std::abs(a) * (a - z) / (1.0 - std::conj(a) * z);
}

Complex BlaschkeProduct::evaluate(const DiskPoint& z, std::span<const std::size_t> omit) const {
  for (auto k : omit)
    if (k >= zeros_.size()) throw InvalidArgument("omitted factor index out of range");
  Complex prod(1.0, 0.0);
  for (std::size_t k = 0; k < zeros_.size(); ++k) {
    if (std::find(omit.begin(), omit.end(), k) != omit.end()) continue;
    prod *= blaschke_factor(zeros_[k], z.value());
  }
  return prod;
}

Complex BlaschkeProduct::operator()(Complex z) const {
  Complex prod(1.0, 0.0);
  for (const auto& a : zeros_) prod *= blaschke_factor(a, z);
  return prod;
}

double delta(const BlaschkeProduct& b) {
  const auto& zeros = b.zeros();
  double best = 1.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    Complex prod(1.0, 0.0);
    for (std::size_t k = 0; k < zeros.size(); ++k)
      if (k != j) prod *= blaschke_factor(zeros[k], zeros[j].value());
    best = std::min(best, std::abs(prod));
  }
  return best;
}

double lower_bound_off_zeros(const BlaschkeProduct& b, double gamma, std::size_t samples,
                             std::uint64_t seed) {
  if (samples == 0) throw InvalidArgument("lower_bound_off_zeros needs samples > 0");
  if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidArgument("gamma must lie in (0, 1)");
  const auto& zeros = b.zeros();
  if (zeros.empty()) return 1.0;

  Rng rng(seed);
  const double offset = rng.uniform();
  const double two_pi = 2.0 * std::numbers::pi;
  // Collar points sit exactly at distance gamma from their own zero; a relative
  // slack keeps them admissible against rounding.
  const double admissible = gamma * (1.0 - 1e-12);

  double best = 1.0;
  auto consider = [&](Complex z) {
    if (!(std::abs(z) < 1.0)) return;
    const DiskPoint p(z, 0.0);
    for (const auto& a : zeros)
      if (rho(a, p) < admissible) return;
    best = std::min(best, std::abs(b(z)));
  };

  for (const auto& a : zeros) {
    for (std::size_t t = 0; t < samples; ++t) {
      const double angle = two_pi * (static_cast<double>(t) + offset) / static_cast<double>(samples);
      consider(mobius(a, gamma * std::polar(1.0, angle)));
    }
  }

  double rmax = 0.0;
  for (const auto& a : zeros) rmax = std::max(rmax, a.abs());
  const double hull = hyperbolic_sum(rmax, gamma);
  for (std::size_t ir = 0; ir < samples; ++ir) {
    const double r = hull * (static_cast<double>(ir) + 0.5) / static_cast<double>(samples);
    for (std::size_t it = 0; it < samples; ++it) {
      const double angle = two_pi * (static_cast<double>(it) + offset) / static_cast<double>(samples);
      consider(std::polar(r, angle));
    }
  }
  return best;
}

}  // namespace orbitframe
