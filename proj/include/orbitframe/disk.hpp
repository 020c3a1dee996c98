#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "orbitframe/linalg.hpp"

namespace orbitframe {

/// Points closer than this to the unit circle are rejected.
inline constexpr double kBoundaryMargin = 1e-12;

/// A complex number strictly inside the unit disk, |z| < 1 - margin.
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex z, double margin = kBoundaryMargin);
  DiskPoint(double re, double im = 0.0) : DiskPoint(Complex(re, im)) {}

  Complex value() const noexcept { return z_; }
  double abs() const noexcept { return std::abs(z_); }
  /// 1 - |z|^2, the atom weight of the point.
  double weight() const noexcept { return 1.0 - std::norm(z_); }

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) noexcept { return a.z_ == b.z_; }

 private:
  Complex z_{0.0, 0.0};
};

/// Finite ordered list of disk points; repetitions are allowed.
using PointSequence = std::vector<DiskPoint>;

PointSequence make_points(std::span<const Complex> values);

/// Atom weights 1 - |z_j|^2 of the sequence.
std::vector<double> weights(const PointSequence& points);

/// True if some value occurs twice.
bool has_repetitions(const PointSequence& points);

/// Pseudo-hyperbolic ball {w : rho(center, w) < radius}.
class Ball {
 public:
  Ball(DiskPoint center, double radius);
  const DiskPoint& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  bool contains(const DiskPoint& w) const;

 private:
  DiskPoint center_;
  double radius_;
};

/// Pseudo-hyperbolic distance |z - w| / |1 - conj(z) w|.
double rho(const DiskPoint& z, const DiskPoint& w);

/// phi_lambda(z) = (lambda - z) / (1 - conj(lambda) z). With `normalized`
/// the result is multiplied by conj(lambda)/|lambda|; for lambda = 0 both
/// variants are the identity map.
Complex mobius(const DiskPoint& lambda, Complex z, bool normalized = false);
inline Complex mobius(const DiskPoint& lambda, const DiskPoint& z, bool normalized = false) {
  return mobius(lambda, z.value(), normalized);
}

/// Pseudo-hyperbolic sum of two radii, (a + b) / (1 + a b).
inline double hyperbolic_sum(double a, double b) { return (a + b) / (1.0 + a * b); }

/// Balls of equal radius r meet iff rho(centers) < 2r / (1 + r^2).
/// Unequal radii are rejected.
bool balls_intersect(const Ball& a, const Ball& b);

/// A pseudo-hyperbolic ball is a Euclidean disk; used for plotting.
struct EuclideanDisk {
  Complex center;
  double radius;
};
EuclideanDisk euclidean_disk(const Ball& ball);

}  // namespace orbitframe
