#include "orbitframe/disk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orbitframe/errors.hpp"

namespace orbitframe {

DiskPoint::DiskPoint(Complex z, double margin) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(std::abs(z) < 1.0 - margin)) {
    std::ostringstream os;
    os.precision(17);
    os << "point (" << z.real() << ", " << z.imag() << ") is not inside the disk |z| < 1 - "
       << margin;
    throw DomainError(os.str());
  }
}

PointSequence make_points(std::span<const Complex> values) {
  PointSequence out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

std::vector<double> weights(const PointSequence& points) {
  std::vector<double> w;
  w.reserve(points.size());
  for (const auto& p : points) w.push_back(p.weight());
  return w;
}

bool has_repetitions(const PointSequence& points) {
  std::vector<std::pair<double, double>> keys;
  keys.reserve(points.size());
  for (const auto& p : points) keys.emplace_back(p.value().real(), p.value().imag());
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

Ball::Ball(DiskPoint center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0 && radius < 1.0)) throw InvalidArgument("ball radius must lie in (0, 1)");
}

bool Ball::contains(const DiskPoint& w) const { return rho(center_, w) < radius_; }

double rho(const DiskPoint& z, const DiskPoint& w) {
  const Complex a = z.value();
  const Complex b = w.value();
  return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

Complex mobius(const DiskPoint& lambda, Complex z, bool normalized) {
  const Complex l = lambda.value();
  if (l == Complex(0.0, 0.0)) return z;
  const Complex phi = (l - z) / (1.0 - std::conj(l) * z);
  if (!normalized) return phi;
  return std::conj(l) / std::abs(l) * phi;
}

bool balls_intersect(const Ball& a, const Ball& b) {
  if (a.radius() != b.radius()) throw InvalidArgument("balls_intersect requires equal radii");
  const double r = a.radius();
  return rho(a.center(), b.center()) < hyperbolic_sum(r, r);
}

EuclideanDisk euclidean_disk(const Ball& ball) {
  const Complex z = ball.center().value();
  const double r = ball.radius();
  const double den = 1.0 - r * r * std::norm(z);
  return {z * (1.0 - r * r) / den, r * (1.0 - std::norm(z)) / den};
}

}  // namespace orbitframe
