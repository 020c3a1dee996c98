#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "orbitframe/disk.hpp"

namespace orbitframe {

/// Normalized Moebius factor conj(a)/|a| * (a - z)/(1 - conj(a) z); z for a = 0.
/// Accepts any z with |z| <= 1.
Complex blaschke_factor(const DiskPoint& zero, Complex z);

/// Finite Blaschke product with the given zeros (multiplicities allowed).
/// The empty product is identically 1.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(PointSequence zeros) : zeros_(std::move(zeros)) {}

  const PointSequence& zeros() const noexcept { return zeros_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

  /// Product over the factors whose index is not in `omit`. Throws
  /// InvalidArgument for an out-of-range index.
  Complex evaluate(const DiskPoint& z, std::span<const std::size_t> omit = {}) const;

  /// Full product at an arbitrary point of the closed disk.
  Complex operator()(Complex z) const;

 private:
  PointSequence zeros_;
};

/// delta(B) = min_j |B_j(lambda_j)| where B_j omits the j-th factor.
/// A single zero gives 1; a repeated zero gives 0.
double delta(const BlaschkeProduct& b);

/// Sampled estimate of inf{|B(z)| : rho(z, zeros) >= gamma}.
///
/// By the minimum principle for 1/B on the region, the infimum is attained on
/// the collar circles rho(z, zero) = gamma, so each collar circle is sampled at
/// `samples` angles, together with a samples x samples polar grid over the disk
/// of radius (max|zero| + gamma)/(1 + max|zero| gamma). Grid angles are rotated
/// by a seed-derived offset. The returned minimum over admissible samples is an
/// upper estimate of the true infimum.
double lower_bound_off_zeros(const BlaschkeProduct& b, double gamma, std::size_t samples,
                             std::uint64_t seed = 0);

}  // namespace orbitframe
