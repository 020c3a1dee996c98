#pragma once

#include <cstddef>
#include <span>

#include "orbitframe/linalg.hpp"

namespace orbitframe {

inline constexpr double kColumnNormTol = 1e-10;

/// The m x J weight matrix alpha(i, j); every column has unit Euclidean norm.
class AlphaMatrix {
 public:
  AlphaMatrix() = default;
  /// Throws InvalidArgument when a column norm deviates from 1 by more than `tol`.
  explicit AlphaMatrix(CMatrix entries, double tol = kColumnNormTol);

  /// m = 1, alpha == 1.
  static AlphaMatrix ones(std::size_t size);

  std::size_t orbits() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  const CMatrix& entries() const noexcept { return entries_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// m x |cols| submatrix in the given column order.
  CMatrix columns(std::span<const std::size_t> cols) const;
  AlphaMatrix select(std::span<const std::size_t> cols) const;

 private:
  CMatrix entries_;
};

}  // namespace orbitframe
