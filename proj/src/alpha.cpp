#include "orbitframe/alpha.hpp"

#include <cmath>
#include <string>

#include "orbitframe/errors.hpp"

namespace orbitframe {

AlphaMatrix::AlphaMatrix(CMatrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.rows() == 0) throw InvalidArgument("alpha matrix needs at least one row");
  for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
    const double n2 = entries_.col(j).squaredNorm();
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
      throw InvalidArgument("alpha column " + std::to_string(j) + " has squared norm " +
                            std::to_string(n2) + ", expected 1");
    }
  }
}

AlphaMatrix AlphaMatrix::ones(std::size_t size) {
  return AlphaMatrix(CMatrix::Ones(1, static_cast<Eigen::Index>(size)));
}

CMatrix AlphaMatrix::columns(std::span<const std::size_t> cols) const {
  CMatrix out(entries_.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= size()) throw InvalidArgument("alpha column index out of range");
    out.col(static_cast<Eigen::Index>(k)) = entries_.col(static_cast<Eigen::Index>(cols[k]));
  }
  return out;
}

AlphaMatrix AlphaMatrix::select(std::span<const std::size_t> cols) const {
  return AlphaMatrix(columns(cols));
}

}  // namespace orbitframe
