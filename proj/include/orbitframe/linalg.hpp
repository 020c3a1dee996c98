#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace orbitframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Residual tolerance for accepted Hermitian eigenpairs, relative to the
/// operator norm of the matrix.
inline constexpr double kEigenResidualTol = 1e-9;

struct Extremes {
  double min = 0.0;
  double max = 0.0;
};

/// Ascending eigenvalues of a Hermitian matrix. Throws NumericalError when any
/// eigenpair has ||Gv - theta v|| > kEigenResidualTol * ||G||.
RVector hermitian_eigenvalues(const CMatrix& g);

Extremes extremal_eigenvalues(const CMatrix& g);

/// Smallest singular value of an arbitrary (rows x cols) matrix. For
/// cols > rows this is zero.
double smallest_singular_value(const CMatrix& a);

/// Principal submatrix on the given index set.
CMatrix principal_submatrix(const CMatrix& g, std::span<const std::size_t> idx);

}  // namespace orbitframe
