#pragma once

#include <cstddef>
#include <vector>

#include "orbitframe/alpha.hpp"
#include "orbitframe/disk.hpp"

namespace orbitframe {

/// Diagonal operator with eigenvalues lambda_j and seed vectors a^1..a^m.
struct OrbitSystem {
  PointSequence eigenvalues;
  std::vector<CVector> vectors;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  std::size_t orbits() const noexcept { return vectors.size(); }
  /// Throws InvalidArgument on m = 0 or inconsistent vector lengths.
  void validate() const;
};

/// a(i, j) = d_j conj(alpha(i, j)) (1 - |lambda_j|^2)^{1/2}.
struct NormalizedSystem {
  PointSequence eigenvalues;
  RVector d;
  AlphaMatrix alpha;
  double bound_c = 1.0;  // max(max d_j, 1/min d_j)

  OrbitSystem reconstruct() const;
};

/// Throws ZeroColumnError on a column with sum_i |a(i, j)|^2 = 0.
NormalizedSystem normalize(const OrbitSystem& system);

/// Normalized system with d = 1, for direct (points, alpha) input.
NormalizedSystem unit_system(PointSequence eigenvalues, AlphaMatrix alpha);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// The form M = sum_i D_i* G D_i realizing sum_n sum_i |<A^n a~^i, c>|^2 = c* M c.
CMatrix frame_form(const NormalizedSystem& ns);

/// Extremal eigenvalues of frame_form: the exact frame bounds of the
/// normalized orbits.
FrameBounds exact_frame_bounds(const NormalizedSystem& ns);

/// Frame bounds of the unnormalized system {A^n a^i}: extremal eigenvalues
/// of diag(d) M diag(d).
FrameBounds system_frame_bounds(const NormalizedSystem& ns);

/// M_N = sum_i sum_{n<=N} v v* with v = A^n a~^i, accumulated term by term.
CMatrix truncated_orbit_form(const NormalizedSystem& ns, std::size_t n_max);
FrameBounds truncated_orbit_bounds(const NormalizedSystem& ns, std::size_t n_max);

/// Upper bound m J rho^{2(N+1)} / (1 - rho^2), rho = max |lambda_j|, on ||M - M_N||.
double orbit_tail_bound(const NormalizedSystem& ns, std::size_t n_max);

/// Smallest N whose tail bound is below `tol`.
std::size_t truncation_for(const NormalizedSystem& ns, double tol);

struct BasisProfile {
  /// sum_n sum_i |<A^n a^i, e_j>|^2 = sum_i |a(i,j)|^2 / (1 - |lambda_j|^2).
  std::vector<double> ratios;
  std::vector<std::size_t> vanishing;
  double min = 0.0;
  double max = 0.0;
};

BasisProfile standard_basis_profile(const OrbitSystem& system);

struct TailBound {
  double predicted = 0.0;  // D^2 min_{lambda_j != 0} |lambda_j|^{2 n0}
  double exact = 0.0;      // min eigenvalue of the tail form on lambda_j != 0
  double d_sq = 0.0;       // D^2 restricted to lambda_j != 0
  bool all_zero = false;
};

/// Lower frame bound of {A^n a~^i : n >= n0} on (Ker A)^perp.
TailBound tail_lower_bound(const NormalizedSystem& ns, std::size_t n0);

}  // namespace orbitframe
