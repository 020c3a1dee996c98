#include "orbitframe/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitframe/errors.hpp"
#include "orbitframe/kernels.hpp"

namespace orbitframe {

void OrbitSystem::validate() const {
  if (vectors.empty()) throw InvalidArgument("orbit system needs at least one seed vector");
  for (std::size_t i = 0; i < vectors.size(); ++i)
    if (static_cast<std::size_t>(vectors[i].size()) != eigenvalues.size())
      throw InvalidArgument("seed vector " + std::to_string(i) + " has length " +
                            std::to_string(vectors[i].size()) + ", expected " +
                            std::to_string(eigenvalues.size()));
}

OrbitSystem NormalizedSystem::reconstruct() const {
  OrbitSystem s;
  s.eigenvalues = eigenvalues;
  const auto m = static_cast<Eigen::Index>(alpha.orbits());
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  for (Eigen::Index i = 0; i < m; ++i) {
    CVector a(n);
    for (Eigen::Index j = 0; j < n; ++j)
      a(j) = d(j) * std::conj(alpha.entries()(i, j)) *
             std::sqrt(eigenvalues[static_cast<std::size_t>(j)].weight());
    s.vectors.push_back(std::move(a));
  }
  return s;
}

NormalizedSystem normalize(const OrbitSystem& system) {
  system.validate();
  const auto m = static_cast<Eigen::Index>(system.orbits());
  const auto n = static_cast<Eigen::Index>(system.size());
  CMatrix alpha(m, n);
  RVector d(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double energy = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) energy += std::norm(system.vectors[i](j));
    if (!(energy > 0.0))
      throw ZeroColumnError(static_cast<std::size_t>(j),
                            "column " + std::to_string(j) + " of the seed vectors vanishes");
    const double norm = std::sqrt(energy);
    for (Eigen::Index i = 0; i < m; ++i) alpha(i, j) = std::conj(system.vectors[i](j)) / norm;
    d(j) = std::sqrt(energy / system.eigenvalues[static_cast<std::size_t>(j)].weight());
  }
  NormalizedSystem ns{system.eigenvalues, d, AlphaMatrix(std::move(alpha)), 1.0};
  if (n > 0) ns.bound_c = std::max({1.0, d.maxCoeff(), 1.0 / d.minCoeff()});
  return ns;
}

NormalizedSystem unit_system(PointSequence eigenvalues, AlphaMatrix alpha) {
  if (alpha.size() != eigenvalues.size())
    throw InvalidArgument("alpha column count does not match the eigenvalues");
  const auto n = static_cast<Eigen::Index>(eigenvalues.size());
  return {std::move(eigenvalues), RVector::Ones(n), std::move(alpha), 1.0};
}

CMatrix frame_form(const NormalizedSystem& ns) {
  return multi_orbit_form(gram(ns.eigenvalues), ns.alpha);
}

FrameBounds exact_frame_bounds(const NormalizedSystem& ns) {
  if (ns.eigenvalues.empty()) return {};
  const Extremes e = extremal_eigenvalues(frame_form(ns));
  return {std::max(e.min, 0.0), e.max};
}

FrameBounds system_frame_bounds(const NormalizedSystem& ns) {
  if (ns.eigenvalues.empty()) return {};
  const CMatrix dm = ns.d.cast<Complex>().asDiagonal();
  const Extremes e = extremal_eigenvalues(dm * frame_form(ns) * dm);
  return {std::max(e.min, 0.0), e.max};
}

CMatrix truncated_orbit_form(const NormalizedSystem& ns, std::size_t n_max) {
  const auto n = static_cast<Eigen::Index>(ns.eigenvalues.size());
  CMatrix acc = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(ns.alpha.orbits()); ++i) {
    // v = A^k a~^i, advanced one power at a time
    CVector v(n);
    for (Eigen::Index j = 0; j < n; ++j)
      v(j) = std::conj(ns.alpha.entries()(i, j)) *
             std::sqrt(ns.eigenvalues[static_cast<std::size_t>(j)].weight());
    for (std::size_t k = 0; k <= n_max; ++k) {
      acc += v * v.adjoint();
      for (Eigen::Index j = 0; j < n; ++j) v(j) *= ns.eigenvalues[static_cast<std::size_t>(j)].value();
    }
  }
  return (acc + acc.adjoint()) / 2.0;
}

FrameBounds truncated_orbit_bounds(const NormalizedSystem& ns, std::size_t n_max) {
  if (ns.eigenvalues.empty()) return {};
  const Extremes e = extremal_eigenvalues(truncated_orbit_form(ns, n_max));
  return {std::max(e.min, 0.0), e.max};
}

double orbit_tail_bound(const NormalizedSystem& ns, std::size_t n_max) {
  double rmax = 0.0;
  for (const auto& l : ns.eigenvalues) rmax = std::max(rmax, l.abs());
  const double mj = static_cast<double>(ns.alpha.orbits() * ns.eigenvalues.size());
  return mj * std::pow(rmax, 2.0 * static_cast<double>(n_max + 1)) / (1.0 - rmax * rmax);
}

std::size_t truncation_for(const NormalizedSystem& ns, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("truncation tolerance must be positive");
  double rmax = 0.0;
  for (const auto& l : ns.eigenvalues) rmax = std::max(rmax, l.abs());
  if (rmax == 0.0) return 0;
  const double mj = static_cast<double>(ns.alpha.orbits() * ns.eigenvalues.size());
  // m J rho^{2(N+1)} / (1 - rho^2) < tol
  const double need = std::log(tol * (1.0 - rmax * rmax) / mj) / (2.0 * std::log(rmax)) - 1.0;
  std::size_t n = need <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(need));
  while (orbit_tail_bound(ns, n) >= tol) ++n;
  return n;
}

BasisProfile standard_basis_profile(const OrbitSystem& system) {
  system.validate();
  BasisProfile prof;
  const auto n = system.size();
  prof.ratios.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    double energy = 0.0;
    for (const auto& a : system.vectors) energy += std::norm(a(static_cast<Eigen::Index>(j)));
    prof.ratios[j] = energy / system.eigenvalues[j].weight();
    if (energy == 0.0) prof.vanishing.push_back(j);
  }
  if (n > 0) {
    prof.min = *std::min_element(prof.ratios.begin(), prof.ratios.end());
    prof.max = *std::max_element(prof.ratios.begin(), prof.ratios.end());
  }
  return prof;
}

TailBound tail_lower_bound(const NormalizedSystem& ns, std::size_t n0) {
  if (n0 < 1) throw InvalidArgument("tail_lower_bound needs n0 >= 1");
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < ns.eigenvalues.size(); ++j)
    if (ns.eigenvalues[j].value() != Complex(0.0, 0.0)) active.push_back(j);
  TailBound tb;
  if (active.empty()) {
    tb.all_zero = true;
    return tb;
  }
  const CMatrix m = principal_submatrix(frame_form(ns), active);
  tb.d_sq = std::max(extremal_eigenvalues(m).min, 0.0);

  // Sum over n >= n0 replaces c_j by conj(lambda_j)^{n0} c_j.
  const auto k = static_cast<Eigen::Index>(active.size());
  CVector scale(k);
  double min_pow = std::numeric_limits<double>::infinity();
  for (Eigen::Index a = 0; a < k; ++a) {
    const Complex l = ns.eigenvalues[active[static_cast<std::size_t>(a)]].value();
    Complex power(1.0, 0.0);
    for (std::size_t t = 0; t < n0; ++t) power *= std::conj(l);
    scale(a) = power;
    min_pow = std::min(min_pow, std::norm(power));
  }
  CMatrix tail = scale.adjoint().asDiagonal() * m * scale.asDiagonal();
  tail = (tail + tail.adjoint()) / 2.0;
  tb.exact = std::max(extremal_eigenvalues(tail).min, 0.0);
  tb.predicted = tb.d_sq * min_pow;
  return tb;
}

}  // namespace orbitframe
