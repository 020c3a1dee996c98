#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "orbitframe/errors.hpp"
#include "orbitframe/oracle.hpp"

using namespace orbitframe;

namespace {

OrbitSystem unit_kernels(const PointSequence& p) {
  OrbitSystem s;
  s.eigenvalues = p;
  CVector a(static_cast<Eigen::Index>(p.size()));
  for (std::size_t j = 0; j < p.size(); ++j) a(static_cast<Eigen::Index>(j)) = std::sqrt(p[j].weight());
  s.vectors.push_back(a);
  return s;
}

CVector random_vector(Rng& rng, Eigen::Index n) {
  CVector c(n);
  for (Eigen::Index k = 0; k < n; ++k) c(k) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return c;
}

}  // namespace

TEST_CASE("normalize examples") {
  const PointSequence p{DiskPoint(0.1), DiskPoint(Complex(0.3, -0.5)), DiskPoint(-0.7)};
  const NormalizedSystem ns = normalize(unit_kernels(p));
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(ns.d(j) == doctest::Approx(1.0));
    CHECK(std::abs(ns.alpha.entries()(0, j) - 1.0) < 1e-15);
  }
  CHECK(ns.bound_c == doctest::Approx(1.0));

  OrbitSystem doubled = unit_kernels(p);
  doubled.vectors[0] *= 2.0;
  const NormalizedSystem n2 = normalize(doubled);
  CHECK((n2.d - 2.0 * ns.d).norm() < 1e-14);
  CHECK((n2.alpha.entries() - ns.alpha.entries()).norm() < 1e-14);
  CHECK(n2.bound_c == doctest::Approx(2.0));

  OrbitSystem twin;
  twin.eigenvalues = p;
  twin.vectors = {CVector::Constant(3, Complex(0.3, 0.4)), CVector::Constant(3, Complex(0.3, 0.4))};
  const NormalizedSystem nt = normalize(twin);
  for (Eigen::Index j = 0; j < 3; ++j) {
    CHECK(std::abs(nt.alpha.entries()(0, j) - std::conj(Complex(0.3, 0.4)) / 0.5 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(std::abs(nt.alpha.entries()(1, j)) - 1.0 / std::sqrt(2.0)) < 1e-15);
  }
}

TEST_CASE("normalize round trip and bound") {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const auto rc = oracles::random_case(rng, 20, 4);
    const OrbitSystem s = oracles::to_system(rc, rng);
    const NormalizedSystem ns = normalize(s);
    const OrbitSystem back = ns.reconstruct();
    for (std::size_t i = 0; i < s.orbits(); ++i) CHECK((back.vectors[i] - s.vectors[i]).cwiseAbs().maxCoeff() < 1e-10);
    for (Eigen::Index j = 0; j < ns.d.size(); ++j) {
      CHECK(ns.d(j) <= ns.bound_c * (1.0 + 1e-15));
      CHECK(ns.d(j) >= 1.0 / ns.bound_c * (1.0 - 1e-15));
    }
  }
}

TEST_CASE("normalize and profile flag zero columns") {
  OrbitSystem s = unit_kernels({DiskPoint(0.1), DiskPoint(0.2), DiskPoint(0.3)});
  s.vectors[0](1) = 0.0;
  try {
    normalize(s);
    CHECK(false);
  } catch (const ZeroColumnError& e) {
    CHECK(e.column() == 1);
  }
  const BasisProfile prof = standard_basis_profile(s);
  CHECK(prof.vanishing == std::vector<std::size_t>{1});
  CHECK(prof.min == 0.0);
  CHECK(prof.ratios[0] == doctest::Approx(1.0));

  OrbitSystem bad = s;
  bad.vectors[0].resize(2);
  CHECK_THROWS_AS(normalize(bad), InvalidArgument);
  bad.vectors.clear();
  CHECK_THROWS_AS(normalize(bad), InvalidArgument);
}

TEST_CASE("standard basis profile equals squared d") {
  Rng rng(2);
  const auto rc = oracles::random_case(rng, 12, 3);
  const OrbitSystem s = oracles::to_system(rc, rng);
  const NormalizedSystem ns = normalize(s);
  const BasisProfile prof = standard_basis_profile(s);
  for (std::size_t j = 0; j < prof.ratios.size(); ++j)
    CHECK(prof.ratios[j] == doctest::Approx(ns.d(static_cast<Eigen::Index>(j)) * ns.d(static_cast<Eigen::Index>(j))));
  CHECK(prof.min == doctest::Approx(ns.d.minCoeff() * ns.d.minCoeff()));
  CHECK(prof.max == doctest::Approx(ns.d.maxCoeff() * ns.d.maxCoeff()));
  const BasisProfile unit = standard_basis_profile(unit_kernels(rc.points));
  for (double r : unit.ratios) CHECK(r == doctest::Approx(1.0));
}

TEST_CASE("exact_frame_bounds examples") {
  const FrameBounds one = exact_frame_bounds(unit_system({DiskPoint(0.6)}, AlphaMatrix::ones(1)));
  CHECK(one.lower == doctest::Approx(1.0));
  CHECK(one.upper == doctest::Approx(1.0));
  const FrameBounds two = exact_frame_bounds(unit_system({DiskPoint(0.0), DiskPoint(0.5)}, AlphaMatrix::ones(2)));
  CHECK(two.lower == doctest::Approx(0.1339745962155614).epsilon(1e-12));
  CHECK(two.upper == doctest::Approx(1.8660254037844386).epsilon(1e-12));

  const PointSequence rep{DiskPoint(0.4), DiskPoint(0.4)};
  CMatrix orth(2, 2);
  orth << 1.0, 0.0, 0.0, 1.0;
  CHECK(exact_frame_bounds(unit_system(rep, AlphaMatrix(orth))).lower > 0.1);
  CMatrix rank1(2, 2);
  rank1 << 0.6, 0.6, 0.8, 0.8;
  CHECK(exact_frame_bounds(unit_system(rep, AlphaMatrix(rank1))).lower < 1e-12);
}

TEST_CASE("truncated orbit sums") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto rc = oracles::random_case(rng, 16, 3, 0.9);
    const NormalizedSystem ns = unit_system(rc.points, rc.alpha);
    const std::size_t n = truncation_for(ns, 1e-8);
    CHECK(orbit_tail_bound(ns, n) < 1e-8);
    const FrameBounds a = exact_frame_bounds(ns), b = truncated_orbit_bounds(ns, n);
    CHECK(std::abs(a.lower - b.lower) <= 1e-7);
    CHECK(std::abs(a.upper - b.upper) <= 1e-7);

    const CMatrix m = frame_form(ns);
    const CVector c = random_vector(rng, static_cast<Eigen::Index>(rc.points.size()));
    const double full = (c.adjoint() * m * c)(0, 0).real();
    for (int cut : {2, 10, 40}) {
      const double partial = oracles::orbit_energy(ns, c, cut);
      CHECK(partial <= full + 1e-10);
      CHECK(full - partial <= orbit_tail_bound(ns, static_cast<std::size_t>(cut)) * c.squaredNorm() + 1e-10);
    }
  }

  const PointSequence p{DiskPoint(0.2), DiskPoint(Complex(0.0, 0.5))};
  const NormalizedSystem ns = unit_system(p, AlphaMatrix::ones(2));
  const CMatrix m0 = truncated_orbit_form(ns, 0);
  CVector b(2);
  b << std::sqrt(p[0].weight()), std::sqrt(p[1].weight());
  CHECK((m0 - b * b.adjoint()).norm() < 1e-15);
  CHECK(truncated_orbit_bounds(ns, 0).lower < 1e-15);

  Rng r2(4);
  const AlphaMatrix a = oracles::random_alpha(r2, 3, 3);
  const NormalizedSystem zero = unit_system({DiskPoint(0.0), DiskPoint(0.0), DiskPoint(0.0)}, a);
  for (std::size_t n : {0u, 3u}) {
    const FrameBounds x = truncated_orbit_bounds(zero, n), y = exact_frame_bounds(zero);
    CHECK(x.lower == doctest::Approx(y.lower));
    CHECK(x.upper == doctest::Approx(y.upper));
  }
  CHECK(truncation_for(zero, 1e-8) == 0);
}

TEST_CASE("frame bounds are permutation invariant and match the rank") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto rc = oracles::clustered_case(rng, 12, 3);
    const NormalizedSystem ns = unit_system(rc.points, rc.alpha);
    const FrameBounds fb = exact_frame_bounds(ns);
    std::vector<std::size_t> perm(rc.points.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = perm.size() - 1 - k;
    std::swap(perm[0], perm[perm.size() / 2]);
    PointSequence q;
    for (auto k : perm) q.push_back(rc.points[k]);
    const AlphaMatrix b = rc.alpha.select(perm);
    const FrameBounds pb = exact_frame_bounds(unit_system(q, b));
    CHECK(std::abs(fb.lower - pb.lower) <= 1e-10);
    CHECK(std::abs(fb.upper - pb.upper) <= 1e-10);

    const CMatrix m = frame_form(ns);
    Eigen::FullPivLU<CMatrix> lu(m);
    lu.setThreshold(1e-12);
    CHECK((fb.lower > 1e-12) == (lu.rank() == m.rows()));
  }
}

TEST_CASE("system frame bounds scale with d") {
  Rng rng(6);
  const auto rc = oracles::random_case(rng, 10, 2);
  const OrbitSystem s = oracles::to_system(rc, rng);
  const NormalizedSystem ns = normalize(s);
  const FrameBounds sys = system_frame_bounds(ns), nor = exact_frame_bounds(ns);
  const double c2 = ns.bound_c * ns.bound_c;
  CHECK(sys.lower >= nor.lower / c2 * (1.0 - 1e-12));
  CHECK(sys.upper <= nor.upper * c2 * (1.0 + 1e-12));
  // brute force on the raw vectors
  const std::size_t cut = 4000;
  const CVector c = CVector::Random(static_cast<Eigen::Index>(s.size()));
  double energy = 0.0;
  for (const auto& a : s.vectors) {
    CVector v = a;
    for (std::size_t k = 0; k <= cut; ++k) {
      energy += std::norm(c.dot(v));
      for (Eigen::Index j = 0; j < v.size(); ++j) v(j) *= s.eigenvalues[static_cast<std::size_t>(j)].value();
    }
  }
  CHECK(energy >= sys.lower * c.squaredNorm() - 1e-8);
  CHECK(energy <= sys.upper * c.squaredNorm() + 1e-8);
}

TEST_CASE("tail_lower_bound examples") {
  const TailBound single = tail_lower_bound(unit_system({DiskPoint(0.5)}, AlphaMatrix::ones(1)), 1);
  CHECK(single.exact == doctest::Approx(0.25));
  CHECK(single.predicted == doctest::Approx(0.25));
  CHECK(single.d_sq == doctest::Approx(1.0));

  PointSequence ring;
  for (int k = 0; k < 6; ++k) ring.emplace_back(std::polar(0.7, 1.0 * k));
  const TailBound r = tail_lower_bound(unit_system(ring, AlphaMatrix::ones(6)), 3);
  CHECK(r.predicted == doctest::Approx(r.d_sq * std::pow(0.7, 6)));
  CHECK(r.exact >= r.predicted - 1e-12);

  const PointSequence with_zero{DiskPoint(0.0), DiskPoint(0.6), DiskPoint(Complex(0.0, 0.3))};
  const PointSequence without{DiskPoint(0.6), DiskPoint(Complex(0.0, 0.3))};
  const TailBound a = tail_lower_bound(unit_system(with_zero, AlphaMatrix::ones(3)), 2);
  const TailBound b = tail_lower_bound(unit_system(without, AlphaMatrix::ones(2)), 2);
  CHECK(a.predicted == doctest::Approx(b.predicted));
  CHECK(a.exact == doctest::Approx(b.exact));

  const TailBound z = tail_lower_bound(unit_system({DiskPoint(0.0)}, AlphaMatrix::ones(1)), 4);
  CHECK(z.all_zero);
  CHECK(z.predicted == 0.0);
  CHECK_THROWS_AS(tail_lower_bound(unit_system({DiskPoint(0.5)}, AlphaMatrix::ones(1)), 0), InvalidArgument);
}
