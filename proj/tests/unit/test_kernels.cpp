#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "orbitframe/blaschke.hpp"
#include "orbitframe/errors.hpp"
#include "orbitframe/kernels.hpp"
#include "orbitframe/linalg.hpp"

using namespace orbitframe;

namespace {

PointSequence radial(int n) {
  PointSequence p;
  for (int j = 1; j <= n; ++j) p.emplace_back(1.0 - std::ldexp(1.0, -j));
  return p;
}

PointSequence random_points(Rng& rng, int n, double radius) {
  PointSequence p;
  for (int k = 0; k < n; ++k) p.emplace_back(oracles::random_disk(rng, radius));
  return p;
}

CVector random_vector(Rng& rng, Eigen::Index n) {
  CVector c(n);
  for (Eigen::Index k = 0; k < n; ++k) c(k) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return c;
}

// Taylor coefficients of (B_i / B_i(lambda_i)) k_{lambda_i} by DFT on the circle.
CVector dual_series(const PointSequence& pts, std::size_t i, int samples) {
  const BlaschkeProduct b(pts);
  const std::size_t omit[] = {i};
  const Complex own = b.evaluate(pts[i], omit);
  const Complex l = pts[i].value();
  std::vector<Complex> h(samples);
  for (int t = 0; t < samples; ++t) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * t / samples);
    Complex bz = 1.0;
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (k != i) bz *= blaschke_factor(pts[k], z);
    h[t] = bz / own * std::sqrt(pts[i].weight()) / (1.0 - std::conj(l) * z);
  }
  CVector coef(samples / 2);
  for (int n = 0; n < samples / 2; ++n) {
    Complex s = 0.0;
    for (int t = 0; t < samples; ++t) s += h[t] * std::polar(1.0, -2.0 * std::numbers::pi * n * t / samples);
    coef(n) = s / static_cast<double>(samples);
  }
  return coef;
}

}  // namespace

TEST_CASE("kernel_inner examples") {
  CHECK(kernel_inner(DiskPoint(0.4), DiskPoint(0.4)).real() == doctest::Approx(1.0));
  const Complex a = kernel_inner(DiskPoint(0.0), DiskPoint(0.5));
  CHECK(a.real() == doctest::Approx(std::sqrt(0.75)));
  CHECK(a.imag() == 0.0);
  CHECK(kernel_inner(DiskPoint(0.5), DiskPoint(-0.5)).real() == doctest::Approx(0.6));
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const DiskPoint l(oracles::random_disk(rng, 0.99)), u(oracles::random_disk(rng, 0.99));
    CHECK(std::abs(kernel_inner(l, u)) <= 1.0 + 1e-15);
  }
}

TEST_CASE("gram examples") {
  CHECK(gram({DiskPoint(0.3)}).entries(0, 0) == Complex(1.0));
  const GramMatrix g2 = gram({DiskPoint(0.3), DiskPoint(0.3)});
  CHECK(std::abs(g2.entries(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(extremal_eigenvalues(g2.entries).min) < 1e-12);
  const GramMatrix g = gram({DiskPoint(0.0), DiskPoint(0.5)});
  CHECK(g.entries(0, 1).real() == doctest::Approx(0.8660254037844386));
  CHECK(g.size() == 2);
}

TEST_CASE("gram entries match kernel power series") {
  Rng rng(9);
  const PointSequence p = random_points(rng, 7, 0.85);
  const CMatrix g = gram(p).entries;
  CHECK((g - g.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(extremal_eigenvalues(g).min >= -1e-9);
  for (Eigen::Index j = 0; j < 7; ++j)
    for (Eigen::Index k = 0; k < 7; ++k) {
      CVector ek = CVector::Zero(7), ej = CVector::Zero(7);
      ek(k) = 1.0;
      ej(j) = 1.0;
      CHECK(std::abs(g(j, k) - oracles::series_inner(p, ek, ej, 600)) < 1e-12);
    }
}

TEST_CASE("riesz_bounds examples") {
  const RieszBounds one = riesz_bounds({DiskPoint(Complex(0.2, 0.1))});
  CHECK(one.lower == doctest::Approx(1.0));
  CHECK(one.upper == doctest::Approx(1.0));
  const RieszBounds two = riesz_bounds({DiskPoint(0.0), DiskPoint(0.5)});
  CHECK(two.lower == doctest::Approx(1.0 - 0.8660254037844386).epsilon(1e-12));
  CHECK(two.upper == doctest::Approx(1.0 + 0.8660254037844386).epsilon(1e-12));
  const RieszBounds rad = riesz_bounds(radial(16));
  CHECK(rad.lower > 0.0);
  CHECK(rad.lower == doctest::Approx(4.145985595030972e-05).epsilon(1e-6));
  const RieszBounds rep = riesz_bounds({DiskPoint(0.2), DiskPoint(0.2)});
  CHECK(rep.degenerate);
  CHECK(rep.lower == 0.0);
}

TEST_CASE("synthesis and analysis norms agree") {
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const PointSequence p = random_points(rng, 2 + t, 0.9);
    const CMatrix e = oracles::probe_matrix(p, 800);
    Eigen::JacobiSVD<CMatrix> svd(e);
    const double analysis = svd.singularValues()(0) * svd.singularValues()(0);
    CHECK(std::abs(riesz_bounds(p).upper - analysis) < 1e-8);
  }
}

TEST_CASE("jacobi oracle agrees with the library eigen solver") {
  Rng rng(8);
  const PointSequence p = random_points(rng, 9, 0.9);
  const CMatrix g = gram(p).entries;
  const auto ev = oracles::jacobi_eigenvalues(g);
  const Extremes e = extremal_eigenvalues(g);
  CHECK(std::abs(ev.front() - e.min) < 1e-10);
  CHECK(std::abs(ev.back() - e.max) < 1e-10);
}

TEST_CASE("min_norm_interpolant examples") {
  CVector one(1);
  one << 1.0;
  CHECK(min_norm_interpolant_normsq({DiskPoint(Complex(0.3, 0.3))}, one) == doctest::Approx(1.0));
  const PointSequence pm{DiskPoint(0.5), DiskPoint(-0.5)};
  CHECK(min_norm_interpolant_normsq(pm, CVector::Zero(2)) == 0.0);
  CVector e0(2);
  e0 << 1.0, 0.0;
  const double v = min_norm_interpolant_normsq(pm, e0);
  CHECK(v == doctest::Approx(1.0 / 0.64).epsilon(1e-12));
  CHECK(v > 0.0);
  CHECK(v <= interpolation_constant(0.8));
  CHECK(interpolation_constant(0.8) == doctest::Approx(7.0620).epsilon(1e-4));
  CHECK_THROWS_AS(min_norm_interpolant_normsq({DiskPoint(0.1), DiskPoint(0.1)}, e0), SingularConfiguration);
  CHECK_THROWS_AS(min_norm_interpolant_normsq(pm, one), InvalidArgument);
  CHECK_THROWS_AS(interpolation_constant(0.0), InvalidArgument);
}

TEST_CASE("min_norm_interpolant matches an independent least-norm solve") {
  Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const PointSequence p = random_points(rng, 2 + t % 5, 0.7);
    const CVector c = random_vector(rng, static_cast<Eigen::Index>(p.size()));
    const double lib = min_norm_interpolant_normsq(p, c);
    const double ref = oracles::probe_min_norm(p, c, 300);
    CHECK(std::abs(lib - ref) <= 1e-7 * std::max(1.0, ref));
    const double d = delta(BlaschkeProduct(p));
    CHECK(lib <= interpolation_constant(d) * c.squaredNorm() * (1.0 + 1e-12));
  }
}

TEST_CASE("dual functions are biorthogonal to the kernels") {
  Rng rng(6);
  const PointSequence p = random_points(rng, 5, 0.6);
  const CMatrix w = biorthogonality_matrix(p);
  CHECK((w - CMatrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const CVector g = dual_series(p, i, 512);
    for (std::size_t j = 0; j < p.size(); ++j) {
      const CVector k = oracles::kernel_series(p[j].value(), 256);
      const Complex ip = k.dot(g);
      CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-9);
    }
  }
}

TEST_CASE("diff_bessel examples") {
  const PointSequence r = radial(16);
  CHECK(diff_bessel(r, r) == doctest::Approx(0.0));
  const double pair = diff_bessel({DiskPoint(0.0)}, {DiskPoint(0.1)});
  CHECK(pair == doctest::Approx(2.0 - 2.0 * std::sqrt(0.99)).epsilon(1e-12));
  CHECK(pair == doctest::Approx(0.0100251).epsilon(1e-5));
  PointSequence moved;
  for (const auto& l : r) moved.emplace_back(mobius(l, Complex(-0.1, 0.0)));
  const double v = diff_bessel(r, moved);
  CHECK(v <= 32.0 * 0.01);
  CHECK(v > 0.0);
  CHECK_THROWS_AS(diff_bessel(r, {DiskPoint(0.0)}), InvalidArgument);
}

TEST_CASE("difference family norms match power series") {
  Rng rng(13);
  const PointSequence p = random_points(rng, 6, 0.8);
  PointSequence q;
  for (const auto& l : p) q.emplace_back(mobius(l, oracles::random_disk(rng, 0.2)));
  const CMatrix h = difference_gram(p, q);
  for (int t = 0; t < 5; ++t) {
    const CVector c = random_vector(rng, 6);
    PointSequence both = p;
    both.insert(both.end(), q.begin(), q.end());
    CVector cc(12);
    cc << c, -c;
    const double series = oracles::series_inner(both, cc, cc, 800).real();
    CHECK(std::abs((c.adjoint() * h * c)(0, 0).real() - series) < 1e-10);
  }
}

TEST_CASE("kernel difference does not exceed twice rho squared") {
  Rng rng(31);
  bool sharp = false;
  for (int t = 0; t < 20000; ++t) {
    const DiskPoint v(oracles::random_disk(rng, 0.999));
    const DiskPoint w = (t % 4 == 0) ? DiskPoint(mobius(v, oracles::random_disk(rng, 0.04)))
                                     : DiskPoint(oracles::random_disk(rng, 0.999));
    const double lhs = 2.0 - 2.0 * kernel_inner(v, w).real();
    const double r = rho(v, w);
    CHECK(lhs <= 2.0 * r * r + 1e-12);
    if (r < 0.05 && r > 0.0 && lhs / (2.0 * r * r) > 0.9) sharp = true;
  }
  CHECK(sharp);
}
