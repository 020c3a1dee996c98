#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "orbitframe/errors.hpp"
#include "orbitframe/separation.hpp"

using namespace orbitframe;

namespace {

PointSequence far_points(Rng& rng, std::size_t n, double sep) {
  PointSequence p;
  while (p.size() < n) {
    const DiskPoint z(oracles::random_disk(rng, 0.9));
    bool ok = true;
    for (const auto& w : p)
      if (rho(z, w) < sep) ok = false;
    if (ok) p.push_back(z);
  }
  return p;
}

IndexList sorted_union(const std::vector<IndexList>& parts) {
  IndexList u;
  for (const auto& q : parts) u.insert(u.end(), q.begin(), q.end());
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

TEST_CASE("max_ball_count examples") {
  Rng rng(1);
  CHECK(max_ball_count(far_points(rng, 6, 0.4), 0.2) == 1);
  const PointSequence rep{DiskPoint(0.3), DiskPoint(0.3), DiskPoint(0.3)};
  CHECK(max_ball_count(rep, 0.01) == 3);
  CHECK(max_ball_count(rep, 0.9) == 3);
  const PointSequence mixed{DiskPoint(0.0), DiskPoint(0.1), DiskPoint(0.5)};
  CHECK(max_ball_count(mixed, 0.15) == 2);
  CHECK(ball_members(mixed, 0, 0.15) == IndexList{0, 1});
  const std::size_t sub[] = {0, 2};
  CHECK(max_ball_count(mixed, sub, 0.15) == 1);
  CHECK_THROWS_AS(max_ball_count(mixed, 0.0), InvalidArgument);
}

TEST_CASE("split_separated examples") {
  Rng rng(2);
  const PointSequence sep = far_points(rng, 7, 0.5);
  const auto one = split_separated(sep, 1, 0.25);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == IndexList{0, 1, 2, 3, 4, 5, 6});

  const double beta = 0.2;
  const DiskPoint a(Complex(0.1, 0.2));
  // balls of radius beta/8 around points beta/2 apart do not meet: one part suffices
  const PointSequence apart{a, DiskPoint(mobius(a, Complex(beta / 2.0, 0.0)))};
  const auto same = split_separated(apart, 2, beta);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == IndexList{0, 1});

  const PointSequence pair{a, DiskPoint(mobius(a, Complex(beta / 100.0, 0.0)))};
  const auto two = split_separated(pair, 2, beta);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == IndexList{0});
  CHECK(two[1] == IndexList{1});

  const PointSequence rep{DiskPoint(0.4), DiskPoint(0.4), DiskPoint(0.4)};
  const auto three = split_separated(rep, 3, 0.1);
  REQUIRE(three.size() == 3);
  for (const auto& q : three) CHECK(q.size() == 1);

  try {
    split_separated(rep, 2, 0.1);
    CHECK(false);
  } catch (const SeparationViolation& e) {
    CHECK(e.count() == 3);
    CHECK(e.center() < 3);
  }
}

TEST_CASE("split_separated parts are separated and cover the input") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng.index(4);
    const auto rc = oracles::clustered_case(rng, 30, m);
    const auto beta = find_separation_radius(rc.points, m);
    REQUIRE(beta);
    const auto parts = split_separated(rc.points, m, *beta);
    CHECK(parts.size() <= m);
    IndexList all(rc.points.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    CHECK(sorted_union(parts) == all);
    const double r = *beta / (4.0 * static_cast<double>(m));
    for (const auto& q : parts)
      for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b)
          CHECK(rho(rc.points[q[a]], rc.points[q[b]]) >= r - 1e-12);
  }
}

TEST_CASE("decompose examples") {
  Rng rng(4);
  const PointSequence sep = far_points(rng, 6, 0.5);
  const Decomposition d1 = decompose(sep, 1);
  CHECK(d1.index_set() == std::vector<std::size_t>{1});
  CHECK(d1.layers[0].members().size() == 6);
  CHECK(d1.layers[0].representatives().size() == 6);
  CHECK(decomposition_violations(sep, d1).empty());

  const PointSequence centers = far_points(rng, 5, 0.5);
  PointSequence pairs;
  for (const auto& z : centers) {
    pairs.push_back(z);
    pairs.emplace_back(mobius(z, std::polar(1e-4, rng.uniform(0.0, 6.0))));
  }
  const Decomposition d2 = decompose(pairs, 2);
  CHECK(d2.index_set() == std::vector<std::size_t>{2});
  for (const auto& c : d2.layers[0].clusters) CHECK(c.members.size() == 2);
  CHECK(decomposition_violations(pairs, d2).empty());

  PointSequence mixed;
  const PointSequence base = far_points(rng, 12, 0.4);
  for (std::size_t k = 0; k < 12; ++k) {
    mixed.push_back(base[k]);
    if (k >= 8) mixed.emplace_back(mobius(base[k], std::polar(1e-4, 1.0 + static_cast<double>(k))));
  }
  const Decomposition d3 = decompose(mixed, 2);
  CHECK(d3.index_set() == std::vector<std::size_t>{1, 2});
  CHECK(d3.layer(2)->members().size() == 8);
  CHECK(d3.layer(1)->members().size() == 8);
  for (auto j : d3.layer(1)->members()) CHECK(j < 8);
  CHECK(decomposition_violations(mixed, d3).empty());
}

TEST_CASE("wide pairs drop the top layer") {
  Rng rng(5);
  const PointSequence centers = far_points(rng, 4, 0.6);
  PointSequence pairs;
  for (const auto& z : centers) {
    pairs.push_back(z);
    pairs.emplace_back(mobius(z, Complex(0.01, 0.0)));
  }
  const Decomposition d = decompose(pairs, 2);
  CHECK(d.layer(2) == nullptr);
  CHECK(d.trace.front().empty);
  CHECK(d.index_set() == std::vector<std::size_t>{1});
  CHECK(decomposition_violations(pairs, d).empty());
}

TEST_CASE("decompose is deterministic and keeps the remainder property") {
  Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    const std::size_t m = 1 + rng.index(4);
    const auto rc = oracles::clustered_case(rng, 40, m);
    const Decomposition d = decompose(rc.points, m);
    CHECK(decomposition_violations(rc.points, d).empty());
    for (std::size_t k = 0; k + 1 < d.trace.size(); ++k) {
      const auto& cur = d.trace[k];
      const auto& next = d.trace[k + 1];
      if (next.remainder.empty()) continue;
      CHECK(max_ball_count(rc.points, next.remainder, cur.eta / 2.0) <= cur.p - 1);
    }
    const Decomposition again = decompose(rc.points, m);
    REQUIRE(again.layers.size() == d.layers.size());
    for (std::size_t k = 0; k < d.layers.size(); ++k) CHECK(again.layers[k].members() == d.layers[k].members());
  }
}

TEST_CASE("decompose errors") {
  const PointSequence rep{DiskPoint(0.4), DiskPoint(0.4), DiskPoint(0.4)};
  CHECK_THROWS_AS(decompose(rep, 2), DecompositionError);
  CHECK_THROWS_AS(decompose(rep, 0), InvalidArgument);
  DecomposeConfig bad;
  bad.eta_fraction = 0.2;
  CHECK_THROWS_AS(decompose(rep, 3, bad), InvalidArgument);
  CHECK(decompose({}, 2).layers.empty());
}
