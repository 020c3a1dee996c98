#include "orbitframe/separation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "orbitframe/errors.hpp"

namespace orbitframe {
namespace {

IndexList iota_list(std::size_t n) {
  IndexList out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

IndexList members_within(const PointSequence& points, std::span<const std::size_t> subset,
                         std::size_t center, double radius) {
  IndexList out;
  for (auto w : subset)
    if (rho(points[center], points[w]) < radius) out.push_back(w);
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

IndexList ball_members(const PointSequence& points, std::size_t center, double beta) {
  if (center >= points.size()) throw InvalidArgument("ball center index out of range");
  const IndexList all = iota_list(points.size());
  return members_within(points, all, center, beta);
}

std::size_t max_ball_count(const PointSequence& points, std::span<const std::size_t> subset,
                           double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("ball radius must lie in (0, 1)");
  std::size_t best = 0;
  for (auto c : subset) best = std::max(best, members_within(points, subset, c, beta).size());
  return best;
}

std::size_t max_ball_count(const PointSequence& points, double beta) {
  const IndexList all = iota_list(points.size());
  return max_ball_count(points, all, beta);
}

std::vector<IndexList> split_separated(const PointSequence& points,
                                       std::span<const std::size_t> subset, std::size_t m,
                                       double beta) {
  if (m == 0) throw InvalidArgument("split_separated needs m >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("separation radius must lie in (0, 1)");
  for (auto c : subset) {
    const auto count = members_within(points, subset, c, beta).size();
    if (count > m) {
      throw SeparationViolation(c, count,
                                "ball around point " + std::to_string(c) + " holds " +
                                    std::to_string(count) + " points, more than m = " +
                                    std::to_string(m));
    }
  }

  const double r = beta / (4.0 * static_cast<double>(m));
  const double touch = hyperbolic_sum(r, r);
  const std::size_t n = subset.size();
  DisjointSets sets(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (rho(points[subset[a]], points[subset[b]]) < touch) sets.unite(a, b);

  std::vector<IndexList> components(n);
  for (std::size_t a = 0; a < n; ++a) components[sets.find(a)].push_back(subset[a]);

  std::vector<IndexList> parts(m);
  for (auto& comp : components) {
    if (comp.empty()) continue;
    if (comp.size() > m)
      throw DecompositionError("connected component with " + std::to_string(comp.size()) +
                               " balls exceeds m = " + std::to_string(m));
    std::sort(comp.begin(), comp.end());
    for (std::size_t k = 0; k < comp.size(); ++k) parts[k].push_back(comp[k]);
  }
  for (auto& part : parts) std::sort(part.begin(), part.end());
  while (!parts.empty() && parts.back().empty()) parts.pop_back();
  return parts;
}

std::vector<IndexList> split_separated(const PointSequence& points, std::size_t m, double beta) {
  const IndexList all = iota_list(points.size());
  return split_separated(points, all, m, beta);
}

IndexList Layer::representatives() const {
  IndexList out;
  for (const auto& c : clusters) out.push_back(c.representative);
  return out;
}

IndexList Layer::members() const {
  IndexList out;
  for (const auto& c : clusters) out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> Decomposition::index_set() const {
  std::vector<std::size_t> j;
  for (const auto& l : layers) j.push_back(l.p);
  std::sort(j.begin(), j.end());
  return j;
}

const Layer* Decomposition::layer(std::size_t p) const {
  for (const auto& l : layers)
    if (l.p == p) return &l;
  return nullptr;
}

std::optional<double> find_separation_radius(const PointSequence& points, std::size_t m,
                                             int grid_depth) {
  for (int k = 1; k <= grid_depth; ++k) {
    const double beta = std::ldexp(1.0, -k);
    if (max_ball_count(points, beta) <= m) return beta;
  }
  return std::nullopt;
}

Decomposition decompose(const PointSequence& points, std::size_t m, const DecomposeConfig& config) {
  if (m == 0) throw InvalidArgument("decompose needs m >= 1");
  if (!(config.eta_fraction > 0.0 && config.eta_fraction < 0.1))
    throw InvalidArgument("eta fraction must lie in (0, 1/10)");
  Decomposition d;
  d.m = m;
  if (points.empty()) return d;

  const auto start = find_separation_radius(points, m, config.beta_grid_depth);
  if (!start)
    throw DecompositionError("no radius 2^-k (k <= " + std::to_string(config.beta_grid_depth) +
                             ") makes the sequence " + std::to_string(m) + "-separated");

  double beta = *start;
  IndexList remainder = iota_list(points.size());
  for (std::size_t p = m; p >= 1 && !remainder.empty(); --p) {
    if (max_ball_count(points, remainder, beta) > p)
      throw DecompositionError("remainder is not " + std::to_string(p) +
                               "-separated at radius " + std::to_string(beta));
    const auto parts = split_separated(points, remainder, p, beta);
    const double gamma = beta / (4.0 * static_cast<double>(p));
    const double eta = config.eta_fraction * gamma;

    Layer layer{p, beta, gamma, eta, {}};
    if (parts.size() >= p) {
      for (auto z : parts[p - 1]) {
        IndexList ball = members_within(points, remainder, z, eta);
        if (ball.size() != p) continue;
        std::erase(ball, z);
        ball.insert(ball.begin(), z);
        layer.clusters.push_back({z, std::move(ball)});
      }
    }
    const IndexList taken = layer.members();
    d.trace.push_back({p, beta, gamma, eta, remainder, taken.empty()});
    if (!taken.empty()) {
      IndexList rest;
      std::set_difference(remainder.begin(), remainder.end(), taken.begin(), taken.end(),
                          std::back_inserter(rest));
      remainder = std::move(rest);
      d.layers.push_back(std::move(layer));
    }
    beta = eta / 2.0;
    if (p == 1) break;
  }
  if (!remainder.empty())
    throw DecompositionError(std::to_string(remainder.size()) +
                             " points left after the last layer");
  return d;
}

std::vector<std::string> decomposition_violations(const PointSequence& points,
                                                  const Decomposition& d) {
  std::vector<std::string> out;
  std::vector<std::size_t> seen(points.size(), 0);
  for (const auto& layer : d.layers)
    for (auto j : layer.members()) {
      if (j >= points.size()) {
        out.push_back("member index out of range");
        continue;
      }
      ++seen[j];
    }
  for (std::size_t j = 0; j < points.size(); ++j)
    if (seen[j] != 1) {
      out.push_back("point " + std::to_string(j) + " appears " + std::to_string(seen[j]) +
                    " times in the union");
      break;
    }

  for (const auto& layer : d.layers) {
    const std::string tag = "layer " + std::to_string(layer.p) + ": ";
    if (!(layer.eta > 0.0 && layer.eta < layer.gamma / 10.0)) out.push_back(tag + "eta not in (0, gamma/10)");
    const IndexList sp = layer.members();
    for (const auto& c : layer.clusters) {
      const auto inside = members_within(points, sp, c.representative, layer.eta);
      if (inside.size() != layer.p || c.members.size() != layer.p)
        out.push_back(tag + "ball count: ball around " + std::to_string(c.representative) + " holds " +
                      std::to_string(inside.size()) + " points");
    }
    const IndexList reps = layer.representatives();
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b)
        if (!(rho(points[reps[a]], points[reps[b]]) > layer.gamma))
          out.push_back(tag + "representative separation: representatives " + std::to_string(reps[a]) + ", " +
                        std::to_string(reps[b]) + " too close");
    for (const auto& lower : d.layers) {
      if (lower.p >= layer.p) continue;
      for (auto a : sp)
        for (auto b : lower.members())
          if (!(rho(points[a], points[b]) > 0.8 * layer.gamma))
            out.push_back(tag + "layer separation: too close to layer " + std::to_string(lower.p));
    }
  }
  return out;
}

}  // namespace orbitframe
