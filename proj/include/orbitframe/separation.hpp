#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orbitframe/disk.hpp"

namespace orbitframe {

using IndexList = std::vector<std::size_t>;

/// Indices w with rho(points[center], points[w]) < beta (the center included).
IndexList ball_members(const PointSequence& points, std::size_t center, double beta);

/// max over centers z in the sequence of #{w : rho(z, w) < beta}, counting
/// repetitions and the center itself.
std::size_t max_ball_count(const PointSequence& points, double beta);

/// Like max_ball_count but restricted to the given index subset.
std::size_t max_ball_count(const PointSequence& points, std::span<const std::size_t> subset,
                           double beta);

/// Splits an m-separated sequence (radius >= beta) into at most m separated
/// sequences of radius >= beta/(4m). Points are grouped by connected
/// components of the intersection graph of the balls Delta(z_n, beta/(4m));
/// within a component the k-th point by ascending index goes to part k.
/// Returns index lists into `points`; trailing empty parts are dropped.
/// Throws SeparationViolation naming a center whose beta-ball holds > m points.
std::vector<IndexList> split_separated(const PointSequence& points, std::size_t m, double beta);

/// Same, restricted to an index subset; returned lists index `points`.
std::vector<IndexList> split_separated(const PointSequence& points,
                                       std::span<const std::size_t> subset, std::size_t m,
                                       double beta);

struct DecomposeConfig {
  /// eta_p = eta_fraction * gamma_p; must lie in (0, 1/10).
  double eta_fraction = 1.0 / 20.0;
  /// beta_m is the largest 2^-k, k = 1..beta_grid_depth, with ball count <= m.
  int beta_grid_depth = 40;
};

/// One ball Delta(z', eta_p) of a layer: the representative first, then the
/// other p - 1 points of the ball by ascending index.
struct Cluster {
  std::size_t representative;
  IndexList members;
};

/// The nonempty layer S_p of the decomposition.
struct Layer {
  std::size_t p;
  double beta;
  double gamma;
  double eta;
  std::vector<Cluster> clusters;

  IndexList representatives() const;
  IndexList members() const;
};

/// One step of the reverse induction, also for empty layers.
struct LevelTrace {
  std::size_t p;
  double beta;
  double gamma;
  double eta;
  IndexList remainder;  // points still unassigned when level p starts
  bool empty;           // S_p was empty, p not in J
};

struct Decomposition {
  std::size_t m = 0;
  /// Nonempty layers ordered by decreasing p.
  std::vector<Layer> layers;
  std::vector<LevelTrace> trace;

  /// The index set J in increasing order.
  std::vector<std::size_t> index_set() const;
  const Layer* layer(std::size_t p) const;
};

/// Largest beta in the grid {2^-k} such that max_ball_count <= m, if any.
std::optional<double> find_separation_radius(const PointSequence& points, std::size_t m,
                                             int grid_depth = 40);

/// Reverse-induction decomposition into layers S_p, p in J, with single
/// multiplicity representatives S'_p. Deterministic in input order.
/// Throws DecompositionError when no grid radius works.
Decomposition decompose(const PointSequence& points, std::size_t m,
                        const DecomposeConfig& config = {});

/// Names of violated layer invariants (empty when all of them hold):
/// union exactness, exact ball counts, representative separation,
/// inter-layer separation, 0 < eta_p < gamma_p / 10.
std::vector<std::string> decomposition_violations(const PointSequence& points,
                                                  const Decomposition& d);

}  // namespace orbitframe
