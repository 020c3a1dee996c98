#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitframe/alpha.hpp"
#include "orbitframe/disk.hpp"
#include "orbitframe/oracle.hpp"
#include "orbitframe/separation.hpp"

namespace orbitframe {

/// Every ball Delta(lambda_j, eta) holds at most m points, counting repetitions.
bool check_condition1(const PointSequence& points, std::size_t m, double eta);

/// Smallest singular value of the m x p submatrix of alpha on `group`.
/// Throws InvalidArgument when p > m or an index is out of range.
double group_sigma_min(const AlphaMatrix& alpha, std::span<const std::size_t> group);

struct NecessityResult {
  double eta = 0.0;
  double d0_sq = 0.0;           // predicted (D^2 - 2 m eta^2) / m
  double observed_sigma_sq = 0.0;  // min over centers of sigma_min^2 of the ball group
  std::size_t max_count = 0;
  bool pass = false;
};

/// With eta = 0.99 sqrt(D^2 / 2m), checks that every eta-ball holds at most m
/// points and that every ball group satisfies sigma_min^2 >= (D^2 - 2m eta^2)/m - 1e-8,
/// every point being tried as a center. Throws InvalidArgument unless d_sq > 0.
NecessityResult certify_necessary(const PointSequence& points, const AlphaMatrix& alpha,
                                  double d_sq);

enum class Verdict { certified_frame, certified_not_frame, inconclusive };

std::string to_string(Verdict v);

/// A value together with the operation that produced it.
struct NamedConstant {
  std::string name;
  double value;
  std::string source;
};

/// Constants of one layer p of the sufficiency argument.
struct GroupBound {
  std::size_t p = 0;
  double gamma = 0.0;
  double eta = 0.0;
  double d1_sq = 0.0;        // lower Riesz bound of the representatives
  double d0_sq = 0.0;        // min sigma_min^2 over the clusters
  double diff_bessel = 0.0;  // max over nu of the companion-difference Bessel constant
  double bound = 0.0;        // max(D1^2 D0^2 / 2 - m diff_bessel, 0)
  double epsilon = 1.0;      // min |A_p| over S_p
  double delta_reps = 1.0;   // delta(B) of the representatives
};

struct CertifyConfig {
  DecomposeConfig decompose{};
  /// Number of eta halvings tried when a layer bound stays below D1^2 D0^2 / 4.
  int eta_retries = 8;
  /// Compare with the exact frame operator (necessity and refutation).
  bool use_oracle = true;
  /// Standalone refutation scan over eta = 2^-k, k = 1..eta_grid_depth.
  int eta_grid_depth = 40;
};

struct FrameCertificate {
  Verdict verdict = Verdict::inconclusive;
  double eta = 0.0;    // smallest eta_p used
  double d0_sq = 0.0;  // min over layers
  double d1_sq = 0.0;  // min over layers
  std::map<std::size_t, double> eps;
  double lower_bound = 0.0;
  std::vector<GroupBound> groups;
  Decomposition decomposition;
  int attempts = 0;
  std::optional<FrameBounds> oracle;
  std::optional<NecessityResult> necessity;
  std::vector<NamedConstant> diagnostics;
};

/// Frame bound below which the exact frame operator counts as singular.
inline constexpr double kNullFrameBound = 1e-12;

/// Sufficiency pipeline: decompose, bound every layer, combine the layers
/// through the Toeplitz contraction step, then refute via the oracle or the
/// standalone eta scan when no positive bound results.
FrameCertificate certify(const PointSequence& points, const AlphaMatrix& alpha,
                         const CertifyConfig& config = {});

}  // namespace orbitframe
