#include "orbitframe/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "orbitframe/blaschke.hpp"
#include "orbitframe/errors.hpp"
#include "orbitframe/kernels.hpp"

namespace orbitframe {
namespace {

PointSequence gather(const PointSequence& points, std::span<const std::size_t> idx) {
  PointSequence out;
  out.reserve(idx.size());
  for (auto j : idx) out.push_back(points[j]);
  return out;
}

// Minimum over centers of sigma_min^2 for the groups Delta(lambda_j, eta) that
// hold at most m points; infinity when there are none.
double min_ball_sigma_sq(const PointSequence& points, const AlphaMatrix& alpha, double eta) {
  const std::size_t m = alpha.orbits();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < points.size(); ++j) {
    const IndexList group = ball_members(points, j, eta);
    if (group.size() > m) continue;
    const double s = group_sigma_min(alpha, group);
    best = std::min(best, s * s);
  }
  return best;
}

struct Evaluation {
  std::vector<GroupBound> groups;
  double lower_bound = 0.0;
  bool cleared = true;
};

Evaluation evaluate_layers(const PointSequence& points, const AlphaMatrix& alpha,
                           const Decomposition& dec) {
  const std::size_t m = alpha.orbits();
  Evaluation ev;
  double combined = std::numeric_limits<double>::infinity();
  for (const auto& layer : dec.layers) {
    GroupBound g;
    g.p = layer.p;
    g.gamma = layer.gamma;
    g.eta = layer.eta;

    const IndexList rep_idx = layer.representatives();
    const PointSequence reps = gather(points, rep_idx);
    const RieszBounds rb = riesz_bounds(reps);
    // eigenvalues at rounding level carry no sign information
    g.d1_sq = rb.lower > kNullFrameBound * std::max(1.0, rb.upper) ? rb.lower : 0.0;
    g.delta_reps = delta(BlaschkeProduct(reps));

    g.d0_sq = std::numeric_limits<double>::infinity();
    for (const auto& c : layer.clusters) {
      const double s = group_sigma_min(alpha, c.members);
      g.d0_sq = std::min(g.d0_sq, s * s);
    }
    if (g.d0_sq <= kNullFrameBound) g.d0_sq = 0.0;

    for (std::size_t nu = 1; nu < layer.p; ++nu) {
      PointSequence companions;
      for (const auto& c : layer.clusters) companions.push_back(points[c.members[nu]]);
      g.diff_bessel = std::max(g.diff_bessel, orbitframe::diff_bessel(reps, companions));
    }

    const double main = g.d1_sq * g.d0_sq;
    g.bound = std::max(0.5 * main - static_cast<double>(m) * g.diff_bessel, 0.0);
    if (!(g.bound >= 0.25 * main) || !(g.bound > 0.0)) ev.cleared = false;

    const IndexList own = layer.members();
    PointSequence others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (!std::binary_search(own.begin(), own.end(), j)) others.push_back(points[j]);
    const BlaschkeProduct complement(std::move(others));
    g.epsilon = 1.0;
    for (auto j : own) g.epsilon = std::min(g.epsilon, std::abs(complement.evaluate(points[j])));

    combined = std::min(combined, g.bound * g.epsilon * g.epsilon);
    ev.groups.push_back(g);
  }
  ev.lower_bound = ev.groups.empty() ? 0.0 : combined / static_cast<double>(m);
  return ev;
}

std::string tagged(const std::string& name, std::size_t p) {
  return name + "[p=" + std::to_string(p) + "]";
}

}  // namespace

bool check_condition1(const PointSequence& points, std::size_t m, double eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("eta must lie in (0, 1)");
  return max_ball_count(points, eta) <= m;
}

double group_sigma_min(const AlphaMatrix& alpha, std::span<const std::size_t> group) {
  if (group.size() > alpha.orbits())
    throw InvalidArgument("group of " + std::to_string(group.size()) + " points exceeds m = " +
                          std::to_string(alpha.orbits()));
  return smallest_singular_value(alpha.columns(group));
}

NecessityResult certify_necessary(const PointSequence& points, const AlphaMatrix& alpha,
                                  double d_sq) {
  if (!(d_sq > 0.0)) throw InvalidArgument("certify_necessary needs a positive lower frame bound");
  if (alpha.size() != points.size()) throw InvalidArgument("alpha column count differs from points");
  const std::size_t m = alpha.orbits();
  const double md = static_cast<double>(m);
  NecessityResult r;
  r.eta = std::min(0.99 * std::sqrt(d_sq / (2.0 * md)), 1.0 - 1e-12);
  r.d0_sq = (d_sq - 2.0 * md * r.eta * r.eta) / md;
  r.max_count = max_ball_count(points, r.eta);
  r.observed_sigma_sq = min_ball_sigma_sq(points, alpha, r.eta);
  r.pass = r.max_count <= m && r.observed_sigma_sq >= r.d0_sq - 1e-8;
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_frame: return "certified_frame";
    case Verdict::certified_not_frame: return "certified_not_frame";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

FrameCertificate certify(const PointSequence& points, const AlphaMatrix& alpha,
                         const CertifyConfig& config) {
  if (points.empty()) throw InvalidArgument("certify needs at least one point");
  if (alpha.size() != points.size()) throw InvalidArgument("alpha column count differs from points");
  const std::size_t m = alpha.orbits();

  FrameCertificate cert;
  Evaluation best;
  bool have_best = false;
  for (int attempt = 0; attempt <= config.eta_retries; ++attempt) {
    DecomposeConfig dc = config.decompose;
    dc.eta_fraction = std::ldexp(config.decompose.eta_fraction, -attempt);
    Decomposition dec;
    try {
      dec = decompose(points, m, dc);
    } catch (const DecompositionError&) {
      // no admissible separation radius: nothing to assemble
      cert.attempts = attempt + 1;
      cert.diagnostics.push_back({"decomposition_failed", 1.0, "separation.decompose"});
      break;
    }
    Evaluation ev = evaluate_layers(points, alpha, dec);
    cert.attempts = attempt + 1;
    if (!have_best || ev.lower_bound > best.lower_bound) {
      best = ev;
      cert.decomposition = std::move(dec);
      have_best = true;
    }
    if (ev.cleared) break;
  }

  cert.groups = best.groups;
  cert.lower_bound = best.lower_bound;
  cert.eta = std::numeric_limits<double>::infinity();
  cert.d0_sq = std::numeric_limits<double>::infinity();
  cert.d1_sq = std::numeric_limits<double>::infinity();
  for (const auto& g : cert.groups) {
    cert.eta = std::min(cert.eta, g.eta);
    cert.d0_sq = std::min(cert.d0_sq, g.d0_sq);
    cert.d1_sq = std::min(cert.d1_sq, g.d1_sq);
    cert.eps[g.p] = g.epsilon;
    cert.diagnostics.push_back({tagged("gamma", g.p), g.gamma, "separation.decompose"});
    cert.diagnostics.push_back({tagged("eta", g.p), g.eta, "separation.decompose"});
    cert.diagnostics.push_back({tagged("D1_sq", g.p), g.d1_sq, "kernels.riesz_bounds"});
    cert.diagnostics.push_back({tagged("D0_sq", g.p), g.d0_sq, "frame_certifier.group_sigma_min"});
    cert.diagnostics.push_back({tagged("diff_bessel", g.p), g.diff_bessel, "kernels.diff_bessel"});
    cert.diagnostics.push_back({tagged("delta_reps", g.p), g.delta_reps, "blaschke.delta"});
    cert.diagnostics.push_back({tagged("epsilon", g.p), g.epsilon, "blaschke.evaluate"});
    cert.diagnostics.push_back({tagged("group_bound", g.p), g.bound, "frame_certifier.certify"});
  }
  cert.diagnostics.push_back({"lower_bound", cert.lower_bound, "frame_certifier.certify"});

  if (config.use_oracle) {
    const FrameBounds fb = exact_frame_bounds(unit_system(points, alpha));
    cert.oracle = fb;
    cert.diagnostics.push_back({"oracle_lower", fb.lower, "orbit_oracle.exact_frame_bounds"});
    cert.diagnostics.push_back({"oracle_upper", fb.upper, "orbit_oracle.exact_frame_bounds"});
    if (fb.lower > kNullFrameBound * std::max(1.0, fb.upper)) {
      cert.necessity = certify_necessary(points, alpha, fb.lower);
      cert.diagnostics.push_back({"necessity_eta", cert.necessity->eta, "frame_certifier.certify_necessary"});
      cert.diagnostics.push_back({"necessity_D0_sq", cert.necessity->d0_sq, "frame_certifier.certify_necessary"});
    }
  }

  if (cert.lower_bound > 0.0) {
    cert.verdict = Verdict::certified_frame;
  } else if (config.use_oracle) {
    const bool necessity_fails = !cert.necessity || !cert.necessity->pass;
    cert.verdict = necessity_fails ? Verdict::certified_not_frame : Verdict::inconclusive;
  } else {
    // Standalone: ball counts or group rank have to fail at every eta of the grid.
    bool refuted = true;
    double best_eta = 0.0;
    double best_d0 = 0.0;
    for (int k = 1; k <= config.eta_grid_depth; ++k) {
      const double eta = std::ldexp(1.0, -k);
      if (!check_condition1(points, m, eta)) continue;
      const double d0 = min_ball_sigma_sq(points, alpha, eta);
      if (d0 > best_d0) {
        best_d0 = d0;
        best_eta = eta;
      }
      if (d0 > kNullFrameBound) refuted = false;
    }
    cert.diagnostics.push_back({"scan_eta", best_eta, "frame_certifier.certify (heuristic eta scan)"});
    cert.diagnostics.push_back({"scan_D0_sq", best_d0, "frame_certifier.certify (heuristic eta scan)"});
    cert.verdict = refuted ? Verdict::certified_not_frame : Verdict::inconclusive;
  }
  if (cert.groups.empty()) cert.eta = cert.d0_sq = cert.d1_sq = 0.0;
  return cert;
}

}  // namespace orbitframe
