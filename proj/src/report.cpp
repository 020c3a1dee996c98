#include "orbitframe/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "orbitframe/blaschke.hpp"
#include "orbitframe/carleson.hpp"
#include "orbitframe/kernels.hpp"

namespace orbitframe {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t effective_seed(const Instance& inst, const ReportOptions& opt) {
  if (opt.seed) return *opt.seed;
  return inst.seed.value_or(0);
}

Json header(const char* command, const Instance& inst, const ReportOptions& opt) {
  Json j;
  j["tool"] = "orbitframe";
  j["command"] = command;
  Json in;
  in["digest"] = instance_digest(inst);
  in["J"] = inst.system.size();
  in["m"] = inst.system.orbits();
  if (!inst.generator.empty()) in["generator"] = inst.generator;
  if (inst.seed) in["seed"] = *inst.seed;
  j["instance"] = in;
  j["seed"] = effective_seed(inst, opt);
  return j;
}

CertifyConfig certify_config(const ReportOptions& opt) {
  CertifyConfig c;
  c.decompose.eta_fraction = opt.eta_fraction;
  return c;
}

Json profile_json(const BasisProfile& p) {
  Json j;
  Json ratios = Json::array();
  for (double r : p.ratios) ratios.push_back(number(r, "orbit_oracle.standard_basis_profile"));
  j["ratios"] = ratios;
  j["vanishing"] = p.vanishing;
  j["min"] = number(p.min, "orbit_oracle.standard_basis_profile");
  j["max"] = number(p.max, "orbit_oracle.standard_basis_profile");
  return j;
}

// Zero seed column at j: e_j gets no energy, so the lower frame bound is 0.
Json zero_column_witness(const ZeroColumnError& e) {
  Json j;
  j["verdict"] = to_string(Verdict::certified_not_frame);
  j["witness"] = {{"vector", "e_j"}, {"j", e.column()}};
  j["lower_bound"] = number(0.0, "orbit_oracle.normalize");
  j["reason"] = e.what();
  return j;
}

const char* layer_color(std::size_t p) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[(p - 1) % 8];
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

Json number(double v, const std::string& source) {
  Json j;
  if (std::isfinite(v))
    j["value"] = v;
  else
    j["value"] = nullptr;
  j["source"] = source;
  return j;
}

Json frame_bounds_json(const FrameBounds& b, const std::string& source) {
  return Json{{"lower", number(b.lower, source)}, {"upper", number(b.upper, source)}};
}

Json decomposition_json(const PointSequence& points, const Decomposition& d) {
  (void)points;
  Json j;
  j["m"] = d.m;
  j["index_set"] = d.index_set();
  Json layers = Json::array();
  for (const auto& l : d.layers) {
    Json lj;
    lj["p"] = l.p;
    lj["beta"] = number(l.beta, "separation.decompose");
    lj["gamma"] = number(l.gamma, "separation.decompose");
    lj["eta"] = number(l.eta, "separation.decompose");
    Json clusters = Json::array();
    for (const auto& c : l.clusters) clusters.push_back(c.members);
    lj["clusters"] = clusters;
    layers.push_back(lj);
  }
  j["layers"] = layers;
  Json trace = Json::array();
  for (const auto& t : d.trace) {
    Json tj;
    tj["p"] = t.p;
    tj["beta"] = number(t.beta, "separation.decompose");
    tj["gamma"] = number(t.gamma, "separation.decompose");
    tj["eta"] = number(t.eta, "separation.decompose");
    tj["remainder"] = t.remainder.size();
    tj["empty"] = t.empty;
    trace.push_back(tj);
  }
  j["trace"] = trace;
  return j;
}

Json certificate_json(const FrameCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["lower_bound"] = number(c.lower_bound, "frame_certifier.certify");
  j["eta"] = number(c.eta, "separation.decompose");
  j["D0_sq"] = number(c.d0_sq, "frame_certifier.group_sigma_min");
  j["D1_sq"] = number(c.d1_sq, "kernels.riesz_bounds");
  Json eps = Json::array();
  for (const auto& [p, v] : c.eps) eps.push_back({{"p", p}, {"epsilon", number(v, "blaschke.evaluate")}});
  j["eps"] = eps;
  j["attempts"] = c.attempts;
  Json groups = Json::array();
  for (const auto& g : c.groups) {
    Json gj;
    gj["p"] = g.p;
    gj["gamma"] = number(g.gamma, "separation.decompose");
    gj["eta"] = number(g.eta, "separation.decompose");
    gj["D1_sq"] = number(g.d1_sq, "kernels.riesz_bounds");
    gj["D0_sq"] = number(g.d0_sq, "frame_certifier.group_sigma_min");
    gj["diff_bessel"] = number(g.diff_bessel, "kernels.diff_bessel");
    gj["bound"] = number(g.bound, "frame_certifier.certify");
    gj["epsilon"] = number(g.epsilon, "blaschke.evaluate");
    gj["delta_reps"] = number(g.delta_reps, "blaschke.delta");
    groups.push_back(gj);
  }
  j["groups"] = groups;
  if (c.oracle) j["oracle"] = frame_bounds_json(*c.oracle, "orbit_oracle.exact_frame_bounds");
  if (c.necessity) {
    const auto& n = *c.necessity;
    j["necessity"] = {{"eta", number(n.eta, "frame_certifier.certify_necessary")},
                      {"D0_sq_predicted", number(n.d0_sq, "frame_certifier.certify_necessary")},
                      {"sigma_sq_observed", number(n.observed_sigma_sq, "frame_certifier.certify_necessary")},
                      {"max_count", n.max_count},
                      {"pass", n.pass}};
  }
  Json diag = Json::array();
  for (const auto& d : c.diagnostics)
    diag.push_back({{"name", d.name}, {"value", number(d.value, d.source)["value"]}, {"source", d.source}});
  j["diagnostics"] = diag;
  if (!c.oracle && c.verdict != Verdict::certified_frame)
    j["note"] = "eta scan without oracle; D0 from the scan is heuristic";
  return j;
}

Json oracle_report(const Instance& inst, const ReportOptions& opt) {
  Json j = header("oracle", inst, opt);
  const auto& sys = inst.system;
  sys.validate();
  j["standard_basis_profile"] = profile_json(standard_basis_profile(sys));
  try {
    const NormalizedSystem ns = normalize(sys);
    j["normalized"] = frame_bounds_json(exact_frame_bounds(ns), "orbit_oracle.exact_frame_bounds");
    j["system"] = frame_bounds_json(system_frame_bounds(ns), "orbit_oracle.system_frame_bounds");
    j["bound_C"] = number(ns.bound_c, "orbit_oracle.normalize");
    if (opt.trunc) {
      j["truncated"] = {{"N", *opt.trunc},
                        {"bounds", frame_bounds_json(truncated_orbit_bounds(ns, *opt.trunc),
                                                     "orbit_oracle.truncated_orbit_bounds")},
                        {"tail", number(orbit_tail_bound(ns, *opt.trunc), "orbit_oracle.orbit_tail_bound")}};
    }
  } catch (const ZeroColumnError& e) {
    j["not_a_frame"] = zero_column_witness(e);
  }
  return j;
}

Json certify_report(const Instance& inst, const ReportOptions& opt) {
  Json j = header("certify", inst, opt);
  try {
    const NormalizedSystem ns = normalize(inst.system);
    j["certificate"] = certificate_json(certify(ns.eigenvalues, ns.alpha, certify_config(opt)));
  } catch (const ZeroColumnError& e) {
    j["certificate"] = zero_column_witness(e);
  }
  return j;
}

Json decompose_report(const Instance& inst, const ReportOptions& opt) {
  Json j = header("decompose", inst, opt);
  const auto& pts = inst.system.eigenvalues;
  const std::size_t m = opt.m.value_or(inst.system.orbits());
  DecomposeConfig dc;
  dc.eta_fraction = opt.eta_fraction;
  j["decomposition"] = decomposition_json(pts, decompose(pts, m, dc));
  return j;
}

Json analyze_report(const Instance& inst, const ReportOptions& opt) {
  const auto t0 = Clock::now();
  Json j = header("analyze", inst, opt);
  const auto& sys = inst.system;
  sys.validate();
  const auto& pts = sys.eigenvalues;
  const std::uint64_t seed = effective_seed(inst, opt);

  j["standard_basis_profile"] = profile_json(standard_basis_profile(sys));

  Json constants;
  if (!pts.empty()) {
    const double d = delta(BlaschkeProduct(pts));
    constants["delta_B"] = number(d, "blaschke.delta");
    if (d > 0.0)
      constants["interpolation_constant"] = number(interpolation_constant(d), "kernels.interpolation_constant");
    constants["carleson_norm"] = number(carleson_norm(AtomicMeasure::from_points(pts)), "carleson.carleson_norm");
    const RieszBounds rb = riesz_bounds(pts);
    constants["riesz_lower"] = number(rb.lower, "kernels.riesz_bounds");
    constants["riesz_upper"] = number(rb.upper, "kernels.riesz_bounds");
  }

  try {
    const NormalizedSystem ns = normalize(sys);
    j["oracle"] = {{"normalized", frame_bounds_json(exact_frame_bounds(ns), "orbit_oracle.exact_frame_bounds")},
                   {"system", frame_bounds_json(system_frame_bounds(ns), "orbit_oracle.system_frame_bounds")},
                   {"bound_C", number(ns.bound_c, "orbit_oracle.normalize")}};
    if (opt.trunc) {
      j["oracle"]["truncated"] = {
          {"N", *opt.trunc},
          {"bounds", frame_bounds_json(truncated_orbit_bounds(ns, *opt.trunc), "orbit_oracle.truncated_orbit_bounds")},
          {"tail", number(orbit_tail_bound(ns, *opt.trunc), "orbit_oracle.orbit_tail_bound")}};
    }
    const TailBound tb = tail_lower_bound(ns, opt.n0);
    j["tail"] = {{"n0", opt.n0},
                 {"predicted", number(tb.predicted, "orbit_oracle.tail_lower_bound")},
                 {"exact", number(tb.exact, "orbit_oracle.tail_lower_bound")},
                 {"D_sq", number(tb.d_sq, "orbit_oracle.tail_lower_bound")},
                 {"all_zero", tb.all_zero}};

    constants["multi_bessel"] = number(multi_bessel(pts, ns.alpha), "carleson.multi_bessel");
    const FrameCertificate cert = certify(pts, ns.alpha, certify_config(opt));
    j["certificate"] = certificate_json(cert);
    j["decomposition"] = decomposition_json(pts, cert.decomposition);

    Json off = Json::array();
    for (const auto& layer : cert.decomposition.layers) {
      PointSequence reps;
      for (auto r : layer.representatives()) reps.push_back(pts[r]);
      const double g = 0.8 * layer.gamma;
      off.push_back({{"p", layer.p},
                     {"radius", number(g, "separation.decompose")},
                     {"lower_bound", number(lower_bound_off_zeros(BlaschkeProduct(reps), g, opt.blaschke_samples, seed),
                                            "blaschke.lower_bound_off_zeros")}});
    }
    j["blaschke_off_zeros"] = off;
  } catch (const ZeroColumnError& e) {
    j["certificate"] = zero_column_witness(e);
  }
  j["constants"] = constants;
  if (opt.timing)
    j["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - t0).count()}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render_svg(const PointSequence& points, const Decomposition& d) {
  constexpr double size = 640.0;
  constexpr double half = size / 2.0;
  constexpr double scale = 300.0;
  auto x = [&](Complex z) { return fmt(half + scale * z.real()); };
  auto y = [&](Complex z) { return fmt(half - scale * z.imag()); };

  std::vector<std::size_t> layer_of(points.size(), 0);
  for (const auto& l : d.layers)
    for (auto j : l.members()) layer_of[j] = l.p;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "  <circle cx=\"" << half << "\" cy=\"" << half << "\" r=\"" << scale
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (const auto& l : d.layers) {
    os << "  <g id=\"layer-" << l.p << "\" stroke=\"" << layer_color(l.p) << "\" fill=\"none\">\n";
    for (const auto& c : l.clusters) {
      const DiskPoint& center = points[c.representative];
      const EuclideanDisk eta_disk = euclidean_disk(Ball(center, l.eta));
      const EuclideanDisk gamma_disk = euclidean_disk(Ball(center, l.gamma));
      os << "    <circle cx=\"" << x(eta_disk.center) << "\" cy=\"" << y(eta_disk.center)
         << "\" r=\"" << fmt(scale * eta_disk.radius) << "\" stroke-width=\"0.8\"/>\n";
      os << "    <circle cx=\"" << x(gamma_disk.center) << "\" cy=\"" << y(gamma_disk.center)
         << "\" r=\"" << fmt(scale * gamma_disk.radius)
         << "\" stroke-width=\"0.6\" stroke-dasharray=\"4 3\"/>\n";
    }
    os << "  </g>\n";
  }
  for (std::size_t j = 0; j < points.size(); ++j) {
    const char* color = layer_of[j] ? layer_color(layer_of[j]) : "#555555";
    os << "  <circle cx=\"" << x(points[j].value()) << "\" cy=\"" << y(points[j].value())
       << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace orbitframe
