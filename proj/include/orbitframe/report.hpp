#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "orbitframe/certifier.hpp"
#include "orbitframe/instance.hpp"
#include "orbitframe/separation.hpp"

namespace orbitframe {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  std::optional<std::size_t> m;          // separation multiplicity for decompose
  double eta_fraction = 1.0 / 20.0;
  std::optional<std::uint64_t> seed;     // falls back to the instance seed, then 0
  std::size_t n0 = 1;
  std::optional<std::size_t> trunc;
  bool timing = false;
  std::size_t blaschke_samples = 64;
};

/// {"value": v, "source": op}; non-finite values become null.
Json number(double v, const std::string& source);

Json frame_bounds_json(const FrameBounds& b, const std::string& source);
Json decomposition_json(const PointSequence& points, const Decomposition& d);
Json certificate_json(const FrameCertificate& c);

Json analyze_report(const Instance& inst, const ReportOptions& opt);
Json certify_report(const Instance& inst, const ReportOptions& opt);
Json oracle_report(const Instance& inst, const ReportOptions& opt);
Json decompose_report(const Instance& inst, const ReportOptions& opt);

/// Pretty-printed with two-space indent and a trailing newline.
std::string dump(const Json& j);

/// Static SVG 1.1: unit circle, points colored by layer, eta_p balls solid
/// and gamma_p balls dashed around each representative.
std::string render_svg(const PointSequence& points, const Decomposition& d);

}  // namespace orbitframe
