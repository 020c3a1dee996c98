#include "orbitframe/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "orbitframe/blaschke.hpp"
#include "orbitframe/carleson.hpp"
#include "orbitframe/certifier.hpp"
#include "orbitframe/instance.hpp"
#include "orbitframe/kernels.hpp"
#include "orbitframe/rng.hpp"
#include "orbitframe/separation.hpp"

namespace orbitframe {
namespace {

Complex random_point(Rng& rng, double radius = 0.99) {
  return std::polar(radius * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
}

Instance random_instance(Rng& rng, std::size_t k) {
  const auto& names = generator_names();
  const std::string& name = names[1 + k % 3];
  const std::size_t size = 2 + rng.index(14);
  const std::size_t m = 1 + rng.index(3);
  return generate_instance(name, size, m, rng.next());
}

std::string worst(const char* what, double v) {
  std::ostringstream os;
  os << what << " " << v;
  return os.str();
}

CheckResult check(const std::string& name, const std::function<std::string(bool&)>& body) {
  CheckResult r{name, true, ""};
  try {
    r.detail = body(r.pass);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<CheckResult> out;
  Rng rng(seed);

  out.push_back(check("mobius_identities", [&](bool& pass) {
    double err = 0.0;
    for (std::size_t t = 0; t < 100 * trials; ++t) {
      const DiskPoint a(random_point(rng)), w(random_point(rng)), z(random_point(rng));
      const Complex pz = mobius(a, z);
      err = std::max(err, std::abs(mobius(a, DiskPoint(pz)) - z.value()));
      const double lhs = 1.0 - std::norm(pz);
      const double rhs = a.weight() * z.weight() / std::norm(1.0 - std::conj(a.value()) * z.value());
      err = std::max(err, std::abs(lhs - rhs));
      err = std::max(err, std::abs(rho(DiskPoint(mobius(a, w)), DiskPoint(pz)) - rho(w, z)));
    }
    pass = err <= 1e-10;
    return worst("max error", err);
  }));

  out.push_back(check("kernel_difference", [&](bool& pass) {
    double excess = -1.0;
    for (std::size_t t = 0; t < 100 * trials; ++t) {
      const DiskPoint v(random_point(rng)), w(random_point(rng));
      const double diff = 2.0 - 2.0 * kernel_inner(v, w).real();
      excess = std::max(excess, diff - 2.0 * rho(v, w) * rho(v, w));
    }
    pass = excess <= 1e-12;
    return worst("max excess", excess);
  }));

  out.push_back(check("oracle_truncation", [&](bool& pass) {
    double err = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const NormalizedSystem ns = normalize(random_instance(rng, t).system);
      const std::size_t n = truncation_for(ns, 1e-9);
      const FrameBounds a = exact_frame_bounds(ns), b = truncated_orbit_bounds(ns, n);
      err = std::max({err, std::abs(a.lower - b.lower), std::abs(a.upper - b.upper)});
    }
    pass = err <= 1e-7;
    return worst("max deviation", err);
  }));

  out.push_back(check("bessel_sandwich", [&](bool& pass) {
    double excess = -1.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const NormalizedSystem ns = normalize(random_instance(rng, t).system);
      const double b2 = multi_bessel(ns.eigenvalues, ns.alpha);
      const double c2 = riesz_bounds(ns.eigenvalues).upper;
      const double m = static_cast<double>(ns.alpha.orbits());
      excess = std::max({excess, b2 - c2 - 1e-9, c2 - m * b2 - 1e-9});
    }
    pass = excess <= 0.0;
    return worst("max violation", excess);
  }));

  out.push_back(check("decomposition_invariants", [&](bool& pass) {
    std::size_t bad = 0;
    std::string first;
    for (std::size_t t = 0; t < trials; ++t) {
      const Instance inst = random_instance(rng, t);
      const auto& pts = inst.system.eigenvalues;
      const Decomposition d = decompose(pts, inst.system.orbits());
      const auto v = decomposition_violations(pts, d);
      if (!v.empty()) {
        ++bad;
        if (first.empty()) first = v.front();
      }
    }
    pass = bad == 0;
    return bad ? first : "ok";
  }));

  out.push_back(check("necessity_and_soundness", [&](bool& pass) {
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const NormalizedSystem ns = normalize(random_instance(rng, t).system);
      const FrameCertificate c = certify(ns.eigenvalues, ns.alpha);
      if (!c.oracle) continue;
      if (c.verdict == Verdict::certified_frame &&
          !(c.oracle->lower > 0.0 && c.lower_bound <= c.oracle->lower + 1e-8))
        ++bad;
      if (c.necessity && !c.necessity->pass) ++bad;
    }
    pass = bad == 0;
    return std::to_string(bad) + " failures";
  }));

  out.push_back(check("tail_bound", [&](bool& pass) {
    double excess = -1.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const NormalizedSystem ns = normalize(random_instance(rng, t).system);
      for (std::size_t n0 : {1u, 5u}) {
        const TailBound tb = tail_lower_bound(ns, n0);
        excess = std::max(excess, tb.predicted - tb.exact - 1e-9);
      }
    }
    pass = excess <= 0.0;
    return worst("max excess", excess);
  }));

  out.push_back(check("instance_round_trip", [&](bool& pass) {
    std::size_t bad = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const Instance inst = random_instance(rng, t);
      const std::string text = emit_instance(inst);
      if (emit_instance(parse_instance(text)) != text) ++bad;
    }
    pass = bad == 0;
    return std::to_string(bad) + " mismatches";
  }));

  return out;
}

}  // namespace orbitframe
