#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "orbitframe/certifier.hpp"
#include "orbitframe/instance.hpp"
#include "orbitframe/kernels.hpp"
#include "orbitframe/oracle.hpp"
#include "orbitframe/report.hpp"
#include "orbitframe/separation.hpp"

namespace py = pybind11;
using namespace orbitframe;

namespace {

PointSequence to_points(const std::vector<Complex>& z) { return make_points(z); }

AlphaMatrix to_alpha(const std::vector<std::vector<Complex>>& rows, std::size_t n) {
  if (rows.empty()) return AlphaMatrix::ones(n);
  CMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != n) throw InvalidArgument("alpha row length differs from point count");
    for (std::size_t j = 0; j < n; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return AlphaMatrix(a);
}

std::vector<std::vector<Complex>> to_rows(const CMatrix& m) {
  std::vector<std::vector<Complex>> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  // translators run newest first, so the base class goes in first
  auto& base = py::register_exception<Error>(mod, "Error");
  py::register_exception<DomainError>(mod, "DomainError", base.ptr());
  py::register_exception<ParseError>(mod, "ParseError", base.ptr());

  mod.def("rho", [](Complex z, Complex w) { return rho(DiskPoint(z), DiskPoint(w)); });
  mod.def("mobius", [](Complex lambda, Complex z) { return mobius(DiskPoint(lambda), z); });
  mod.def("gram", [](const std::vector<Complex>& z) { return to_rows(gram(to_points(z)).entries); });
  mod.def("riesz_bounds", [](const std::vector<Complex>& z) {
    const RieszBounds r = riesz_bounds(to_points(z));
    return py::make_tuple(r.lower, r.upper);
  });
  mod.def(
      "exact_frame_bounds",
      [](const std::vector<Complex>& z, const std::vector<std::vector<Complex>>& alpha) {
        const FrameBounds b = exact_frame_bounds(unit_system(to_points(z), to_alpha(alpha, z.size())));
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("points"), py::arg("alpha") = std::vector<std::vector<Complex>>{});
  mod.def(
      "certify",
      [](const std::vector<Complex>& z, const std::vector<std::vector<Complex>>& alpha) {
        const FrameCertificate c = certify(to_points(z), to_alpha(alpha, z.size()));
        py::dict d;
        d["verdict"] = to_string(c.verdict);
        d["lower_bound"] = c.lower_bound;
        d["eta"] = c.eta;
        d["attempts"] = c.attempts;
        if (c.oracle) d["oracle"] = py::make_tuple(c.oracle->lower, c.oracle->upper);
        return d;
      },
      py::arg("points"), py::arg("alpha") = std::vector<std::vector<Complex>>{});
  mod.def("decompose", [](const std::vector<Complex>& z, std::size_t m) {
    const Decomposition d = decompose(to_points(z), m);
    py::list layers;
    for (const auto& l : d.layers) {
      py::dict e;
      e["p"] = l.p;
      e["beta"] = l.beta;
      e["gamma"] = l.gamma;
      e["eta"] = l.eta;
      std::vector<std::vector<std::size_t>> clusters;
      for (const auto& c : l.clusters) clusters.push_back(c.members);
      e["clusters"] = clusters;
      layers.append(e);
    }
    return layers;
  });
  mod.def("generators", [] { return generator_names(); });
  mod.def("generate", [](const std::string& name, std::size_t size, std::size_t m, std::uint64_t seed) {
    return emit_instance(generate_instance(name, size, m, seed));
  });
  mod.def("canonical", [](const std::string& text) { return emit_instance(parse_instance(text)); });
  mod.def(
      "analyze",
      [](const std::string& text, std::optional<std::uint64_t> seed) {
        ReportOptions opt;
        opt.seed = seed;
        return dump(analyze_report(parse_instance(text), opt));
      },
      py::arg("text"), py::arg("seed") = std::nullopt);
}
