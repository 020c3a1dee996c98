#include "orbitframe/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "orbitframe/rng.hpp"

namespace orbitframe {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Complex read_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(where + ": expected a [re, im] pair of numbers");
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string pair_text(Complex z) {
  return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string quoted(const std::string& s) { return json(s).dump(); }

// Random unit column in C^m.
CVector unit_column(Rng& rng, std::size_t m) {
  CVector v(static_cast<Eigen::Index>(m));
  double n = 0.0;
  while (!(n > 1e-3)) {
    for (std::size_t i = 0; i < m; ++i)
      v(static_cast<Eigen::Index>(i)) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    n = v.norm();
  }
  return v / n;
}

Complex random_in_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  return std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
}

// Points drawn by `draw` until pairwise rho >= sep or attempts run out.
std::vector<Complex> separated_points(Rng& rng, std::size_t count, double sep,
                                      const std::function<Complex()>& draw) {
  std::vector<Complex> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 100000 * (count + 1))
      throw InvalidArgument("generator could not place " + std::to_string(count) +
                            " separated points");
    const Complex z = draw();
    bool ok = true;
    for (const auto& w : out)
      if (rho(DiskPoint(z), DiskPoint(w)) < sep) {
        ok = false;
        break;
      }
    if (ok) out.push_back(z);
  }
  (void)rng;
  return out;
}

Instance assemble(const std::vector<Complex>& lambdas, const std::vector<CVector>& alpha_cols,
                  const std::vector<double>& d, std::size_t m) {
  Instance inst;
  inst.system.eigenvalues = make_points(lambdas);
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  for (std::size_t i = 0; i < m; ++i) {
    CVector a(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      a(j) = d[ju] * std::conj(alpha_cols[ju](static_cast<Eigen::Index>(i))) *
             std::sqrt(inst.system.eigenvalues[ju].weight());
    }
    inst.system.vectors.push_back(std::move(a));
  }
  return inst;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("instance is not valid JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(col),
                     line, col);
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  if (!doc.contains("eigenvalues") || !doc["eigenvalues"].is_array())
    throw ParseError("instance needs an \"eigenvalues\" array");
  if (!doc.contains("vectors") || !doc["vectors"].is_array() || doc["vectors"].empty())
    throw ParseError("instance needs a nonempty \"vectors\" array");

  Instance inst;
  const auto& ev = doc["eigenvalues"];
  for (std::size_t j = 0; j < ev.size(); ++j) {
    const Complex z = read_pair(ev[j], "eigenvalues[" + std::to_string(j) + "]");
    try {
      inst.system.eigenvalues.emplace_back(z);
    } catch (const DomainError&) {
      throw EigenvalueOutsideDisk(j, "eigenvalue " + std::to_string(j) + " = " + pair_text(z) +
                                         " is not inside the unit disk");
    }
  }
  const auto& vecs = doc["vectors"];
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    const std::string where = "vectors[" + std::to_string(i) + "]";
    if (!vecs[i].is_array()) throw ParseError(where + ": expected an array of pairs");
    if (vecs[i].size() != ev.size())
      throw ParseError(where + " has " + std::to_string(vecs[i].size()) + " entries, expected " +
                       std::to_string(ev.size()));
    CVector a(static_cast<Eigen::Index>(ev.size()));
    for (std::size_t j = 0; j < ev.size(); ++j)
      a(static_cast<Eigen::Index>(j)) = read_pair(vecs[i][j], where + "[" + std::to_string(j) + "]");
    inst.system.vectors.push_back(std::move(a));
  }
  if (doc.contains("metadata")) {
    const auto& md = doc["metadata"];
    if (!md.is_object()) throw ParseError("\"metadata\" must be an object");
    if (md.contains("generator")) {
      if (!md["generator"].is_string()) throw ParseError("metadata.generator must be a string");
      inst.generator = md["generator"].get<std::string>();
    }
    if (md.contains("seed")) {
      if (!md["seed"].is_number_unsigned()) throw ParseError("metadata.seed must be a nonnegative integer");
      inst.seed = md["seed"].get<std::uint64_t>();
    }
    if (md.contains("description")) {
      if (!md["description"].is_string()) throw ParseError("metadata.description must be a string");
      inst.description = md["description"].get<std::string>();
    }
  }
  return inst;
}

Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream os;
  const auto& ev = instance.system.eigenvalues;
  os << "{\n  \"eigenvalues\": [";
  for (std::size_t j = 0; j < ev.size(); ++j)
    os << (j ? ",\n    " : "\n    ") << pair_text(ev[j].value());
  os << (ev.empty() ? "]" : "\n  ]") << ",\n  \"vectors\": [";
  const auto& vecs = instance.system.vectors;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    os << (i ? ",\n    [" : "\n    [");
    for (Eigen::Index j = 0; j < vecs[i].size(); ++j)
      os << (j ? ",\n      " : "\n      ") << pair_text(vecs[i](j));
    os << (vecs[i].size() ? "\n    ]" : "]");
  }
  os << (vecs.empty() ? "]" : "\n  ]");
  const bool has_meta = !instance.generator.empty() || instance.seed || !instance.description.empty();
  if (has_meta) {
    os << ",\n  \"metadata\": {";
    const char* sep = "\n    ";
    if (!instance.generator.empty()) {
      os << sep << "\"generator\": " << quoted(instance.generator);
      sep = ",\n    ";
    }
    if (instance.seed) {
      os << sep << "\"seed\": " << *instance.seed;
      sep = ",\n    ";
    }
    if (!instance.description.empty()) os << sep << "\"description\": " << quoted(instance.description);
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

std::string instance_digest(const Instance& instance) {
  const std::string text = emit_instance(instance);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"radial", "perturbed-pairs", "clustered",
                                              "random-carleson"};
  return names;
}

Instance generate_instance(const std::string& name, std::size_t size, std::size_t m,
                           std::uint64_t seed) {
  if (size == 0) throw InvalidArgument("generator size must be positive");
  if (m == 0) throw InvalidArgument("generator needs m >= 1");
  Rng rng(seed);
  std::vector<Complex> lambdas;
  std::vector<CVector> cols;
  std::vector<double> d;
  constexpr double kPairRadius = 1e-4;

  if (name == "radial") {
    if (size > 39) throw InvalidArgument("radial generator supports at most 39 points");
    for (std::size_t j = 1; j <= size; ++j) lambdas.emplace_back(1.0 - std::ldexp(1.0, -static_cast<int>(j)), 0.0);
    for (std::size_t j = 0; j < size; ++j) {
      cols.push_back(m == 1 ? CVector::Ones(1) : unit_column(rng, m));
      d.push_back(1.0);
    }
  } else if (name == "perturbed-pairs") {
    const std::size_t centers = (size + 1) / 2;
    const auto base = separated_points(rng, centers, 0.3, [&] { return random_in_disk(rng, 0.9); });
    for (std::size_t k = 0; k < centers && lambdas.size() < size; ++k) {
      lambdas.push_back(base[k]);
      if (lambdas.size() < size) {
        const Complex w = std::polar(kPairRadius, 2.0 * std::numbers::pi * rng.uniform());
        lambdas.push_back(mobius(DiskPoint(base[k]), w));
      }
    }
  } else if (name == "clustered") {
    const auto base = separated_points(rng, size, 0.3, [&] { return random_in_disk(rng, 0.9); });
    std::size_t k = 0;
    while (lambdas.size() < size) {
      const std::size_t cluster = 1 + rng.index(m);
      lambdas.push_back(base[k]);
      for (std::size_t c = 1; c < cluster && lambdas.size() < size; ++c) {
        const Complex w = std::polar(kPairRadius * rng.uniform(0.2, 1.0),
                                     2.0 * std::numbers::pi * rng.uniform());
        lambdas.push_back(mobius(DiskPoint(base[k]), w));
      }
      ++k;
    }
  } else if (name == "random-carleson") {
    lambdas = separated_points(rng, size, 0.05, [&] {
      const double r = 1.0 - std::pow(2.0, -rng.uniform(1.0, 6.0));
      return std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
    });
  } else {
    throw InvalidArgument("unknown generator '" + name + "'");
  }

  if (cols.empty()) {
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      cols.push_back(unit_column(rng, m));
      d.push_back(rng.uniform(0.5, 2.0));
    }
  }
  Instance inst = assemble(lambdas, cols, d, m);
  inst.generator = name;
  inst.seed = seed;
  inst.description = name + " instance, J = " + std::to_string(lambdas.size()) +
                     ", m = " + std::to_string(m);
  return inst;
}

}  // namespace orbitframe
