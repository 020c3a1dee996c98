#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitframe/errors.hpp"
#include "orbitframe/oracle.hpp"

namespace orbitframe {

/// Unparseable or structurally invalid instance text. Line and column are
/// 1-based and zero when the error is structural rather than syntactic.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An eigenvalue of the instance is not inside the admissible disk.
class EigenvalueOutsideDisk : public DomainError {
 public:
  EigenvalueOutsideDisk(std::size_t index, const std::string& what)
      : DomainError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

struct Instance {
  OrbitSystem system;
  std::string generator;
  std::optional<std::uint64_t> seed;
  std::string description;
};

/// Instance JSON:
///   {"eigenvalues": [[re, im], ...],
///    "vectors": [[[re, im], ...], ...],      // m lists of length J
///    "metadata": {"generator": s, "seed": n, "description": s}}   // optional
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

/// Canonical text: fixed key order, one pair per line, shortest round-trip
/// number formatting. parse_instance(emit_instance(x)) re-emits identically.
std::string emit_instance(const Instance& instance);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// FNV-1a 64-bit digest of the canonical text, as "fnv1a64:<16 hex digits>".
std::string instance_digest(const Instance& instance);

const std::vector<std::string>& generator_names();

/// Named generators: "radial" (lambda_j = 1 - 2^-j), "perturbed-pairs",
/// "clustered", "random-carleson". All randomness derives from `seed`.
Instance generate_instance(const std::string& name, std::size_t size, std::size_t m,
                           std::uint64_t seed);

}  // namespace orbitframe
