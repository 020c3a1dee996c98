#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orbitframe {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Seeded self-checks over generated instances. `trials` scales the number
/// of random cases per check.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, std::size_t trials = 20);

}  // namespace orbitframe
