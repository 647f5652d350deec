#pragma once

// The acceptance suite, shared by the test binary and `holo selftest`.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace holo {

struct AcceptanceOptions {
  std::uint64_t seed = 20241015;
  /// Invariant-search budget for the V-side oracle.
  std::size_t budget = 64;
  /// Multiplies every instance count (1.0 = full suite).
  double scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::size_t failures = 0;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "[PASS] 3 name: detail (1.23 s)"
std::string format_result(const CriterionResult& r);

}  // namespace holo
