#pragma once

// The operations behind the `holo` command line and the Python module: JSON
// input in, JSON report out.  Invalid input raises std::invalid_argument
// (InputError) or nlohmann::json exceptions.

#include <cstddef>
#include <cstdint>
#include <string>

#include "holo/json_io.hpp"

namespace holo {

struct CommandOptions {
  std::uint64_t seed = 0;
  std::size_t budget = 64;
  double tol = 1e-9;
};

struct MakeOptions {
  int type = 1;
  std::string B = "0";
  std::size_t n = 2;
  bool surjective = true;
  std::uint64_t seed = 0;
};

/// Report plus process exit status: 0 ok, 1 rejected input, 2 REDUCIBLE.
struct CommandResult {
  json report;
  int status = 0;
};

inline constexpr int kStatusOk = 0;
inline constexpr int kStatusInput = 1;
inline constexpr int kStatusReducible = 2;

CommandResult run_closure(const json& input, const CommandOptions& o = {});
CommandResult run_check_wi(const json& input, const CommandOptions& o = {});
/// ClassificationError becomes an "error" object in the report with status 1.
CommandResult run_classify(const json& input, const CommandOptions& o = {});
CommandResult run_boundary_act(const json& input, const CommandOptions& o = {});
CommandResult run_transport(const json& input, const CommandOptions& o = {});
CommandResult run_make(const MakeOptions& m);
/// Acceptance suite at `scale`; per-criterion lines go to `log` if given.
CommandResult run_selftest(const CommandOptions& o = {}, double scale = 0.2, std::string* log = nullptr);

}  // namespace holo
