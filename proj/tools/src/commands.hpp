#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eorad/bounds.hpp"
#include "eorad/radii.hpp"

namespace eorad::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct ComputeOptions {
  std::filesystem::path input;
  std::optional<std::filesystem::path> json_out;
  std::uint64_t seed = 42;
  int restarts = EuclideanRadiusConfig{}.restarts;
};

struct BoundsOptions {
  std::filesystem::path input;
  std::optional<double> t;
  std::optional<double> alpha;
  std::string fg = "sqrt";
  bool all = false;
  std::optional<std::filesystem::path> json_out;
  std::uint64_t seed = 42;
  int restarts = EuclideanRadiusConfig{}.restarts;
};

struct VerifyOptions {
  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 42;
  /// .csv writes the records table; anything else writes a JSON report.
  std::optional<std::filesystem::path> out;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_bounds(const BoundsOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

/// Every single-tuple bound on w_e(A) at the given parameters (t and alpha
/// default to 1/2), or the full default sweep when `all` is set.
std::vector<BoundReport> tuple_bounds(const OperatorTuple& a, std::optional<double> t,
                                      std::optional<double> alpha, const SpectralFunctionPair& fg, bool all,
                                      const EuclideanRadiusConfig& cfg);

/// FNV-1a of a report's bytes, printed by `verify` for quick comparison.
std::uint64_t text_digest(const std::string& text);

}  // namespace eorad::cli
