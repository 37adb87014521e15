#pragma once

// Empirical verification: lemma checks, the randomized inequality suite and
// tightness summaries.
//
// Policy: the left-hand side of every bound record is a certified lower bound
// (an objective value attained at an explicit unit vector). Right-hand sides
// are exact closed forms or optimizer values of w_e terms. A failing record is
// therefore never an optimizer artifact on the left and is treated as a bug.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eorad/radii.hpp"

namespace eorad {

inline constexpr double kSlackTolerance = 1e-8;
inline constexpr double kEqualityThreshold = 1.0 - 1e-6;
inline constexpr std::string_view kVerificationPolicy =
    "lhs = certified lower bound of a supremum (value attained at an explicit unit vector); "
    "rhs = exact closed form or optimizer value of each w_e term; "
    "pass iff rhs - lhs >= -1e-8 * max(1, rhs); any failure is investigated as a bug";

struct VerificationRecord {
  std::string bound_id;
  std::uint64_t trial_seed = 0;
  std::uint64_t trial_index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool pass = false;
  std::uint64_t instance_digest = 0;
};

/// Fills slack and pass from lhs and rhs.
VerificationRecord make_record(std::string bound_id, std::uint64_t trial_seed,
                               std::uint64_t trial_index, double lhs, double rhs,
                               std::uint64_t digest);

/// FNV-1a over the raw bytes of everything added.
class Digest {
 public:
  Digest& add(std::string_view s);
  Digest& add(double v);
  Digest& add(std::uint64_t v);
  Digest& add(const CMatrix& m);
  Digest& add(const OperatorTuple& a);
  std::uint64_t value() const { return h_; }

 private:
  void bytes(const void* p, std::size_t n);
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

/// Seed for trial `index` of `family`, derived from the master seed only.
std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view family, std::uint64_t index);

/// McCarthy, Buzano, Bohr, positive-block Schwarz and mixed Schwarz checks:
/// one record per lemma per trial.
std::vector<VerificationRecord> check_lemmas(int trials, std::uint64_t seed);

struct SuiteConfig {
  /// Family names (see suite_families). Empty means every family.
  std::vector<std::string> families;
  int trials = 1000;
  int min_dim = 2;
  int max_dim = 5;
  int max_d = 3;
  std::uint64_t master_seed = 42;
  /// Every `stress_period`-th trial is scaled by `stress_scale` (0 disables).
  int stress_period = 10;
  double stress_scale = 1e3;
  EuclideanRadiusConfig radius;
};

/// Families in a named suite: "lemmas", "bounds", "blockmat" or "all".
/// Throws ConfigError for an unknown name.
std::vector<std::string> suite_families(std::string_view suite);
const std::vector<std::string>& all_families();

void validate(const SuiteConfig& cfg);

/// Runs every family for cfg.trials trials. Records are sorted by
/// (bound_id, trial_index), so output is independent of execution order.
std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg);

/// Records of a single trial of one family (the unit the suite is built from).
std::vector<VerificationRecord> run_trial(const std::string& family, std::uint64_t index,
                                          const SuiteConfig& cfg);

struct BoundSummary {
  std::size_t count = 0;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double min_ratio = 0.0;
  std::size_t equality_count = 0;
  std::size_t failures = 0;
};

struct WinRate {
  std::size_t shared = 0;  ///< instances where both bounds were evaluated
  double first_wins = 0.0;  ///< fraction where the first bound is tighter; ties count 1/2
  double second_wins = 0.0;
};

struct TightnessReport {
  std::map<std::string, BoundSummary> per_bound;
  std::map<std::pair<std::string, std::string>, WinRate> win_rates;
};

/// lhs/rhs ratio statistics per bound id (0/0 counts as ratio 1) and pairwise
/// win rates over records sharing an instance digest. Throws ConfigError on
/// empty input.
TightnessReport tightness_report(const std::vector<VerificationRecord>& records);

}  // namespace eorad
