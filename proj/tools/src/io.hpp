#pragma once

// File formats used by the command-line tool.
//
// TupleFile: {"d": 2, "dim": 2, "matrices": [[[[re, im], ...], ...], ...]}
//   matrices[k][row][col] is a [re, im] pair.
// ReportFile: {"schema_version", "command", "seed", "runtime", ...payload}.
// Records CSV: bound_id,trial_seed,lhs,rhs,slack,pass.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eorad/bounds.hpp"
#include "eorad/operator_tuple.hpp"
#include "eorad/radii.hpp"
#include "eorad/verify.hpp"

namespace eorad::cli {

inline constexpr int kReportSchemaVersion = 1;

/// Malformed input file. The message names the offending field or index.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

OperatorTuple parse_tuple(const std::string& text);
OperatorTuple read_tuple_file(const std::filesystem::path& path);
nlohmann::json tuple_to_json(const OperatorTuple& a);
void write_tuple_file(const std::filesystem::path& path, const OperatorTuple& a);

nlohmann::json to_json(const RadiusEstimate& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TightnessReport& t);
nlohmann::json to_json(const EuclideanRadiusConfig& c);

/// Report skeleton: schema version, command echo, seed and runtime metadata.
/// Runtime metadata is deterministic (no timings, hostnames or dates).
nlohmann::json make_report(const std::string& command, const nlohmann::json& args, std::uint64_t seed);

/// Pretty-printed with a trailing newline; doubles round-trip exactly.
std::string dump_report(const nlohmann::json& report);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

void write_records_csv(std::ostream& os, const std::vector<VerificationRecord>& records);
std::string records_csv(const std::vector<VerificationRecord>& records);

/// 17 significant digits.
std::string format_full(double v);

}  // namespace eorad::cli
