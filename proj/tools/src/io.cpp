#include "io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace eorad::cli {

using nlohmann::json;

namespace {

std::string where(std::size_t k) { return "matrices[" + std::to_string(k) + "]"; }
std::string where(std::size_t k, std::size_t i) { return where(k) + "[" + std::to_string(i) + "]"; }
std::string where(std::size_t k, std::size_t i, std::size_t j) {
  return where(k, i) + "[" + std::to_string(j) + "]";
}

long positive_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long>() < 1) {
    throw ParseError(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<long>();
}

double finite_number(const json& v, const std::string& at) {
  if (!v.is_number()) throw ParseError(at + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(at + ": entry is not finite");
  return x;
}

}  // namespace

OperatorTuple parse_tuple(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  const long d = positive_int(doc, "d");
  const long dim = positive_int(doc, "dim");
  if (!doc.contains("matrices") || !doc["matrices"].is_array()) {
    throw ParseError("missing array field 'matrices'");
  }
  const json& mats = doc["matrices"];
  if (mats.size() != static_cast<std::size_t>(d)) {
    throw ParseError("'matrices' has " + std::to_string(mats.size()) + " entries but d = " + std::to_string(d));
  }
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const json& rows = mats[k];
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
      throw ParseError(where(k) + ": expected " + std::to_string(dim) + " rows");
    }
    CMatrix m(dim, dim);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& row = rows[i];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
        throw ParseError(where(k, i) + ": expected " + std::to_string(dim) + " entries");
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        const json& e = row[j];
        if (!e.is_array() || e.size() != 2) throw ParseError(where(k, i, j) + ": expected a [re, im] pair");
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            cdouble(finite_number(e[0], where(k, i, j) + "[0]"), finite_number(e[1], where(k, i, j) + "[1]"));
      }
    }
    out.push_back(std::move(m));
  }
  return OperatorTuple(std::move(out));
}

OperatorTuple read_tuple_file(const std::filesystem::path& path) {
  try {
    return parse_tuple(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json tuple_to_json(const OperatorTuple& a) {
  json mats = json::array();
  for (const auto& m : a) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"d", a.d()}, {"dim", a.dim()}, {"matrices", std::move(mats)}};
}

void write_tuple_file(const std::filesystem::path& path, const OperatorTuple& a) {
  write_text(path, tuple_to_json(a).dump(2) + "\n");
}

json to_json(const RadiusEstimate& r) {
  return {{"value", r.value},       {"certified_lower", r.certified_lower}, {"restarts", r.restarts},
          {"iterations", r.iterations}, {"tolerance", r.tolerance},     {"method", r.method}};
}

json to_json(const BoundReport& r) {
  json j{{"bound_id", std::string(to_string(r.id))},
         {"value", r.value},
         {"params", r.params},
         {"components", r.components},
         {"formula", r.formula}};
  if (!r.function_pair.empty()) j["function_pair"] = r.function_pair;
  return j;
}

json to_json(const VerificationRecord& r) {
  return {{"bound_id", r.bound_id}, {"trial_seed", r.trial_seed}, {"trial_index", r.trial_index},
          {"lhs", r.lhs},           {"rhs", r.rhs},               {"slack", r.slack},
          {"pass", r.pass},         {"instance_digest", r.instance_digest}};
}

VerificationRecord record_from_json(const json& j) {
  VerificationRecord r;
  r.bound_id = j.at("bound_id").get<std::string>();
  r.trial_seed = j.at("trial_seed").get<std::uint64_t>();
  r.trial_index = j.at("trial_index").get<std::uint64_t>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.slack = j.at("slack").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.instance_digest = j.at("instance_digest").get<std::uint64_t>();
  return r;
}

json to_json(const TightnessReport& t) {
  json per = json::object();
  for (const auto& [id, s] : t.per_bound) {
    per[id] = {{"count", s.count},         {"mean_ratio", s.mean_ratio},
               {"median_ratio", s.median_ratio}, {"min_ratio", s.min_ratio},
               {"equality_count", s.equality_count}, {"failures", s.failures}};
  }
  json wins = json::array();
  for (const auto& [pair, w] : t.win_rates) {
    wins.push_back({{"first", pair.first},
                    {"second", pair.second},
                    {"shared", w.shared},
                    {"first_wins", w.first_wins},
                    {"second_wins", w.second_wins}});
  }
  return {{"per_bound", std::move(per)}, {"win_rates", std::move(wins)}};
}

json to_json(const EuclideanRadiusConfig& c) {
  return {{"restarts", c.restarts},
          {"max_iters", c.max_iters},
          {"tol", c.tol},
          {"seed", c.seed},
          {"lambda_reduction_max_d", c.lambda_reduction_max_d}};
}

json make_report(const std::string& command, const json& args, std::uint64_t seed) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", {{"name", command}, {"args", args}}},
          {"seed", seed},
          {"runtime",
           {{"tool", "eorad"},
            {"library_version", EORAD_VERSION},
            {"threads", 1},
            {"slack_tolerance", kSlackTolerance},
            {"policy", std::string(kVerificationPolicy)}}}};
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
  os << text;
  if (!os) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string format_full(double v) {
  std::ostringstream ss;
  ss << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return ss.str();
}

void write_records_csv(std::ostream& os, const std::vector<VerificationRecord>& records) {
  os << "bound_id,trial_seed,lhs,rhs,slack,pass\n";
  for (const auto& r : records) {
    os << r.bound_id << ',' << r.trial_seed << ',' << format_full(r.lhs) << ',' << format_full(r.rhs) << ','
       << format_full(r.slack) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

std::string records_csv(const std::vector<VerificationRecord>& records) {
  std::ostringstream ss;
  write_records_csv(ss, records);
  return ss.str();
}

}  // namespace eorad::cli
