#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "eorad/generators.hpp"
#include "fixtures.hpp"
#include "io.hpp"

using namespace eorad;
using namespace eorad::cli;
using namespace eorad::testing;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("eorad_test_" + name);
}

TEST(TupleFile, RoundTrip) {
  Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    const OperatorTuple a = random_tuple(1 + i % 3, 1 + i % 4, i % 2 ? 1e-3 : 1e3, rng);
    const OperatorTuple b = parse_tuple(tuple_to_json(a).dump());
    ASSERT_EQ(a.d(), b.d());
    for (std::size_t k = 0; k < a.d(); ++k) EXPECT_EQ(a[k], b[k]);
  }
}

TEST(TupleFile, ErrorsNameTheField) {
  auto msg = [](const std::string& text) {
    try {
      parse_tuple(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(msg(R"({"d":1,"dim":2,"matrices":[[[[0,0],[1,0]],[[0,0]]]]})").find("matrices[0][1]"),
            std::string::npos);
  EXPECT_NE(msg(R"({"d":1,"dim":1,"matrices":[[[[0]]]]})").find("matrices[0][0][0]"), std::string::npos);
  EXPECT_NE(msg(R"({"dim":1,"matrices":[]})").find("'d'"), std::string::npos);
  EXPECT_NE(msg(R"({"d":2,"dim":1,"matrices":[[[[1,0]]]]})").find("d = 2"), std::string::npos);
  EXPECT_NE(msg("{not json").find("invalid JSON"), std::string::npos);
}

TEST(Report, RecordsRoundTrip) {
  const auto r = make_record("TH2", 123456789012345ULL, 4, 0.1234567890123456789, 0.3, 99);
  const auto back = record_from_json(nlohmann::json::parse(to_json(r).dump()));
  EXPECT_EQ(back.bound_id, r.bound_id);
  EXPECT_EQ(back.trial_seed, r.trial_seed);
  EXPECT_EQ(back.lhs, r.lhs);
  EXPECT_EQ(back.slack, r.slack);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.instance_digest, r.instance_digest);
  const auto rep = make_report("verify", {{"suite", "all"}}, 42);
  EXPECT_EQ(rep.at("schema_version"), kReportSchemaVersion);
  EXPECT_EQ(rep.at("seed"), 42);
}

TEST(Csv, Columns) {
  const std::string csv = records_csv({make_record("TH2", 7, 0, 0.5, 1.0, 0)});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "bound_id,trial_seed,lhs,rhs,slack,pass");
  EXPECT_NE(csv.find("TH2,7,0.5,1,0.5,true"), std::string::npos);
}

TEST(Commands, ComputeJ) {
  const auto path = temp_path("j.json");
  write_tuple_file(path, OperatorTuple{J()});
  std::ostringstream out, err;
  ComputeOptions opt;
  opt.input = path;
  opt.json_out = temp_path("j_report.json");
  EXPECT_EQ(cmd_compute(opt, out, err), 0);
  const auto rep = nlohmann::json::parse(read_text(*opt.json_out));
  EXPECT_NEAR(rep["euclidean_radius"]["value"].get<double>(), 0.5, 1e-6);
  EXPECT_NEAR(rep["tuple_norm"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(rep["numerical_radii"][0]["value"].get<double>(), 0.5, 1e-6);
}

TEST(Commands, ComputeIdentityPair) {
  const auto path = temp_path("ii.json");
  write_tuple_file(path, OperatorTuple::identities(2, 2));
  std::ostringstream out, err;
  ComputeOptions opt;
  opt.input = path;
  EXPECT_EQ(cmd_compute(opt, out, err), 0);
  EXPECT_NE(out.str().find("1.4142136"), std::string::npos);
}

TEST(Commands, BoundsAllOnJ) {
  const auto reps = tuple_bounds(OperatorTuple{J()}, std::nullopt, std::nullopt, SpectralFunctionPair::sqrt_pair(),
                                 true, {});
  auto find = [&](BoundId id, double t) {
    for (const auto& r : reps) {
      if (r.id == id && (!r.params.count("t") || r.params.at("t") == t)) return r.value;
    }
    return -1.0;
  };
  EXPECT_NEAR(find(BoundId::TH2, 0.5), 0.70711, 1e-5);
  EXPECT_NEAR(find(BoundId::ABSTRACT, 0.5), 0.70711, 1e-5);
  EXPECT_NEAR(find(BoundId::THEO1, 0.5), 0.5, 1e-6);
}

TEST(Commands, BoundsIdentityAllOne) {
  const auto reps = tuple_bounds(OperatorTuple{I2()}, std::nullopt, std::nullopt, SpectralFunctionPair::sqrt_pair(),
                                 false, {});
  for (const auto& r : reps) EXPECT_NEAR(r.value, 1.0, 1e-6) << to_string(r.id);
}

TEST(Commands, ErrorExitCodes) {
  std::ostringstream out, err;
  BoundsOptions b;
  b.input = temp_path("j.json");
  write_tuple_file(b.input, OperatorTuple{J()});
  b.t = 1.5;
  EXPECT_EQ(cmd_bounds(b, out, err), 2);
  ComputeOptions c;
  c.input = temp_path("does_not_exist.json");
  EXPECT_EQ(cmd_compute(c, out, err), 2);
  VerifyOptions v;
  v.suite = "nosuch";
  EXPECT_EQ(cmd_verify(v, out, err), 2);
}

TEST(Commands, VerifyLemmas) {
  std::ostringstream out, err;
  VerifyOptions v;
  v.suite = "lemmas";
  v.trials = 1000;
  v.out = temp_path("lemmas.csv");
  EXPECT_EQ(cmd_verify(v, out, err), 0);
  EXPECT_NE(out.str().find("5000 records, 0 failures"), std::string::npos);
  const std::string csv = read_text(*v.out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5001);
}

}  // namespace
