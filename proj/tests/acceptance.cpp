// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. `eorad_acceptance <name>` runs one criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "eorad/blockmat.hpp"
#include "eorad/bounds.hpp"
#include "eorad/generators.hpp"
#include "eorad/radii.hpp"
#include "eorad/verify.hpp"
#include "fixtures.hpp"
#include "io.hpp"

using namespace eorad;
using namespace eorad::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("%s %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  Rng rng(20240601);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const OperatorTuple a = random_tuple(1 + i % 3, 2, 1.0, rng);
    worst = std::max(worst, std::abs(euclidean_radius(a).value - euclidean_radius_oracle(a)));
  }
  const double s = seconds_since(t0);
  return {worst <= 5e-4 && s <= 60.0, fmt("max |w_e - oracle| = %.3g over 100 tuples (<= 5e-4), %.1f s (<= 60 s)", worst, s)};
}

Outcome analytic_fixtures() {
  const double e1 = std::abs(numerical_radius(J()).value - 0.5);
  const double e2 = std::abs(numerical_radius(jordan(3)).value - std::cos(std::numbers::pi / 4));
  const double e3 = std::abs(euclidean_radius({J(), J().adjoint()}).value - std::sqrt(0.5));
  const double e4 = std::abs(euclidean_radius(pauli()).value - 1.0);
  const double e5 = std::abs(tuple_op_norm(pauli()) - std::sqrt(3.0));
  const double worst = std::max({e1, e2, e3, e4, e5});
  return {worst <= 1e-6, fmt("w(J2), w(J3), w_e(J,J*), w_e(Pauli), ||Pauli||: max error %.3g (<= 1e-6)", worst)};
}

Outcome inequality_soundness() {
  SuiteConfig cfg;
  cfg.families = suite_families("bounds");
  for (const auto& f : suite_families("blockmat")) cfg.families.push_back(f);
  cfg.trials = 1000;
  const auto t0 = Clock::now();
  const auto recs = run_suite(cfg);
  const double s = seconds_since(t0);

  std::map<std::string, std::size_t> counts;
  std::size_t failed = 0;
  double worst = 0.0;
  for (const auto& r : recs) {
    ++counts[r.bound_id];
    if (!r.pass) {
      ++failed;
      std::printf("  failing record %s trial %llu seed %llu lhs %.17g rhs %.17g\n", r.bound_id.c_str(),
                  static_cast<unsigned long long>(r.trial_index), static_cast<unsigned long long>(r.trial_seed),
                  r.lhs, r.rhs);
    }
    worst = std::min(worst, r.slack / std::max(1.0, std::abs(r.rhs)));
  }
  const char* required[] = {"TH1_I",          "TH1_II",     "TH1_III",   "COR1_1_I",     "COR1_1_II",
                            "COR1_1_III",     "TH2",        "TH3",       "TH4",          "TH9",
                            "TH9_NORM",       "TH9_CHAIN",  "TH10",      "TH10_NORM",    "TH10_TUPLE_NORM",
                            "TH10_CHAIN_1",   "TH10_CHAIN_2", "REMARK_ALPHA_T", "REMARK_ALPHA_T_NORM",
                            "REMARK_ALPHA_T_TUPLE_NORM", "REMARK_CHAIN_1", "REMARK_CHAIN_2", "TH7", "TH8",
                            "TH8_NORM",       "TH8_CHAIN",  "TH15",      "THEO1",        "SANDWICH",
                            "SANDWICH_LOWER", "ABSTRACT",   "THEM1_FG",  "COR1_ALPHA",   "COR2_FG_NORM",
                            "COR3_ALPHA_NORM", "COR4_SYM",  "COR5_SYM_NORM", "THEM1_LE_COR2", "COR6", "COR7",
                            "POWER"};
  std::size_t fewest = SIZE_MAX;
  std::string thin;
  for (const char* id : required) {
    const std::size_t c = counts.count(id) ? counts.at(id) : 0;
    if (c < fewest) {
      fewest = c;
      thin = id;
    }
  }
  std::ostringstream ss;
  ss << recs.size() << " records over " << counts.size() << " bound ids, " << failed
     << " failures, worst relative slack " << worst << ", fewest trials " << fewest << " (" << thin << "), "
     << fmt("%.1f s (<= 120 s)", s);
  return {failed == 0 && fewest >= 1000 && s <= 120.0, ss.str()};
}

Outcome lemma_suite() {
  const auto recs = check_lemmas(10000, 42);
  std::map<std::string, std::size_t> pass;
  std::size_t failed = 0;
  for (const auto& r : recs) {
    if (r.pass) {
      ++pass[r.bound_id];
    } else {
      ++failed;
    }
  }
  std::size_t fewest = SIZE_MAX;
  for (const auto& [id, c] : pass) fewest = std::min(fewest, c);
  std::ostringstream ss;
  ss << pass.size() << " lemmas, " << recs.size() << " records, " << failed << " failures, each lemma passes "
     << fewest << " trials (>= 10000)";
  return {failed == 0 && pass.size() == 5 && fewest >= 10000, ss.str()};
}

Outcome equality_instances() {
  double worst = 0.0;
  auto ratio = [&](double lhs, double rhs) { worst = std::max(worst, std::abs(lhs / rhs - 1.0)); };
  for (int dim : {1, 2, 3, 4}) {
    const OperatorTuple i = OperatorTuple::identities(1, dim);
    const double we = euclidean_radius(i).value;
    ratio(we, imaginary_combo_product_bound(i, i).value);
    ratio(we, product_quarter_bound(i, i).value);
    ratio(we, quarter_polar_bound(i, 0.5).value);
    for (const auto& r : block_dominance_bounds(i, i, i)) ratio(we, r.value);
  }
  const OperatorTuple z = OperatorTuple::zeros(1, 2);
  const BlockOperatorMatrix bm(2, {z, OperatorTuple{J()}, OperatorTuple{J()}, z});
  const double bound =
      block_radius_bound(bm, ComparisonMode::THEM1_FG, {std::nullopt, SpectralFunctionPair::sqrt_pair()}).value;
  const double truth = euclidean_radius(assemble(bm)).value;
  ratio(truth, bound);
  const bool ok = worst <= 1e-6 && std::abs(bound - 0.5) <= 1e-6;
  return {ok, fmt("TH7, TH15, THEO1, TH1 on identity tuples and THEM1 on the (J, J) block (bound %.9f, w_e %.9f): "
                  "max |ratio - 1| = %.3g (<= 1e-6)",
                  bound, truth, worst)};
}

Outcome matfun_identities() {
  Rng rng(6);
  double worst = 0.0;
  int rank_deficient = 0;
  for (int i = 0; i < 1000; ++i) {
    const int dim = 1 + i % 6;
    const int rank = (i % 4 == 0 && dim > 1) ? 1 + i % (dim - 1) : 0;
    if (rank > 0) ++rank_deficient;
    const CMatrix m = rank > 0 ? low_rank_ginibre(dim, rank, 1.0, rng) : ginibre(dim, 1.0, rng);
    const CMatrix u = polar_unitary(m);
    worst = std::max(worst, max_abs_diff(u * abs_pow(m, 1.0), m));
    for (double s : {0.5, 1.0, 1.5, 2.0}) {
      worst = std::max(worst, max_abs_diff(u * abs_pow(m, s) * u.adjoint(), abs_adjoint_pow(m, s)));
    }
  }

  const double h = 1e-5;
  double grad_worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int dim = 2 + i % 4;
    const OperatorTuple a = random_tuple(1 + i % 3, dim, 1.0, rng);
    const CVector x = random_unit_vector(dim, rng);
    const CVector g = detail::euclidean_objective_gradient(a, x);
    double gnorm = 0.0, err = 0.0;
    for (int j = 0; j < dim; ++j) {
      for (int part = 0; part < 2; ++part) {
        const cdouble dir = part == 0 ? cdouble(1, 0) : cdouble(0, 1);
        CVector xp = x, xm = x;
        xp(j) += h * dir;
        xm(j) -= h * dir;
        const double fd = (detail::euclidean_objective(a, xp) - detail::euclidean_objective(a, xm)) / (2 * h);
        const double an = part == 0 ? g(j).real() : g(j).imag();
        err = std::max(err, std::abs(an - fd));
        gnorm = std::max(gnorm, std::abs(an));
      }
    }
    grad_worst = std::max(grad_worst, err / std::max(1.0, gnorm));
  }
  std::ostringstream ss;
  ss << "polar identities max error " << worst << " over 1000 matrices (" << rank_deficient
     << " rank deficient, <= 1e-9); gradient vs central differences max relative error " << grad_worst
     << " on 100 points (<= 1e-5)";
  return {worst <= 1e-9 && grad_worst <= 1e-5, ss.str()};
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  std::string texts[2];
  int codes[2];
  for (int run = 0; run < 2; ++run) {
    cli::VerifyOptions opt;
    opt.suite = "all";
    opt.seed = 42;
    opt.out = dir / ("eorad_acceptance_report_" + std::to_string(run) + ".json");
    std::ostringstream out, err;
    codes[run] = cli::cmd_verify(opt, out, err);
    texts[run] = cli::read_text(*opt.out);
  }
  const bool same = texts[0] == texts[1] && !texts[0].empty();
  char buf[160];
  std::snprintf(buf, sizeof buf, "verify --suite all --seed 42 twice: %zu-byte reports %s, digest %016llx, exit %d/%d",
                texts[0].size(), same ? "identical" : "DIFFER",
                static_cast<unsigned long long>(cli::text_digest(texts[0])), codes[0], codes[1]);
  return {same && codes[0] == 0 && codes[1] == 0, buf};
}

}  // namespace

int main(int argc, char** argv) {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"oracle_agreement", oracle_agreement},         {"analytic_fixtures", analytic_fixtures},
      {"inequality_soundness", inequality_soundness}, {"lemma_suite", lemma_suite},
      {"equality_instances", equality_instances},     {"matfun_identities", matfun_identities},
      {"determinism", determinism},
  };
  // With an argument, run only the named criterion.
  const std::string only = argc > 1 ? argv[1] : "";
  int ran = 0;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && only != name) continue;
    report(name, check);
    ++ran;
  }
  if (ran == 0) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  std::printf("%d of %d criteria failed\n", failures, ran);
  return failures == 0 ? 0 : 1;
}
