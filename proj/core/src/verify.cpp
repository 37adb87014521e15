#include "eorad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <tuple>

#include "eorad/blockmat.hpp"
#include "eorad/bounds.hpp"
#include "eorad/errors.hpp"
#include "eorad/generators.hpp"

namespace eorad {

VerificationRecord make_record(std::string bound_id, std::uint64_t trial_seed,
                               std::uint64_t trial_index, double lhs, double rhs,
                               std::uint64_t digest) {
  VerificationRecord r;
  r.bound_id = std::move(bound_id);
  r.trial_seed = trial_seed;
  r.trial_index = trial_index;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.pass = std::isfinite(r.slack) && r.slack >= -kSlackTolerance * std::max(1.0, std::abs(rhs));
  r.instance_digest = digest;
  return r;
}

void Digest::bytes(const void* p, std::size_t n) {
  const auto* c = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= c[i];
    h_ *= 0x100000001b3ULL;
  }
}

Digest& Digest::add(std::string_view s) {
  add(static_cast<std::uint64_t>(s.size()));
  bytes(s.data(), s.size());
  return *this;
}

Digest& Digest::add(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 into +0
  bytes(&v, sizeof v);
  return *this;
}

Digest& Digest::add(std::uint64_t v) {
  bytes(&v, sizeof v);
  return *this;
}

Digest& Digest::add(const CMatrix& m) {
  add(static_cast<std::uint64_t>(m.rows()));
  add(static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      add(m(i, j).real());
      add(m(i, j).imag());
    }
  }
  return *this;
}

Digest& Digest::add(const OperatorTuple& a) {
  add(static_cast<std::uint64_t>(a.d()));
  for (const auto& m : a) add(m);
  return *this;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view family, std::uint64_t index) {
  Digest h;
  h.add(family);
  return detail::mix_seed(detail::mix_seed(master_seed, h.value()), index);
}

namespace {

// Function-local so they are usable during other translation units' static
// initialization.
const std::vector<std::string>& lemma_families() {
  static const std::vector<std::string> v = {
      "LEMMA_MCCARTHY", "LEMMA_BUZANO", "LEMMA_BOHR", "LEMMA_POSITIVE_BLOCK", "LEMMA_MIXED_SCHWARZ",
  };
  return v;
}
const std::vector<std::string>& bound_families() {
  static const std::vector<std::string> v = {"SANDWICH", "TH1", "PRODUCT", "POLAR", "TH9", "POWER"};
  return v;
}
const std::vector<std::string>& block_families() {
  static const std::vector<std::string> v = {"BLOCK", "COR6_7"};
  return v;
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double inner_re(const CVector& x, const CMatrix& a) { return x.dot(a * x).real(); }

// State shared by every family: seeded rng, instance shape, and the record sink.
class Trial {
 public:
  Trial(const std::string& family, std::uint64_t index, const SuiteConfig& cfg)
      : family_(family), index_(index), seed_(trial_seed(cfg.master_seed, family, index)), rng_(seed_) {
    dim = uniform_int(rng_, cfg.min_dim, cfg.max_dim);
    d = uniform_int(rng_, 1, cfg.max_d);
    stressed = cfg.stress_period > 0 && cfg.stress_scale > 0.0 &&
               index % static_cast<std::uint64_t>(cfg.stress_period) ==
                   static_cast<std::uint64_t>(cfg.stress_period - 1);
    scale = stressed ? cfg.stress_scale : 1.0;
    // Every fifth trial uses rank-deficient entries where the family allows it.
    rank = (index % 5 == 3 && dim > 1) ? uniform_int(rng_, 1, dim - 1) : 0;
    digest.add(family);
    digest.add(index);
  }

  Rng& rng() { return rng_; }

  OperatorTuple tuple(int dd, int m) {
    return random_tuple(dd, m, scale, rng_, rank < m ? rank : 0);
  }

  // t or alpha: grid points on every third trial, uniform otherwise.
  double parameter() {
    if (index_ % 3 == 0) {
      const auto grid = default_parameter_grid();
      return grid[std::uniform_int_distribution<std::size_t>(0, grid.size() - 1)(rng_)];
    }
    return uniform(rng_, 0.0, 1.0);
  }

  SpectralFunctionPair function_pair() {
    switch (index_ % 3) {
      case 0:
        return SpectralFunctionPair::sqrt_pair();
      case 1:
        return SpectralFunctionPair::mixed_pair();
      default:
        return SpectralFunctionPair::power_pair(uniform(rng_, 0.0, 1.0));
    }
  }

  void add(const std::string& id, double lhs, double rhs) {
    out.push_back(make_record(id, seed_, index_, lhs, rhs, digest.value()));
  }
  void add(const BoundReport& r, double lhs) { add(std::string(to_string(r.id)), lhs, r.value); }

  std::uint64_t index() const { return index_; }

  int dim = 2;
  int d = 1;
  int rank = 0;
  bool stressed = false;
  double scale = 1.0;
  Digest digest;
  std::vector<VerificationRecord> out;

 private:
  std::string family_;
  std::uint64_t index_;
  std::uint64_t seed_;
  Rng rng_;
};

// ---- lemma families -------------------------------------------------------

void lemma_mccarthy(Trial& t) {
  static constexpr double kPowers[] = {1.5, 2.0, 3.0};
  const double p = kPowers[t.index() % 3];
  const CMatrix a = random_psd(t.dim, t.scale, t.rng());
  const CVector x = random_unit_vector(t.dim, t.rng());
  t.digest.add(a).add(p);
  const double lhs = std::pow(std::max(inner_re(x, a), 0.0), p);
  const double rhs = inner_re(x, psd_apply(a, [p](double v) { return std::pow(v, p); }));
  t.add("LEMMA_MCCARTHY", lhs, rhs);
}

void lemma_buzano(Trial& t) {
  const CVector x = random_unit_vector(t.dim, t.rng()) * uniform(t.rng(), 0.0, t.scale);
  const CVector y = random_unit_vector(t.dim, t.rng()) * uniform(t.rng(), 0.0, t.scale);
  const CVector z = random_unit_vector(t.dim, t.rng());
  t.digest.add(CMatrix(x)).add(CMatrix(y)).add(CMatrix(z));
  const double lhs = std::abs(z.dot(x) * y.dot(z));
  const double rhs = 0.5 * (x.norm() * y.norm() + std::abs(y.dot(x)));
  t.add("LEMMA_BUZANO", lhs, rhs);
}

void lemma_bohr(Trial& t) {
  const int n = uniform_int(t.rng(), 1, 8);
  const double p = uniform(t.rng(), 1.0, 4.0);
  double s = 0.0;
  double sp = 0.0;
  t.digest.add(p);
  for (int k = 0; k < n; ++k) {
    const double a = uniform(t.rng(), 0.0, 1.0) * (t.stressed ? 10.0 : 1.0);
    t.digest.add(a);
    s += a;
    sp += std::pow(a, p);
  }
  t.add("LEMMA_BOHR", std::pow(s, p), std::pow(static_cast<double>(n), p - 1.0) * sp);
}

void lemma_positive_block(Trial& t) {
  const PositiveBlock pb = random_positive_block(t.d, t.dim, t.scale, t.rng());
  const CVector x = random_unit_vector(t.dim, t.rng());
  const CVector y = random_unit_vector(t.dim, t.rng());
  t.digest.add(pb.a).add(pb.b).add(pb.c).add(CMatrix(x)).add(CMatrix(y));
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t k = 0; k < pb.c.d(); ++k) {
    lhs += std::norm(y.dot(pb.c[k] * x));
    rhs += inner_re(x, pb.a[k]) * inner_re(y, pb.b[k]);
  }
  t.add("LEMMA_POSITIVE_BLOCK", lhs, rhs);
}

void lemma_mixed_schwarz(Trial& t) {
  const CommutingPair cp = random_commuting_pair(1, t.dim, t.scale, t.rng());
  const SpectralFunctionPair fg = t.function_pair();
  const CVector x = random_unit_vector(t.dim, t.rng());
  const CVector y = random_unit_vector(t.dim, t.rng());
  const CMatrix& a = cp.b[0];
  const CMatrix& b = cp.c[0];
  t.digest.add(a).add(b).add(fg.label()).add(CMatrix(x)).add(CMatrix(y));
  const double lhs = std::abs(y.dot(a * b * x));
  const CMatrix fa = psd_apply(abs_pow(a, 1.0), [&](double v) { return fg.f(v); });
  const CMatrix ga = psd_apply(abs_adjoint_pow(a, 1.0), [&](double v) { return fg.g(v); });
  const double rhs = spectral_radius_mat(b) * (fa * x).norm() * (ga * y).norm();
  t.add("LEMMA_MIXED_SCHWARZ", lhs, rhs);
}

// ---- bound families ------------------------------------------------------

struct Lhs {
  const SuiteConfig& cfg;
  double operator()(const OperatorTuple& a) const { return euclidean_radius(a, cfg.radius).certified_lower; }
};

void family_sandwich(Trial& t, const Lhs& lhs) {
  const OperatorTuple a = t.index() == 0 ? OperatorTuple::zeros(static_cast<std::size_t>(t.d), t.dim)
                                         : t.tuple(t.d, t.dim);
  t.digest.add(a);
  const double we = lhs(a);
  const auto reps = sandwich_reports(a);
  // reps[0] is the lower side: ||A|| / (2 sqrt d) <= w_e(A).
  t.add(std::string(to_string(reps[0].id)), reps[0].value, we);
  t.add(reps[1], we);
}

void family_th1(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const PositiveBlock pb = random_positive_block(t.d, t.dim, t.scale, t.rng());
  t.digest.add(pb.a).add(pb.b).add(pb.c);
  const double we = lhs(pb.c);
  for (const auto& r : block_dominance_bounds(pb.a, pb.b, pb.c, cfg.radius)) t.add(r, we);
}

void family_product(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const OperatorTuple b = t.tuple(t.d, t.dim);
  const OperatorTuple c = t.tuple(t.d, t.dim);
  t.digest.add(b).add(c);
  const double we = lhs(b * c);
  for (const auto& r : product_bounds(b, c, cfg.radius)) t.add(r, we);
  t.add(imaginary_combo_product_bound(b, c, cfg.radius), we);
  t.add(product_quarter_bound(b, c, cfg.radius), we);
}

void add_chain(Trial& t, const std::string& id, const BoundReport& tighter, const BoundReport& looser) {
  t.add(id, tighter.value, looser.value);
}

void family_polar(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const OperatorTuple a = t.tuple(t.d, t.dim);
  const double tp = t.parameter();
  const SpectralFunctionPair fg = t.function_pair();
  double alpha = 0.5;
  double rt = 0.5;
  switch (t.index() % 3) {
    case 0:
      alpha = t.parameter();
      rt = t.parameter();
      break;
    case 1:
      alpha = t.parameter();
      break;
    default:
      break;
  }
  t.digest.add(a).add(tp).add(fg.label()).add(alpha).add(rt);
  const double we = lhs(a);

  for (const auto& r : polar_power_bounds(a, tp, cfg.radius)) t.add(r, we);

  const auto th10 = fg_polar_bounds(a, tp, fg, cfg.radius);
  for (const auto& r : th10) t.add(r, we);
  add_chain(t, "TH10_CHAIN_1", th10[0], th10[1]);
  add_chain(t, "TH10_CHAIN_2", th10[1], th10[2]);

  const auto rem = remark_bound(a, alpha, rt, cfg.radius);
  for (const auto& r : rem) t.add(r, we);
  add_chain(t, "REMARK_CHAIN_1", rem[0], rem[1]);
  add_chain(t, "REMARK_CHAIN_2", rem[1], rem[2]);

  t.add(abstract_bound(a), we);

  const auto th8 = imaginary_combo_bound(a, tp, cfg.radius);
  for (const auto& r : th8) t.add(r, we);
  add_chain(t, "TH8_CHAIN", th8[0], th8[1]);

  t.add(quarter_polar_bound(a, tp, cfg.radius), we);
}

void family_th9(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const CommutingPair cp = random_commuting_pair(t.d, t.dim, t.scale, t.rng());
  const SpectralFunctionPair fg = t.function_pair();
  t.digest.add(cp.b).add(cp.c).add(fg.label());
  const double we = lhs(cp.b * cp.c);
  const auto reps = commuting_fg_bound(cp.b, cp.c, fg, cfg.radius);
  for (const auto& r : reps) t.add(r, we);
  add_chain(t, "TH9_CHAIN", reps[0], reps[1]);
}

void family_power(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const int n = 2 + static_cast<int>(t.index() % 2);
  const OperatorTuple a = t.tuple(t.d, t.dim);
  t.digest.add(a).add(static_cast<std::uint64_t>(n));
  t.add(power_bound(a, n, cfg.radius), lhs(power(a, n)));
}

BlockOperatorMatrix random_blocks(Trial& t, int n, int d, int m) {
  std::vector<OperatorTuple> blocks;
  blocks.reserve(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n * n; ++i) blocks.push_back(t.tuple(d, m));
  return BlockOperatorMatrix(static_cast<std::size_t>(n), std::move(blocks));
}

void family_block(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const int n = 2 + static_cast<int>(t.index() % 2);
  const int d = 1 + static_cast<int>((t.index() / 2) % 2);
  const BlockOperatorMatrix bm = random_blocks(t, n, d, 2);
  const SpectralFunctionPair fg = t.function_pair();
  const double alpha = t.parameter();
  for (std::size_t i = 0; i < bm.n(); ++i) {
    for (std::size_t j = 0; j < bm.n(); ++j) t.digest.add(bm(i, j));
  }
  t.digest.add(fg.label()).add(alpha);
  const double we = lhs(assemble(bm));

  Eigen::VectorXd diag(n);
  for (int i = 0; i < n; ++i) {
    diag(i) = euclidean_radius_boosted(bm(static_cast<std::size_t>(i), static_cast<std::size_t>(i)),
                                       cfg.radius, 4)
                  .value;
  }
  const ComparisonParams fgp{std::nullopt, fg};
  const ComparisonParams ap{alpha, std::nullopt};
  const auto them1 = comparison_report(comparison_matrix(bm, ComparisonMode::THEM1_FG, fgp, diag, cfg.radius), bm.d());
  const auto cor2 =
      comparison_report(comparison_matrix(bm, ComparisonMode::COR2_FG_NORM, fgp, diag, cfg.radius), bm.d());
  const ComparisonMatrix c1 = comparison_matrix(bm, ComparisonMode::COR1_ALPHA, ap, diag, cfg.radius);
  const ComparisonMatrix c3 = comparison_matrix(bm, ComparisonMode::COR3_ALPHA_NORM, ap, diag, cfg.radius);
  for (const auto& r : {them1, cor2, comparison_report(c1, bm.d()), comparison_report(c3, bm.d()),
                        comparison_report(symmetrized(c1), bm.d()), comparison_report(symmetrized(c3), bm.d())}) {
    t.add(r, we);
  }
  add_chain(t, "THEM1_LE_COR2", them1, cor2);
}

void family_cor6_7(Trial& t, const Lhs& lhs, const SuiteConfig& cfg) {
  const int m = uniform_int(t.rng(), 1, std::min(3, cfg.max_dim));
  const BlockOperatorMatrix bm = random_blocks(t, 2, t.d, m);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) t.digest.add(bm(i, j));
  }
  const double we = lhs(assemble(bm));
  for (const auto& r : two_by_two_bounds(bm(0, 0), bm(0, 1), bm(1, 0), bm(1, 1), cfg.radius)) t.add(r, we);
}

bool sort_key_less(const VerificationRecord& a, const VerificationRecord& b) {
  return std::tie(a.bound_id, a.trial_index) < std::tie(b.bound_id, b.trial_index);
}

}  // namespace

const std::vector<std::string>& all_families() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v = lemma_families();
    v.insert(v.end(), bound_families().begin(), bound_families().end());
    v.insert(v.end(), block_families().begin(), block_families().end());
    return v;
  }();
  return all;
}

std::vector<std::string> suite_families(std::string_view suite) {
  if (suite == "lemmas") return lemma_families();
  if (suite == "bounds") return bound_families();
  if (suite == "blockmat") return block_families();
  if (suite == "all") return all_families();
  throw ConfigError("unknown suite '" + std::string(suite) + "' (expected lemmas, bounds, blockmat or all)");
}

void validate(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw ConfigError("suite: trials must be >= 1");
  if (cfg.min_dim < 1 || cfg.max_dim < cfg.min_dim || cfg.max_dim > 8) {
    throw ConfigError("suite: need 1 <= min_dim <= max_dim <= 8");
  }
  if (cfg.max_d < 1 || cfg.max_d > 4) throw ConfigError("suite: need 1 <= max_d <= 4");
  if (cfg.stress_period < 0) throw ConfigError("suite: stress_period must be >= 0");
  if (!(cfg.stress_scale >= 0.0) || !std::isfinite(cfg.stress_scale)) {
    throw ConfigError("suite: stress_scale must be finite and >= 0");
  }
  if (cfg.radius.restarts < 0 || cfg.radius.max_iters < 1 || !(cfg.radius.tol > 0.0)) {
    throw ConfigError("suite: invalid radius configuration");
  }
  const auto& known = all_families();
  for (const auto& f : cfg.families) {
    if (std::find(known.begin(), known.end(), f) == known.end()) {
      throw ConfigError("suite: unknown family '" + f + "'");
    }
  }
}

std::vector<VerificationRecord> run_trial(const std::string& family, std::uint64_t index,
                                          const SuiteConfig& cfg) {
  Trial t(family, index, cfg);
  const Lhs lhs{cfg};
  if (family == "LEMMA_MCCARTHY") {
    lemma_mccarthy(t);
  } else if (family == "LEMMA_BUZANO") {
    lemma_buzano(t);
  } else if (family == "LEMMA_BOHR") {
    lemma_bohr(t);
  } else if (family == "LEMMA_POSITIVE_BLOCK") {
    lemma_positive_block(t);
  } else if (family == "LEMMA_MIXED_SCHWARZ") {
    lemma_mixed_schwarz(t);
  } else if (family == "SANDWICH") {
    family_sandwich(t, lhs);
  } else if (family == "TH1") {
    family_th1(t, lhs, cfg);
  } else if (family == "PRODUCT") {
    family_product(t, lhs, cfg);
  } else if (family == "POLAR") {
    family_polar(t, lhs, cfg);
  } else if (family == "TH9") {
    family_th9(t, lhs, cfg);
  } else if (family == "POWER") {
    family_power(t, lhs, cfg);
  } else if (family == "BLOCK") {
    family_block(t, lhs, cfg);
  } else if (family == "COR6_7") {
    family_cor6_7(t, lhs, cfg);
  } else {
    throw ConfigError("unknown family '" + family + "'");
  }
  return std::move(t.out);
}

std::vector<VerificationRecord> run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const std::vector<std::string>& families = cfg.families.empty() ? all_families() : cfg.families;
  std::vector<VerificationRecord> out;
  for (const auto& f : families) {
    for (int i = 0; i < cfg.trials; ++i) {
      auto recs = run_trial(f, static_cast<std::uint64_t>(i), cfg);
      out.insert(out.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
    }
  }
  std::stable_sort(out.begin(), out.end(), sort_key_less);
  return out;
}

std::vector<VerificationRecord> check_lemmas(int trials, std::uint64_t seed) {
  if (trials < 1) throw ConfigError("check_lemmas: trials must be >= 1");
  SuiteConfig cfg;
  cfg.families = lemma_families();
  cfg.trials = trials;
  cfg.master_seed = seed;
  return run_suite(cfg);
}

namespace {

double ratio(const VerificationRecord& r) {
  if (r.rhs == 0.0) return r.lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return r.lhs / r.rhs;
}

}  // namespace

TightnessReport tightness_report(const std::vector<VerificationRecord>& records) {
  if (records.empty()) throw ConfigError("tightness_report: no records");
  TightnessReport rep;

  std::map<std::string, std::vector<const VerificationRecord*>> by_id;
  for (const auto& r : records) by_id[r.bound_id].push_back(&r);
  for (const auto& [id, recs] : by_id) {
    std::vector<double> ratios;
    ratios.reserve(recs.size());
    BoundSummary s;
    for (const auto* r : recs) {
      ratios.push_back(ratio(*r));
      if (!r->pass) ++s.failures;
    }
    s.count = ratios.size();
    s.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(s.count);
    s.min_ratio = *std::min_element(ratios.begin(), ratios.end());
    s.equality_count = static_cast<std::size_t>(
        std::count_if(ratios.begin(), ratios.end(), [](double v) { return v > kEqualityThreshold; }));
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = s.count / 2;
    s.median_ratio = s.count % 2 == 1 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
    rep.per_bound[id] = s;
  }

  // Bounds are comparable when they bound the same quantity on the same
  // instance: same digest and same left-hand side.
  std::map<std::pair<std::uint64_t, double>, std::vector<const VerificationRecord*>> groups;
  for (const auto& r : records) groups[{r.instance_digest, r.lhs}].push_back(&r);
  std::map<std::pair<std::string, std::string>, std::pair<std::size_t, double>> tally;
  for (const auto& [key, recs] : groups) {
    for (std::size_t i = 0; i < recs.size(); ++i) {
      for (std::size_t j = 0; j < recs.size(); ++j) {
        const auto* a = recs[i];
        const auto* b = recs[j];
        if (!(a->bound_id < b->bound_id)) continue;
        auto& [shared, first] = tally[{a->bound_id, b->bound_id}];
        ++shared;
        const double tol = 1e-12 * std::max({1.0, std::abs(a->rhs), std::abs(b->rhs)});
        if (std::abs(a->rhs - b->rhs) <= tol) {
          first += 0.5;
        } else if (a->rhs < b->rhs) {
          first += 1.0;
        }
      }
    }
  }
  for (const auto& [pair, t] : tally) {
    WinRate w;
    w.shared = t.first;
    w.first_wins = t.second / static_cast<double>(t.first);
    w.second_wins = 1.0 - w.first_wins;
    rep.win_rates[pair] = w;
  }
  return rep;
}

}  // namespace eorad
