#include "eorad/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eorad/errors.hpp"

namespace eorad {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr int kRhsRestartFactor = 4;
constexpr double kPositivityTol = 1e-10;
constexpr double kCommutingTol = 1e-8;

struct IdName {
  BoundId id;
  std::string_view name;
};

constexpr IdName kNames[] = {
    {BoundId::SANDWICH, "SANDWICH"},
    {BoundId::SANDWICH_LOWER, "SANDWICH_LOWER"},
    {BoundId::TH1_I, "TH1_I"},
    {BoundId::TH1_II, "TH1_II"},
    {BoundId::TH1_III, "TH1_III"},
    {BoundId::COR1_1_I, "COR1_1_I"},
    {BoundId::COR1_1_II, "COR1_1_II"},
    {BoundId::COR1_1_III, "COR1_1_III"},
    {BoundId::TH2, "TH2"},
    {BoundId::TH3, "TH3"},
    {BoundId::TH4, "TH4"},
    {BoundId::TH9, "TH9"},
    {BoundId::TH9_NORM, "TH9_NORM"},
    {BoundId::TH10, "TH10"},
    {BoundId::TH10_NORM, "TH10_NORM"},
    {BoundId::TH10_TUPLE_NORM, "TH10_TUPLE_NORM"},
    {BoundId::REMARK_ALPHA_T, "REMARK_ALPHA_T"},
    {BoundId::REMARK_ALPHA_T_NORM, "REMARK_ALPHA_T_NORM"},
    {BoundId::REMARK_ALPHA_T_TUPLE_NORM, "REMARK_ALPHA_T_TUPLE_NORM"},
    {BoundId::ABSTRACT, "ABSTRACT"},
    {BoundId::TH7, "TH7"},
    {BoundId::TH8, "TH8"},
    {BoundId::TH8_NORM, "TH8_NORM"},
    {BoundId::TH15, "TH15"},
    {BoundId::THEO1, "THEO1"},
    {BoundId::POWER, "POWER"},
    {BoundId::THEM1_FG, "THEM1_FG"},
    {BoundId::COR1_ALPHA, "COR1_ALPHA"},
    {BoundId::COR2_FG_NORM, "COR2_FG_NORM"},
    {BoundId::COR3_ALPHA_NORM, "COR3_ALPHA_NORM"},
    {BoundId::COR4_SYM, "COR4_SYM"},
    {BoundId::COR5_SYM_NORM, "COR5_SYM_NORM"},
    {BoundId::COR6, "COR6"},
    {BoundId::COR7, "COR7"},
};

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " must lie in [0, 1], got " << v;
    throw DomainError(os.str());
  }
}

double rhs_radius(const OperatorTuple& a, const EuclideanRadiusConfig& cfg) {
  return euclidean_radius_boosted(a, cfg, kRhsRestartFactor).value;
}

// ||sum_k X_k|| for Hermitian X_k.
double norm_of_sum(const OperatorTuple& x) { return op_norm(hermitian_part(sum(x))); }

template <typename Fn>
OperatorTuple build(std::size_t d, Fn&& fn) {
  std::vector<CMatrix> out;
  out.reserve(d);
  for (std::size_t k = 0; k < d; ++k) out.push_back(fn(k));
  return OperatorTuple(std::move(out));
}

double comp(const BoundReport& r, const char* key) {
  auto it = r.components.find(key);
  if (it == r.components.end()) {
    throw ConfigError(std::string("bound report is missing component '") + key + "'");
  }
  return it->second;
}

double param(const BoundReport& r, const char* key) {
  auto it = r.params.find(key);
  if (it == r.params.end()) {
    throw ConfigError(std::string("bound report is missing parameter '") + key + "'");
  }
  return it->second;
}

BoundReport make(BoundId id, std::string formula, const OperatorTuple& shape) {
  BoundReport r;
  r.id = id;
  r.formula = std::move(formula);
  r.params["d"] = static_cast<double>(shape.d());
  return r;
}

double we_term(double d, double we) { return std::sqrt(d) / 2.0 * we; }

}  // namespace

std::string_view to_string(BoundId id) {
  for (const auto& e : kNames) {
    if (e.id == id) return e.name;
  }
  return "UNKNOWN";
}

std::optional<BoundId> bound_id_from_string(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

const std::vector<BoundId>& all_bound_ids() {
  static const std::vector<BoundId> ids = [] {
    std::vector<BoundId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

double recompute_value(const BoundReport& r) {
  switch (r.id) {
    case BoundId::SANDWICH:
      return comp(r, "tuple_norm");
    case BoundId::SANDWICH_LOWER:
      return comp(r, "tuple_norm") / (2.0 * std::sqrt(param(r, "d")));
    case BoundId::TH1_I:
      return std::sqrt(0.5 * comp(r, "norm_sum_A2_B2"));
    case BoundId::TH1_II:
      return std::sqrt(0.5 * comp(r, "norm_A") * comp(r, "norm_B") +
                       we_term(param(r, "d"), comp(r, "we_AB")));
    case BoundId::TH1_III:
      return std::sqrt(0.25 * comp(r, "norm_sum_A2_B2") + we_term(param(r, "d"), comp(r, "we_AB")));
    case BoundId::COR1_1_I:
      return std::sqrt(0.5 * comp(r, "norm_sum_Bstar4_C4"));
    case BoundId::COR1_1_II:
      return std::sqrt(0.5 * comp(r, "norm_BBstar") * comp(r, "norm_CstarC") +
                       we_term(param(r, "d"), comp(r, "we_B_CBstar_C")));
    case BoundId::COR1_1_III:
      return std::sqrt(0.25 * comp(r, "norm_sum_Bstar4_C4") +
                       we_term(param(r, "d"), comp(r, "we_B_CBstar_C")));
    case BoundId::TH2:
      return std::sqrt(0.5 * comp(r, "norm_sum_polar"));
    case BoundId::TH3:
      return std::sqrt(0.5 * comp(r, "norm_adj_pow") * comp(r, "norm_abs_pow") +
                       we_term(param(r, "d"), comp(r, "we_abs_adj_product")));
    case BoundId::TH4:
      return std::sqrt(0.25 * comp(r, "norm_sum_polar") +
                       we_term(param(r, "d"), comp(r, "we_abs_adj_product")));
    case BoundId::TH9:
      return kInvSqrt2 * comp(r, "max_spectral_radius_C") * comp(r, "we_combo");
    case BoundId::TH9_NORM:
      return kInvSqrt2 * comp(r, "max_spectral_radius_C") * std::sqrt(comp(r, "norm_sum_f4_g4"));
    case BoundId::TH10:
    case BoundId::REMARK_ALPHA_T:
      return kInvSqrt2 * comp(r, "max_entry_norm_pow_t") * comp(r, "we_combo");
    case BoundId::TH10_NORM:
    case BoundId::REMARK_ALPHA_T_NORM:
      return kInvSqrt2 * comp(r, "max_entry_norm_pow_t") * std::sqrt(comp(r, "norm_sum_f4_g4"));
    case BoundId::TH10_TUPLE_NORM:
    case BoundId::REMARK_ALPHA_T_TUPLE_NORM:
      return kInvSqrt2 * comp(r, "tuple_norm_pow_t") * std::sqrt(comp(r, "norm_sum_f4_g4"));
    case BoundId::ABSTRACT:
      return kInvSqrt2 * std::sqrt(comp(r, "tuple_norm")) * std::sqrt(comp(r, "norm_sum_abs_abs_adj"));
    case BoundId::TH7:
    case BoundId::TH8:
      return kInvSqrt2 * comp(r, "we_combo");
    case BoundId::TH8_NORM:
      return kInvSqrt2 * std::sqrt(comp(r, "norm_sum_polar"));
    case BoundId::TH15:
    case BoundId::THEO1:
      return std::sqrt(param(r, "d")) / 4.0 * comp(r, "we_first") * comp(r, "we_second");
    case BoundId::POWER:
      return std::sqrt(param(r, "d")) * std::pow(comp(r, "we_A"), param(r, "n"));
    case BoundId::THEM1_FG:
    case BoundId::COR1_ALPHA:
    case BoundId::COR2_FG_NORM:
    case BoundId::COR3_ALPHA_NORM:
    case BoundId::COR4_SYM:
    case BoundId::COR5_SYM_NORM: {
      const auto n = static_cast<Eigen::Index>(param(r, "n"));
      Eigen::MatrixXd m(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          const std::string key = "a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
          m(i, j) = comp(r, key.c_str());
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((m + m.transpose()) * 0.5,
                                                       Eigen::EigenvaluesOnly);
      return es.eigenvalues()(n - 1);
    }
    case BoundId::COR6:
    case BoundId::COR7: {
      const double a = comp(r, "we_A");
      const double d = comp(r, "we_D");
      const double off = r.id == BoundId::COR6 ? comp(r, "beta") : comp(r, "gamma");
      return 0.5 * (a + d + std::sqrt((a - d) * (a - d) + off * off));
    }
  }
  throw ConfigError("unknown bound id");
}

bool is_self_consistent(const BoundReport& r) {
  if (!std::isfinite(r.value) || r.value < 0.0) return false;
  for (const auto& [k, v] : r.components) {
    if (!std::isfinite(v)) return false;
  }
  const double again = recompute_value(r);
  return std::abs(again - r.value) <= 1e-12 * std::max(1.0, std::abs(r.value));
}

SandwichBounds sandwich(const OperatorTuple& a) {
  const double n = tuple_op_norm(a);
  return {n / (2.0 * std::sqrt(static_cast<double>(a.d()))), n};
}

std::array<BoundReport, 2> sandwich_reports(const OperatorTuple& a) {
  const SandwichBounds s = sandwich(a);
  const double n = tuple_op_norm(a);
  BoundReport lower = make(BoundId::SANDWICH_LOWER, "||A|| / (2 sqrt d) <= w_e(A)", a);
  lower.components["tuple_norm"] = n;
  lower.value = s.lower;
  BoundReport upper = make(BoundId::SANDWICH, "w_e(A) <= ||A||", a);
  upper.components["tuple_norm"] = n;
  upper.value = s.upper;
  return {lower, upper};
}

void check_positive_block(const OperatorTuple& a, const OperatorTuple& b, const OperatorTuple& c) {
  require_same_shape(a, b, "block_dominance_bounds");
  require_same_shape(a, c, "block_dominance_bounds");
  const Eigen::Index m = a.dim();
  for (std::size_t k = 0; k < a.d(); ++k) {
    CMatrix block(2 * m, 2 * m);
    block << a[k], c[k].adjoint(), c[k], b[k];
    const double scale = std::max(op_norm(block), 1e-300);
    auto check = [&](const CMatrix& x, const char* what) {
      if (!is_hermitian(x)) {
        std::ostringstream os;
        os << what << " at k=" << k << " is not Hermitian";
        throw PreconditionError(os.str());
      }
      const double lo = min_eigenvalue(x);
      if (lo < -kPositivityTol * scale) {
        std::ostringstream os;
        os << what << " at k=" << k << " is not positive: min eigenvalue " << lo;
        throw PreconditionError(os.str());
      }
    };
    check(a[k], "A");
    check(b[k], "B");
    check(block, "block [[A, C*], [C, B]]");
  }
}

std::array<BoundReport, 3> block_dominance_bounds(const OperatorTuple& a_in, const OperatorTuple& b_in,
                                                  const OperatorTuple& c,
                                                  const EuclideanRadiusConfig& cfg) {
  check_positive_block(a_in, b_in, c);
  const OperatorTuple a = build(a_in.d(), [&](std::size_t k) { return project_psd(a_in[k]); });
  const OperatorTuple b = build(b_in.d(), [&](std::size_t k) { return project_psd(b_in[k]); });
  const double d = static_cast<double>(a.d());

  const double n_sum = norm_of_sum(a * a + b * b);
  const double n_a = tuple_op_norm(a);
  const double n_b = tuple_op_norm(b);
  const double we_ab = rhs_radius(a * b, cfg);

  BoundReport r1 = make(BoundId::TH1_I, "w_e(C) <= sqrt(1/2 ||sum_k (A_k^2 + B_k^2)||)", a);
  r1.components["norm_sum_A2_B2"] = n_sum;
  r1.value = std::sqrt(0.5 * n_sum);

  BoundReport r2 =
      make(BoundId::TH1_II, "w_e(C) <= sqrt(1/2 ||A|| ||B|| + sqrt(d)/2 w_e(AB))", a);
  r2.components["norm_A"] = n_a;
  r2.components["norm_B"] = n_b;
  r2.components["we_AB"] = we_ab;
  r2.value = std::sqrt(0.5 * n_a * n_b + std::sqrt(d) / 2.0 * we_ab);

  BoundReport r3 = make(BoundId::TH1_III,
                        "w_e(C) <= sqrt(1/4 ||sum_k (A_k^2 + B_k^2)|| + sqrt(d)/2 w_e(AB))", a);
  r3.components["norm_sum_A2_B2"] = n_sum;
  r3.components["we_AB"] = we_ab;
  r3.value = std::sqrt(0.25 * n_sum + std::sqrt(d) / 2.0 * we_ab);
  return {r1, r2, r3};
}

std::array<BoundReport, 3> product_bounds(const OperatorTuple& b, const OperatorTuple& c,
                                          const EuclideanRadiusConfig& cfg) {
  require_same_shape(b, c, "product_bounds");
  const double d = static_cast<double>(b.d());
  const OperatorTuple bbs = b * adjoint(b);
  const OperatorTuple csc = adjoint(c) * c;
  const double n_sum = norm_of_sum(abs_adjoint_pow(b, 4.0) + abs_pow(c, 4.0));
  const double n_bbs = tuple_op_norm(bbs);
  const double n_csc = tuple_op_norm(csc);
  const OperatorTuple middle = b * adjoint(c * b) * c;
  const double we_mid = rhs_radius(middle, cfg);

  BoundReport r1 = make(BoundId::COR1_1_I, "w_e(BC) <= sqrt(1/2 ||sum_k (|B_k*|^4 + |C_k|^4)||)", b);
  r1.components["norm_sum_Bstar4_C4"] = n_sum;
  r1.value = std::sqrt(0.5 * n_sum);

  BoundReport r2 = make(BoundId::COR1_1_II,
                        "w_e(BC) <= sqrt(1/2 ||BB*|| ||C*C|| + sqrt(d)/2 w_e(B(CB)*C))", b);
  r2.components["norm_BBstar"] = n_bbs;
  r2.components["norm_CstarC"] = n_csc;
  r2.components["we_B_CBstar_C"] = we_mid;
  r2.value = std::sqrt(0.5 * n_bbs * n_csc + std::sqrt(d) / 2.0 * we_mid);

  BoundReport r3 = make(
      BoundId::COR1_1_III,
      "w_e(BC) <= sqrt(1/4 ||sum_k (|B_k*|^4 + |C_k|^4)|| + sqrt(d)/2 w_e(B(CB)*C))", b);
  r3.components["norm_sum_Bstar4_C4"] = n_sum;
  r3.components["we_B_CBstar_C"] = we_mid;
  r3.value = std::sqrt(0.25 * n_sum + std::sqrt(d) / 2.0 * we_mid);
  return {r1, r2, r3};
}

std::array<BoundReport, 3> polar_power_bounds(const OperatorTuple& a, double t,
                                              const EuclideanRadiusConfig& cfg) {
  require_unit_interval(t, "t");
  const double d = static_cast<double>(a.d());
  const OperatorTuple adj4 = abs_adjoint_pow(a, 4.0 * (1.0 - t));
  const OperatorTuple abs4 = abs_pow(a, 4.0 * t);
  const double n_sum = norm_of_sum(adj4 + abs4);
  const double n_adj = std::sqrt(norm_of_sum(adj4));  // = || |A*|^{2(1-t)} ||
  const double n_abs = std::sqrt(norm_of_sum(abs4));  // = || |A|^{2t} ||
  const double we_prod = rhs_radius(abs_pow(a, 2.0 * t) * abs_adjoint_pow(a, 2.0 * (1.0 - t)), cfg);

  BoundReport r2 =
      make(BoundId::TH2, "w_e(A) <= sqrt(1/2 ||sum_k (|A_k*|^{4(1-t)} + |A_k|^{4t})||)", a);
  r2.params["t"] = t;
  r2.components["norm_sum_polar"] = n_sum;
  r2.value = std::sqrt(0.5 * n_sum);

  BoundReport r3 = make(BoundId::TH3,
                        "w_e(A) <= sqrt(1/2 || |A*|^{2(1-t)} || || |A|^{2t} || + sqrt(d)/2 "
                        "w_e(|A|^{2t} |A*|^{2(1-t)}))",
                        a);
  r3.params["t"] = t;
  r3.components["norm_adj_pow"] = n_adj;
  r3.components["norm_abs_pow"] = n_abs;
  r3.components["we_abs_adj_product"] = we_prod;
  r3.value = std::sqrt(0.5 * n_adj * n_abs + std::sqrt(d) / 2.0 * we_prod);

  BoundReport r4 = make(BoundId::TH4,
                        "w_e(A) <= sqrt(1/4 ||sum_k (|A_k*|^{4(1-t)} + |A_k|^{4t})|| + sqrt(d)/2 "
                        "w_e(|A|^{2t} |A*|^{2(1-t)}))",
                        a);
  r4.params["t"] = t;
  r4.components["norm_sum_polar"] = n_sum;
  r4.components["we_abs_adj_product"] = we_prod;
  r4.value = std::sqrt(0.25 * n_sum + std::sqrt(d) / 2.0 * we_prod);
  return {r2, r3, r4};
}

void check_commuting(const OperatorTuple& b, const OperatorTuple& c) {
  require_same_shape(b, c, "commuting_fg_bound");
  for (std::size_t k = 0; k < b.d(); ++k) {
    const CMatrix abs_b = abs_pow(b[k], 1.0);
    const double residual = op_norm(abs_b * c[k] - c[k].adjoint() * abs_b);
    const double scale = std::max(1.0, op_norm(abs_b) * op_norm(c[k]));
    if (residual > kCommutingTol * scale) {
      std::ostringstream os;
      os << "|B_k| C_k != C_k* |B_k| at k=" << k << " (residual " << residual << ")";
      throw PreconditionError(os.str());
    }
  }
}

namespace {

// Shared tail of the chained (f, g) bounds: the combination tuple P + iQ is
// evaluated by w_e and its Hermitian relaxation by the norm of sum(P^2 + Q^2).
struct ChainInputs {
  OperatorTuple f2;  // f^2 applied to the |.| side
  OperatorTuple g2;  // g^2 applied to the |.*| side
};

std::pair<double, double> chain_terms(const ChainInputs& in, const EuclideanRadiusConfig& cfg) {
  const OperatorTuple combo = in.f2 + cdouble(0.0, 1.0) * in.g2;
  const double we = rhs_radius(combo, cfg);
  const double n = norm_of_sum(in.f2 * in.f2 + in.g2 * in.g2);
  return {we, n};
}

std::array<BoundReport, 3> polar_chain(std::array<BoundId, 3> ids, const OperatorTuple& a, double t,
                                       const ChainInputs& in, const std::string& pair_label,
                                       const EuclideanRadiusConfig& cfg) {
  const auto [we, n] = chain_terms(in, cfg);
  const double m_t = std::pow(max_entry_norm(a), t);
  const double tn_t = std::pow(tuple_op_norm(a), t);

  std::array<BoundReport, 3> out;
  const char* formulas[3] = {
      "w_e(A) <= (1/sqrt2) max_k ||A_k||^t w_e(f^2(|A|^{1-t}) + i g^2(|A*|^{1-t}))",
      "w_e(A) <= (1/sqrt2) max_k ||A_k||^t ||sum_k f^4(|A_k|^{1-t}) + g^4(|A_k*|^{1-t})||^{1/2}",
      "w_e(A) <= (1/sqrt2) ||A||^t ||sum_k f^4(|A_k|^{1-t}) + g^4(|A_k*|^{1-t})||^{1/2}"};
  for (int i = 0; i < 3; ++i) {
    out[i] = make(ids[i], formulas[i], a);
    out[i].params["t"] = t;
    out[i].function_pair = pair_label;
  }
  out[0].components["max_entry_norm_pow_t"] = m_t;
  out[0].components["we_combo"] = we;
  out[0].value = kInvSqrt2 * m_t * we;
  out[1].components["max_entry_norm_pow_t"] = m_t;
  out[1].components["norm_sum_f4_g4"] = n;
  out[1].value = kInvSqrt2 * m_t * std::sqrt(n);
  out[2].components["tuple_norm_pow_t"] = tn_t;
  out[2].components["norm_sum_f4_g4"] = n;
  out[2].value = kInvSqrt2 * tn_t * std::sqrt(n);
  return out;
}

}  // namespace

std::array<BoundReport, 2> commuting_fg_bound(const OperatorTuple& b, const OperatorTuple& c,
                                              const SpectralFunctionPair& fg,
                                              const EuclideanRadiusConfig& cfg) {
  check_commuting(b, c);
  auto f2 = [&](double x) { return fg.f(x) * fg.f(x); };
  auto g2 = [&](double x) { return fg.g(x) * fg.g(x); };
  ChainInputs in{build(b.d(), [&](std::size_t k) { return psd_apply(abs_pow(b[k], 1.0), f2); }),
                 build(b.d(), [&](std::size_t k) { return psd_apply(abs_adjoint_pow(b[k], 1.0), g2); })};
  const auto [we, n] = chain_terms(in, cfg);
  double max_r = 0.0;
  for (const auto& m : c) max_r = std::max(max_r, spectral_radius_mat(m));

  BoundReport r1 = make(BoundId::TH9,
                        "w_e(BC) <= (1/sqrt2) max_k r(C_k) w_e(f^2(|B|) + i g^2(|B*|))", b);
  r1.function_pair = fg.label();
  r1.components["max_spectral_radius_C"] = max_r;
  r1.components["we_combo"] = we;
  r1.value = kInvSqrt2 * max_r * we;

  BoundReport r2 = make(BoundId::TH9_NORM,
                        "w_e(BC) <= (1/sqrt2) max_k r(C_k) ||sum_k f^4(|B_k|) + g^4(|B_k*|)||^{1/2}",
                        b);
  r2.function_pair = fg.label();
  r2.components["max_spectral_radius_C"] = max_r;
  r2.components["norm_sum_f4_g4"] = n;
  r2.value = kInvSqrt2 * max_r * std::sqrt(n);
  return {r1, r2};
}

std::array<BoundReport, 3> fg_polar_bounds(const OperatorTuple& a, double t,
                                           const SpectralFunctionPair& fg,
                                           const EuclideanRadiusConfig& cfg) {
  require_unit_interval(t, "t");
  auto f2 = [&](double x) { return fg.f(x) * fg.f(x); };
  auto g2 = [&](double x) { return fg.g(x) * fg.g(x); };
  ChainInputs in{
      build(a.d(), [&](std::size_t k) { return psd_apply(abs_pow(a[k], 1.0 - t), f2); }),
      build(a.d(), [&](std::size_t k) { return psd_apply(abs_adjoint_pow(a[k], 1.0 - t), g2); })};
  return polar_chain({BoundId::TH10, BoundId::TH10_NORM, BoundId::TH10_TUPLE_NORM}, a, t, in,
                     fg.label(), cfg);
}

std::array<BoundReport, 3> remark_bound(const OperatorTuple& a, double alpha, double t,
                                        const EuclideanRadiusConfig& cfg) {
  require_unit_interval(alpha, "alpha");
  require_unit_interval(t, "t");
  ChainInputs in{abs_pow(a, 2.0 * alpha * (1.0 - t)),
                 abs_adjoint_pow(a, 2.0 * (1.0 - alpha) * (1.0 - t))};
  auto out = polar_chain(
      {BoundId::REMARK_ALPHA_T, BoundId::REMARK_ALPHA_T_NORM, BoundId::REMARK_ALPHA_T_TUPLE_NORM}, a,
      t, in, SpectralFunctionPair::power_pair(alpha).label(), cfg);
  for (auto& r : out) r.params["alpha"] = alpha;
  return out;
}

BoundReport abstract_bound(const OperatorTuple& a) {
  const double n = tuple_op_norm(a);
  const double s = norm_of_sum(abs_pow(a, 1.0) + abs_adjoint_pow(a, 1.0));
  BoundReport r = make(BoundId::ABSTRACT,
                       "w_e(A) <= (1/sqrt2) ||A||^{1/2} ||sum_k (|A_k| + |A_k*|)||^{1/2}", a);
  r.components["tuple_norm"] = n;
  r.components["norm_sum_abs_abs_adj"] = s;
  r.value = kInvSqrt2 * std::sqrt(n) * std::sqrt(s);
  return r;
}

BoundReport imaginary_combo_product_bound(const OperatorTuple& b, const OperatorTuple& c,
                                          const EuclideanRadiusConfig& cfg) {
  require_same_shape(b, c, "imaginary_combo_product_bound");
  const OperatorTuple combo = adjoint(c) * c + cdouble(0.0, 1.0) * (b * adjoint(b));
  BoundReport r = make(BoundId::TH7, "w_e(BC) <= (1/sqrt2) w_e(|C|^2 + i |B*|^2)", b);
  r.components["we_combo"] = rhs_radius(combo, cfg);
  r.value = kInvSqrt2 * r.components["we_combo"];
  return r;
}

std::array<BoundReport, 2> imaginary_combo_bound(const OperatorTuple& a, double t,
                                                 const EuclideanRadiusConfig& cfg) {
  require_unit_interval(t, "t");
  const OperatorTuple combo =
      abs_pow(a, 2.0 * t) + cdouble(0.0, 1.0) * abs_adjoint_pow(a, 2.0 * (1.0 - t));
  const double we = rhs_radius(combo, cfg);
  const double n = norm_of_sum(abs_adjoint_pow(a, 4.0 * (1.0 - t)) + abs_pow(a, 4.0 * t));

  BoundReport r1 = make(BoundId::TH8, "w_e(A) <= (1/sqrt2) w_e(|A|^{2t} + i |A*|^{2(1-t)})", a);
  r1.params["t"] = t;
  r1.components["we_combo"] = we;
  r1.value = kInvSqrt2 * we;

  BoundReport r2 = make(BoundId::TH8_NORM,
                        "w_e(A) <= (1/sqrt2) ||sum_k (|A_k*|^{4(1-t)} + |A_k|^{4t})||^{1/2}", a);
  r2.params["t"] = t;
  r2.components["norm_sum_polar"] = n;
  r2.value = kInvSqrt2 * std::sqrt(n);
  return {r1, r2};
}

BoundReport product_quarter_bound(const OperatorTuple& b, const OperatorTuple& c,
                                  const EuclideanRadiusConfig& cfg) {
  require_same_shape(b, c, "product_quarter_bound");
  const double d = static_cast<double>(b.d());
  const double we1 = rhs_radius(abs_pow(b, 1.0) + abs_adjoint_pow(c, 1.0), cfg);
  const double we2 = rhs_radius(abs_pow(c, 1.0) + abs_adjoint_pow(b, 1.0), cfg);
  BoundReport r = make(BoundId::TH15, "w_e(BC) <= (sqrt d / 4) w_e(|B| + |C*|) w_e(|C| + |B*|)", b);
  r.components["we_first"] = we1;
  r.components["we_second"] = we2;
  r.value = std::sqrt(d) / 4.0 * we1 * we2;
  return r;
}

BoundReport quarter_polar_bound(const OperatorTuple& a, double t, const EuclideanRadiusConfig& cfg) {
  require_unit_interval(t, "t");
  const double d = static_cast<double>(a.d());
  const OperatorTuple abs_t = abs_pow(a, t);
  const double we1 = rhs_radius(abs_pow(a, 1.0 - t) + abs_t, cfg);
  const double we2 = rhs_radius(abs_t + abs_adjoint_pow(a, 1.0 - t), cfg);
  BoundReport r = make(BoundId::THEO1,
                       "w_e(A) <= (sqrt d / 4) w_e(|A|^{1-t} + |A|^t) w_e(|A|^t + |A*|^{1-t})", a);
  r.params["t"] = t;
  r.components["we_first"] = we1;
  r.components["we_second"] = we2;
  r.value = std::sqrt(d) / 4.0 * we1 * we2;
  return r;
}

BoundReport power_bound(const OperatorTuple& a, int n, const EuclideanRadiusConfig& cfg) {
  if (n < 1) throw DomainError("power_bound needs n >= 1");
  const double d = static_cast<double>(a.d());
  const double we = rhs_radius(a, cfg);
  BoundReport r = make(BoundId::POWER, "w_e(A^n) <= sqrt(d) w_e(A)^n", a);
  r.params["n"] = n;
  r.components["we_A"] = we;
  r.value = std::sqrt(d) * std::pow(we, n);
  return r;
}

std::vector<double> default_parameter_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 10; ++i) g.push_back(i / 10.0);
  return g;
}

}  // namespace eorad
