#pragma once

// Upper bounds for the Euclidean operator radius w_e, each as a calculator that
// returns an auditable BoundReport.
//
// Any w_e(...) appearing on a right-hand side is evaluated by euclidean_radius
// with four times the configured restarts. The optimizer returns a lower
// estimate of that term, so a computed right-hand side is never larger than the
// exact one and a failed comparison is a genuine red flag.
//
// Exponent conventions follow matfun.hpp (0^0 = 1, full unitary polar factor).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eorad/matfun.hpp"
#include "eorad/operator_tuple.hpp"
#include "eorad/radii.hpp"

namespace eorad {

enum class BoundId {
  SANDWICH,
  SANDWICH_LOWER,
  TH1_I,
  TH1_II,
  TH1_III,
  COR1_1_I,
  COR1_1_II,
  COR1_1_III,
  TH2,
  TH3,
  TH4,
  TH9,
  TH9_NORM,
  TH10,
  TH10_NORM,
  TH10_TUPLE_NORM,
  REMARK_ALPHA_T,
  REMARK_ALPHA_T_NORM,
  REMARK_ALPHA_T_TUPLE_NORM,
  ABSTRACT,
  TH7,
  TH8,
  TH8_NORM,
  TH15,
  THEO1,
  POWER,
  THEM1_FG,
  COR1_ALPHA,
  COR2_FG_NORM,
  COR3_ALPHA_NORM,
  COR4_SYM,
  COR5_SYM_NORM,
  COR6,
  COR7,
};

std::string_view to_string(BoundId id);
std::optional<BoundId> bound_id_from_string(std::string_view name);
const std::vector<BoundId>& all_bound_ids();

struct BoundReport {
  BoundId id{};
  std::map<std::string, double> params;  ///< t, alpha, n, d, ...
  std::string function_pair;             ///< label of (f, g) when one is used
  double value = 0.0;
  std::map<std::string, double> components;
  std::string formula;  ///< human-readable statement of the inequality
};

/// Re-evaluates the closed-form expression of `r.id` from `r.components` and
/// `r.params` alone. Used to audit that every report is self-consistent.
double recompute_value(const BoundReport& r);

/// True when the value and every component are finite, the value is >= 0 and
/// recompute_value reproduces it to 1e-12 (relative to max(1, value)).
bool is_self_consistent(const BoundReport& r);

struct SandwichBounds {
  double lower = 0.0;  ///< ||A|| / (2 sqrt(d))
  double upper = 0.0;  ///< ||A||
};

SandwichBounds sandwich(const OperatorTuple& a);
/// The two sides of the sandwich as reports (SANDWICH_LOWER, SANDWICH).
std::array<BoundReport, 2> sandwich_reports(const OperatorTuple& a);

/// Bounds for w_e(C) when A, B are positive and every block
/// [[A_k, C_k*], [C_k, B_k]] is positive. Reports TH1_I, TH1_II, TH1_III.
/// Positivity is checked with tolerance -1e-10 * scale; the checked matrices
/// are then projected onto the PSD cone before use.
std::array<BoundReport, 3> block_dominance_bounds(const OperatorTuple& a, const OperatorTuple& b,
                                                  const OperatorTuple& c,
                                                  const EuclideanRadiusConfig& cfg = {});

/// Throws PreconditionError naming the first k where A_k, B_k or the 2x2 block
/// fails positivity.
void check_positive_block(const OperatorTuple& a, const OperatorTuple& b, const OperatorTuple& c);

/// Bounds for w_e(BC): COR1_1_I, COR1_1_II, COR1_1_III.
std::array<BoundReport, 3> product_bounds(const OperatorTuple& b, const OperatorTuple& c,
                                          const EuclideanRadiusConfig& cfg = {});

/// Bounds for w_e(A) at polar exponent t in [0, 1]: TH2, TH3, TH4.
std::array<BoundReport, 3> polar_power_bounds(const OperatorTuple& a, double t,
                                              const EuclideanRadiusConfig& cfg = {});

/// Throws PreconditionError unless ||  |B_k| C_k - C_k* |B_k|  || <= 1e-8 * scale for all k.
void check_commuting(const OperatorTuple& b, const OperatorTuple& c);

/// Chained bounds for w_e(BC) under |B_k| C_k = C_k* |B_k|: TH9 <= TH9_NORM.
std::array<BoundReport, 2> commuting_fg_bound(const OperatorTuple& b, const OperatorTuple& c,
                                              const SpectralFunctionPair& fg,
                                              const EuclideanRadiusConfig& cfg = {});

/// Chained bounds for w_e(A): TH10 <= TH10_NORM <= TH10_TUPLE_NORM.
std::array<BoundReport, 3> fg_polar_bounds(const OperatorTuple& a, double t,
                                           const SpectralFunctionPair& fg,
                                           const EuclideanRadiusConfig& cfg = {});

/// fg_polar_bounds with f = x^alpha, g = x^{1-alpha}, computed from matrix
/// powers directly. Reports REMARK_ALPHA_T, REMARK_ALPHA_T_NORM,
/// REMARK_ALPHA_T_TUPLE_NORM.
std::array<BoundReport, 3> remark_bound(const OperatorTuple& a, double alpha, double t,
                                        const EuclideanRadiusConfig& cfg = {});

/// w_e(A) <= (1/sqrt 2) ||A||^{1/2} ||sum_k (|A_k| + |A_k*|)||^{1/2}.
BoundReport abstract_bound(const OperatorTuple& a);

/// w_e(BC) <= (1/sqrt 2) w_e(|C|^2 + i |B*|^2): TH7.
BoundReport imaginary_combo_product_bound(const OperatorTuple& b, const OperatorTuple& c,
                                          const EuclideanRadiusConfig& cfg = {});

/// Chained bounds for w_e(A): TH8 <= TH8_NORM.
std::array<BoundReport, 2> imaginary_combo_bound(const OperatorTuple& a, double t,
                                                 const EuclideanRadiusConfig& cfg = {});

/// w_e(BC) <= (sqrt d / 4) w_e(|B| + |C*|) w_e(|C| + |B*|): TH15.
BoundReport product_quarter_bound(const OperatorTuple& b, const OperatorTuple& c,
                                  const EuclideanRadiusConfig& cfg = {});

/// w_e(A) <= (sqrt d / 4) w_e(|A|^{1-t} + |A|^t) w_e(|A|^t + |A*|^{1-t}): THEO1.
BoundReport quarter_polar_bound(const OperatorTuple& a, double t,
                                const EuclideanRadiusConfig& cfg = {});

/// Right-hand side of w_e(A^n) <= sqrt(d) w_e(A)^n (entrywise power): POWER.
BoundReport power_bound(const OperatorTuple& a, int n, const EuclideanRadiusConfig& cfg = {});

/// Default sweep grid {0, 0.1, ..., 1.0}.
std::vector<double> default_parameter_grid();

}  // namespace eorad
