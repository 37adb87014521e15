#pragma once

// n x n operator matrices whose entries are d-tuples, and the scalar
// comparison matrices whose numerical radius dominates their w_e.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "eorad/bounds.hpp"
#include "eorad/operator_tuple.hpp"

namespace eorad {

class BlockOperatorMatrix {
 public:
  /// `blocks` in row-major order, n*n entries sharing d and block size.
  BlockOperatorMatrix(std::size_t n, std::vector<OperatorTuple> blocks);

  std::size_t n() const { return n_; }
  std::size_t d() const { return blocks_.front().d(); }
  Eigen::Index block_dim() const { return blocks_.front().dim(); }
  const OperatorTuple& operator()(std::size_t i, std::size_t j) const { return blocks_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<OperatorTuple> blocks_;
};

/// The d-tuple of (n m) x (n m) matrices, k-th entry = [A_ij^k].
OperatorTuple assemble(const BlockOperatorMatrix& bm);

enum class ComparisonMode {
  THEM1_FG,         ///< off-diagonal w_e terms with a general (f, g)
  COR1_ALPHA,       ///< off-diagonal w_e terms with f = x^alpha, g = x^{1-alpha}
  COR2_FG_NORM,     ///< THEM1_FG with w_e replaced by the tuple norm
  COR3_ALPHA_NORM,  ///< COR1_ALPHA with w_e replaced by the tuple norm
  COR4_SYM,         ///< COR1_ALPHA mirrored: both off-diagonals carry half the value
  COR5_SYM_NORM,    ///< COR3_ALPHA_NORM mirrored the same way
};

std::string_view to_string(ComparisonMode mode);
BoundId bound_id(ComparisonMode mode);
const std::vector<ComparisonMode>& all_comparison_modes();
bool is_symmetric_mode(ComparisonMode mode);

struct ComparisonParams {
  std::optional<double> alpha;              ///< for the *_ALPHA / SYM modes
  std::optional<SpectralFunctionPair> fg;   ///< for the *_FG modes
};

struct ComparisonMatrix {
  Eigen::MatrixXd entries;
  ComparisonMode mode{};
  ComparisonParams params;
};

/// Diagonal: w_e(A_ii). For i < j, with P = f^2(|A_ji|) + g^2(|A_ij*|) and
/// Q = f^2(|A_ij|) + g^2(|A_ji*|):  sqrt(w_e(P) w_e(Q)) (or tuple norms in
/// the *_NORM modes); entries below the diagonal are 0. The symmetric modes put
/// half of that value at both (i, j) and (j, i).
ComparisonMatrix comparison_matrix(const BlockOperatorMatrix& bm, ComparisonMode mode,
                                   const ComparisonParams& params,
                                   const EuclideanRadiusConfig& cfg = {});

/// Same, reusing already computed diagonal radii w_e(A_ii).
ComparisonMatrix comparison_matrix(const BlockOperatorMatrix& bm, ComparisonMode mode,
                                   const ComparisonParams& params,
                                   const Eigen::VectorXd& diagonal,
                                   const EuclideanRadiusConfig& cfg = {});

/// COR1_ALPHA -> COR4_SYM and COR3_ALPHA_NORM -> COR5_SYM_NORM: keeps the
/// diagonal and replaces off-diagonals by (T + T^T) / 2.
ComparisonMatrix symmetrized(const ComparisonMatrix& cm);

/// The report of a comparison matrix built for a d-tuple operator matrix.
BoundReport comparison_report(const ComparisonMatrix& cm, std::size_t d);

/// w(B) for an entrywise nonnegative real matrix, computed as
/// lambda_max((B + B^T) / 2). By Perron-Frobenius the largest eigenvalue of a
/// symmetric nonnegative matrix dominates every eigenvalue modulus, so this is
/// the numerical radius exactly.
double nonneg_numrad(const Eigen::MatrixXd& b);
double nonneg_numrad(const ComparisonMatrix& cm);

/// comparison_matrix followed by nonneg_numrad, as an auditable report.
BoundReport block_radius_bound(const BlockOperatorMatrix& bm, ComparisonMode mode,
                               const ComparisonParams& params,
                               const EuclideanRadiusConfig& cfg = {});

/// Closed-form bounds for w_e([[A, B], [C, D]]): COR6 (w_e-based off-diagonal
/// term beta) and COR7 (norm-based gamma).
std::array<BoundReport, 2> two_by_two_bounds(const OperatorTuple& a, const OperatorTuple& b,
                                             const OperatorTuple& c, const OperatorTuple& d,
                                             const EuclideanRadiusConfig& cfg = {});

/// Default alpha sweep {0, 1/4, 1/2, 3/4, 1}.
std::vector<double> default_alpha_grid();

}  // namespace eorad
