#pragma once

// Numerical radius w(M), Euclidean operator norm ||A|| and Euclidean operator
// radius w_e(A) of a d-tuple.
//
// w and w_e are suprema over the unit sphere. Everything reported here is the
// objective evaluated at an explicit unit vector, so it is a certified lower
// bound of the true supremum; no upper certificate is ever claimed. When an
// upper bound is checked against these values, an optimizer shortfall can only
// make the check easier to pass on the left-hand side.

#include <cstdint>
#include <string>

#include "eorad/matfun.hpp"
#include "eorad/operator_tuple.hpp"

namespace eorad {

struct RadiusEstimate {
  double value = 0.0;            ///< best objective value found (sqrt of F for w_e)
  double certified_lower = 0.0;  ///< objective recomputed at `argmax`
  int restarts = 0;
  int iterations = 0;
  double tolerance = 0.0;
  std::string method;
  CVector argmax;  ///< unit vector, first nonzero entry real and >= 0
};

struct NumericalRadiusConfig {
  int grid_points = 720;
  double refine_tol = 1e-9;
  int top_k = 5;
};

struct EuclideanRadiusConfig {
  int restarts = 32;
  int max_iters = 500;
  double tol = 1e-8;
  std::uint64_t seed = 42;
  /// Run the lambda-reduction cross-check when d <= this value.
  std::size_t lambda_reduction_max_d = 3;
};

/// ||A|| = sqrt(lambda_max(sum_k A_k* A_k)).
double tuple_op_norm(const OperatorTuple& a);

/// max over theta of lambda_max((e^{i theta} M + e^{-i theta} M*) / 2):
/// coarse grid, then golden-section refinement around the best local maxima.
RadiusEstimate numerical_radius(const CMatrix& m, const NumericalRadiusConfig& cfg = {});

/// w_e(A) by multi-start projected gradient ascent of
/// F(x) = sum_k |<A_k x, x>|^2 on the unit sphere, cross-checked for small d by
/// the lambda-reduction (see radii.cpp). Reports the larger of the two.
RadiusEstimate euclidean_radius(const OperatorTuple& a, const EuclideanRadiusConfig& cfg = {});

/// Same estimator with the restart count multiplied by `factor`.
RadiusEstimate euclidean_radius_boosted(const OperatorTuple& a, const EuclideanRadiusConfig& cfg,
                                        int factor);

/// Exhaustive (theta, phi) grid over unit vectors of C^2 modulo phase,
/// x = (cos theta, e^{i phi} sin theta), with two levels of local refinement.
/// Only dim == 2 is supported.
double euclidean_radius_oracle(const OperatorTuple& a, int grid_density = 1000);

/// Plain uniform theta-grid maximum, no refinement. grid_points >= 1e4.
double numerical_radius_oracle(const CMatrix& m, int grid_points = 20000);

namespace detail {

/// F(x) = sum_k |<A_k x, x>|^2 (x need not be normalized).
double euclidean_objective(const OperatorTuple& a, const CVector& x);

/// Gradient of F with respect to the 2*dim real coordinates of x, packed
/// as dF/d(Re x_j) + i dF/d(Im x_j):  2 sum_k (conj(z_k) A_k x + z_k A_k* x),
/// z_k = <A_k x, x>.
CVector euclidean_objective_gradient(const OperatorTuple& a, const CVector& x);

/// Multiply by a unit phase so the first nonzero entry is real and >= 0.
CVector fix_phase(const CVector& x);

/// lambda_max((e^{i theta} M + e^{-i theta} M*) / 2).
double rotated_hermitian_max(const CMatrix& m, double theta);

/// Splitmix64 finalizer; used to derive per-restart and per-trial seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace detail

}  // namespace eorad
