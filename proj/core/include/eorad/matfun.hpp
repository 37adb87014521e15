#pragma once

// Decompositions and spectral functions of dense complex matrices.
//
// Conventions used throughout the library:
//   * |M| = (M*M)^{1/2}, |M*| = (MM*)^{1/2}.
//   * Powers are taken on singular values with 0^0 := 1, so |M|^0 = I even
//     when M is singular. Every inequality stated for 0 <= t <= 1 keeps
//     holding at the endpoints under this convention.
//   * The polar factor is the full unitary W V* from an SVD, never a partial
//     isometry.

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

namespace eorad {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPsdClampTol = 1e-12;

/// Throws DimensionError unless `m` is square and non-empty, and
/// DomainError if any entry is NaN or infinite.
void require_square(const CMatrix& m, const char* what = "matrix");

/// Largest singular value.
double op_norm(const CMatrix& m);

/// Largest modulus over the (general, non-Hermitian) eigenvalues.
double spectral_radius_mat(const CMatrix& m);

/// (M + M*) / 2.
CMatrix hermitian_part(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double rel_tol = kHermitianTol);

/// Smallest eigenvalue of a Hermitian matrix (the input is symmetrized first).
double min_eigenvalue(const CMatrix& h);

/// Largest eigenvalue of a Hermitian matrix (the input is symmetrized first).
double max_eigenvalue(const CMatrix& h);

/// |M|^t = V diag(s^t) V* for the SVD M = W diag(s) V*.
CMatrix abs_pow(const CMatrix& m, double t);

/// |M*|^t = W diag(s^t) W*.
CMatrix abs_adjoint_pow(const CMatrix& m, double t);

/// Unitary factor U of M = U |M|.
CMatrix polar_unitary(const CMatrix& m);

/// f(H) for Hermitian H via its eigendecomposition. Throws
/// PreconditionError when ||H - H*|| > 1e-10 ||H||.
CMatrix spectral_apply(const CMatrix& h, const std::function<double(double)>& f);

/// f(H) for positive semidefinite H. Eigenvalues in [-1e-12 ||H||, 0) are
/// clamped to zero before f is applied; anything more negative is an error.
CMatrix psd_apply(const CMatrix& h, const std::function<double(double)>& f);

/// Nearest PSD matrix in the spectral sense: negative eigenvalues set to 0.
CMatrix project_psd(const CMatrix& h);

/// Nonnegative continuous f, g on [0, inf) with f(x) g(x) = x.
///
/// The identity and nonnegativity are checked at construction on the sample
/// grid {0, 1e-3, 1e-2, ..., 1e3}.
class SpectralFunctionPair {
 public:
  using Fn = std::function<double(double)>;

  SpectralFunctionPair(Fn f, Fn g, std::string label);

  /// f(x) = x^{1/2}, g(x) = x^{1/2}.
  static SpectralFunctionPair sqrt_pair();
  /// f(x) = x^alpha, g(x) = x^{1-alpha}, alpha in [0, 1].
  static SpectralFunctionPair power_pair(double alpha);
  /// f(x) = x^{1/2} (1+x)^{1/4}, g(x) = x^{1/2} (1+x)^{-1/4}.
  static SpectralFunctionPair mixed_pair();

  /// Parses "sqrt", "mixed" or "power:<alpha>".
  static SpectralFunctionPair from_label(const std::string& label);

  double f(double x) const { return f_(x); }
  double g(double x) const { return g_(x); }
  const std::string& label() const { return label_; }

 private:
  Fn f_;
  Fn g_;
  std::string label_;
};

}  // namespace eorad
