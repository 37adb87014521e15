#include "eorad/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eorad/errors.hpp"

namespace eorad {
namespace {

using Svd = Eigen::JacobiSVD<CMatrix>;
using HermEig = Eigen::SelfAdjointEigenSolver<CMatrix>;

Svd full_svd(const CMatrix& m) {
  require_square(m);
  return Svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

void require_power(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    std::ostringstream os;
    os << "matrix power exponent must be finite and >= 0, got " << t;
    throw DomainError(os.str());
  }
}

// W diag(s^t) W* with 0^0 = 1 (std::pow already follows that convention).
CMatrix conjugate_power(const CMatrix& basis, const Eigen::VectorXd& s, double t) {
  Eigen::VectorXd st(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) st(i) = std::pow(std::max(s(i), 0.0), t);
  CMatrix out = basis * st.cast<cdouble>().asDiagonal() * basis.adjoint();
  return hermitian_part(out);
}

double scale_of(const CMatrix& m) { return std::max(op_norm(m), 1e-300); }

}  // namespace

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << what << " must be square and non-empty, got " << m.rows() << "x" << m.cols();
    throw DimensionError(os.str());
  }
  if (!m.allFinite()) {
    throw DomainError(std::string(what) + " has a non-finite entry");
  }
}

double op_norm(const CMatrix& m) {
  require_square(m);
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius_mat(const CMatrix& m) {
  require_square(m);
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix hermitian_part(const CMatrix& m) { return (m + m.adjoint()) * 0.5; }

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.norm();
  return (m - m.adjoint()).norm() <= rel_tol * std::max(scale, 1e-300) || scale == 0.0;
}

double min_eigenvalue(const CMatrix& h) {
  require_square(h);
  HermEig es(hermitian_part(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double max_eigenvalue(const CMatrix& h) {
  require_square(h);
  HermEig es(hermitian_part(h), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.rows() - 1);
}

CMatrix abs_pow(const CMatrix& m, double t) {
  require_power(t);
  const Svd svd = full_svd(m);
  return conjugate_power(svd.matrixV(), svd.singularValues(), t);
}

CMatrix abs_adjoint_pow(const CMatrix& m, double t) {
  require_power(t);
  const Svd svd = full_svd(m);
  return conjugate_power(svd.matrixU(), svd.singularValues(), t);
}

CMatrix polar_unitary(const CMatrix& m) {
  const Svd svd = full_svd(m);
  CMatrix w = svd.matrixU();
  CMatrix v = svd.matrixV();
  // Null singular vectors are only defined up to phase; make the largest entry
  // of each real and positive so the completion is reproducible.
  const auto& s = svd.singularValues();
  const double cut = s.size() > 0 ? s(0) * static_cast<double>(m.rows()) * 1e-15 : 0.0;
  auto normalize = [](auto col) {
    Eigen::Index at = 0;
    col.cwiseAbs().maxCoeff(&at);
    if (std::abs(col(at)) > 0.0) col *= std::conj(col(at)) / std::abs(col(at));
  };
  for (Eigen::Index j = 0; j < s.size(); ++j) {
    if (s(j) > cut) continue;
    normalize(w.col(j));
    normalize(v.col(j));
  }
  return w * v.adjoint();
}

CMatrix spectral_apply(const CMatrix& h, const std::function<double(double)>& f) {
  require_square(h);
  if (!is_hermitian(h)) {
    std::ostringstream os;
    os << "spectral_apply needs a Hermitian matrix; ||H - H*|| = " << (h - h.adjoint()).norm();
    throw PreconditionError(os.str());
  }
  HermEig es(hermitian_part(h));
  Eigen::VectorXd fl(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) fl(i) = f(es.eigenvalues()(i));
  const CMatrix& q = es.eigenvectors();
  return hermitian_part(q * fl.cast<cdouble>().asDiagonal() * q.adjoint());
}

CMatrix psd_apply(const CMatrix& h, const std::function<double(double)>& f) {
  require_square(h);
  if (!is_hermitian(h)) {
    throw PreconditionError("psd_apply needs a Hermitian matrix");
  }
  HermEig es(hermitian_part(h));
  const double floor = -kPsdClampTol * scale_of(h);
  Eigen::VectorXd fl(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    double lam = es.eigenvalues()(i);
    if (lam < floor) {
      std::ostringstream os;
      os << "psd_apply: eigenvalue " << lam << " is below the clamp threshold " << floor;
      throw PreconditionError(os.str());
    }
    fl(i) = f(std::max(lam, 0.0));
  }
  const CMatrix& q = es.eigenvectors();
  return hermitian_part(q * fl.cast<cdouble>().asDiagonal() * q.adjoint());
}

CMatrix project_psd(const CMatrix& h) {
  require_square(h);
  HermEig es(hermitian_part(h));
  Eigen::VectorXd l = es.eigenvalues().cwiseMax(0.0);
  const CMatrix& q = es.eigenvectors();
  return hermitian_part(q * l.cast<cdouble>().asDiagonal() * q.adjoint());
}

SpectralFunctionPair::SpectralFunctionPair(Fn f, Fn g, std::string label)
    : f_(std::move(f)), g_(std::move(g)), label_(std::move(label)) {
  if (!f_ || !g_) throw ConfigError("spectral function pair needs both f and g");
  double x = 0.0;
  for (int e = -3; e <= 4; ++e) {
    const double fx = f_(x);
    const double gx = g_(x);
    if (!(fx >= 0.0) || !(gx >= 0.0)) {
      std::ostringstream os;
      os << "spectral pair '" << label_ << "' is negative at " << x;
      throw ConfigError(os.str());
    }
    if (std::abs(fx * gx - x) > 1e-10 * x) {
      std::ostringstream os;
      os << "spectral pair '" << label_ << "' violates f(x)g(x) = x at x = " << x << " (got "
         << fx * gx << ")";
      throw ConfigError(os.str());
    }
    x = std::pow(10.0, e);
  }
}

SpectralFunctionPair SpectralFunctionPair::sqrt_pair() {
  return {[](double x) { return std::sqrt(x); }, [](double x) { return std::sqrt(x); }, "sqrt"};
}

SpectralFunctionPair SpectralFunctionPair::power_pair(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("power pair exponent alpha must lie in [0, 1]");
  }
  std::ostringstream label;
  label << "power:" << alpha;
  return {[alpha](double x) { return std::pow(x, alpha); },
          [alpha](double x) { return std::pow(x, 1.0 - alpha); }, label.str()};
}

SpectralFunctionPair SpectralFunctionPair::mixed_pair() {
  return {[](double x) { return std::sqrt(x) * std::pow(1.0 + x, 0.25); },
          [](double x) { return std::sqrt(x) * std::pow(1.0 + x, -0.25); }, "mixed"};
}

SpectralFunctionPair SpectralFunctionPair::from_label(const std::string& label) {
  if (label == "sqrt") return sqrt_pair();
  if (label == "mixed") return mixed_pair();
  if (label.rfind("power:", 0) == 0) {
    std::size_t used = 0;
    const std::string num = label.substr(6);
    double alpha = 0.0;
    try {
      alpha = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size()) {
      throw ConfigError("cannot parse power pair exponent in '" + label + "'");
    }
    return power_pair(alpha);
  }
  throw ConfigError("unknown spectral function pair '" + label + "' (expected sqrt, mixed, power:<a>)");
}

}  // namespace eorad
