#include "eorad/radii.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "eorad/errors.hpp"

namespace eorad {

namespace detail {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double euclidean_objective(const OperatorTuple& a, const CVector& x) {
  double f = 0.0;
  for (const auto& m : a) f += std::norm(x.dot(m * x));
  return f;
}

CVector euclidean_objective_gradient(const OperatorTuple& a, const CVector& x) {
  CVector g = CVector::Zero(x.size());
  for (const auto& m : a) {
    const CVector y = m * x;
    const cdouble z = x.dot(y);
    g += std::conj(z) * y + z * (m.adjoint() * x);
  }
  return 2.0 * g;
}

CVector fix_phase(const CVector& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double r = std::abs(x(i));
    if (r > 1e-14) return x * (std::conj(x(i)) / r);
  }
  return x;
}

double rotated_hermitian_max(const CMatrix& m, double theta) {
  const CMatrix h = (std::polar(1.0, theta) * m + std::polar(1.0, -theta) * m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(h.rows() - 1);
}

}  // namespace detail

namespace {

using detail::euclidean_objective;
using detail::fix_phase;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void validate(const EuclideanRadiusConfig& cfg) {
  if (cfg.restarts < 1) throw ConfigError("euclidean_radius: restarts must be >= 1");
  if (cfg.max_iters < 1) throw ConfigError("euclidean_radius: max_iters must be >= 1");
  if (!(cfg.tol > 0.0)) throw ConfigError("euclidean_radius: tol must be > 0");
}

CVector random_unit(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = cdouble(normal(rng), normal(rng));
  return x.normalized();
}

CVector top_eigenvector(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(h));
  return es.eigenvectors().col(h.rows() - 1);
}

// Hermitian pieces of M so that herm(e^{i theta} M) = cos(theta) H - sin(theta) K.
struct RotatedPencil {
  CMatrix h;
  CMatrix k;
  explicit RotatedPencil(const CMatrix& m)
      : h((m + m.adjoint()) * 0.5), k((m - m.adjoint()) * cdouble(0.0, -0.5)) {}
  CMatrix at(double theta) const { return std::cos(theta) * h - std::sin(theta) * k; }
  double top(double theta) const {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(at(theta), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(h.rows() - 1);
  }
};

struct AscentResult {
  CVector x;
  double f = 0.0;
  int iterations = 0;
};

// Scratch space for evaluating F and its gradient without reallocating. The
// products A_k x of the last evaluated point are kept so an accepted line-search
// point feeds the next gradient directly.
class ObjectiveWorkspace {
 public:
  explicit ObjectiveWorkspace(const OperatorTuple& a) : a_(a) {
    adj_.reserve(a.d());
    for (const auto& m : a) adj_.push_back(m.adjoint());
    ax_.assign(a.d(), CVector(a.dim()));
    trial_.assign(a.d(), CVector(a.dim()));
    z_.resize(a.d());
    trial_z_.resize(a.d());
    tmp_.resize(a.dim());
  }

  // Evaluates F at x into the trial buffers.
  double trial(const CVector& x) {
    double f = 0.0;
    for (std::size_t k = 0; k < a_.d(); ++k) {
      trial_[k].noalias() = a_[k] * x;
      trial_z_[k] = x.dot(trial_[k]);
      f += std::norm(trial_z_[k]);
    }
    return f;
  }

  void accept() {
    std::swap(ax_, trial_);
    std::swap(z_, trial_z_);
  }

  // Gradient at the last accepted point x.
  void gradient(const CVector& x, CVector& g) {
    g.setZero(x.size());
    for (std::size_t k = 0; k < a_.d(); ++k) {
      tmp_.noalias() = adj_[k] * x;
      g += std::conj(z_[k]) * ax_[k] + z_[k] * tmp_;
    }
    g *= 2.0;
  }

 private:
  const OperatorTuple& a_;
  std::vector<CMatrix> adj_;
  std::vector<CVector> ax_;
  std::vector<CVector> trial_;
  std::vector<cdouble> z_;
  std::vector<cdouble> trial_z_;
  CVector tmp_;
};

// Riemannian gradient ascent on the unit sphere with Armijo backtracking and
// renormalization as the retraction. `a` is expected to be scaled so that F <= 1.
AscentResult sphere_ascent(ObjectiveWorkspace& ws, CVector x, const EuclideanRadiusConfig& cfg) {
  constexpr double kArmijo = 1e-4;
  AscentResult out;
  x.normalize();
  double f = ws.trial(x);
  ws.accept();
  CVector g(x.size());
  CVector x_new(x.size());
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    ws.gradient(x, g);
    g -= x.dot(g).real() * x;  // tangent projection for the real inner product Re<u, v>
    const double gn2 = g.squaredNorm();
    if (gn2 <= 1e-30) break;
    double step = 1.0;
    double f_new = f;
    bool accepted = false;
    while (step > 1e-16) {
      x_new = x + step * g;
      x_new.normalize();
      f_new = ws.trial(x_new);
      if (f_new >= f + kArmijo * step * gn2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    ws.accept();
    const double gain = f_new - f;
    x.swap(x_new);
    f = f_new;
    if (gain <= cfg.tol * std::max(f, 1e-300)) {
      ++it;
      break;
    }
  }
  out.x = std::move(x);
  out.f = f;
  out.iterations = it;
  return out;
}

// Lambda-reduction. For z = (<A_1 x, x>, ..., <A_d x, x>), Cauchy-Schwarz gives
// |z| = max over unit lambda in C^d of Re sum_k conj(lambda_k) z_k, hence
//
//   w_e(A) = max_{lambda} w(sum_k conj(lambda_k) A_k)
//          = max_{lambda, x} <H(lambda) x, x>,  H(lambda) = herm(sum_k conj(lambda_k) A_k),
//
// with the rotation phase of w absorbed into lambda. Block-coordinate ascent:
// x <- top eigenvector of H(lambda), lambda <- z(x) / |z(x)|. Each half-step
// cannot decrease the objective.
AscentResult lambda_ascent(const OperatorTuple& a, Eigen::VectorXcd lambda,
                           const EuclideanRadiusConfig& cfg) {
  AscentResult out;
  lambda.normalize();
  double prev = -1.0;
  CVector x;
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    CMatrix h = CMatrix::Zero(a.dim(), a.dim());
    for (std::size_t k = 0; k < a.d(); ++k) h += std::conj(lambda(k)) * a[k];
    x = top_eigenvector(h);
    Eigen::VectorXcd z(a.d());
    for (std::size_t k = 0; k < a.d(); ++k) z(k) = x.dot(a[k] * x);
    const double val = z.norm();
    if (val <= 1e-300) break;
    lambda = z / val;
    if (val - prev <= cfg.tol * val) {
      ++it;
      break;
    }
    prev = val;
  }
  out.x = std::move(x);
  out.f = euclidean_objective(a, out.x);
  out.iterations = it;
  return out;
}

struct Best {
  CVector x;
  double value = -1.0;
  void offer(const OperatorTuple& a, const CVector& cand) {
    const double v = std::sqrt(euclidean_objective(a, cand));
    // Strict comparison keeps the first-found maximizer on ties.
    if (v > value) {
      value = v;
      x = cand;
    }
  }
};

}  // namespace

double tuple_op_norm(const OperatorTuple& a) {
  CMatrix s = CMatrix::Zero(a.dim(), a.dim());
  for (const auto& m : a) s += m.adjoint() * m;
  return std::sqrt(std::max(max_eigenvalue(s), 0.0));
}

RadiusEstimate numerical_radius(const CMatrix& m, const NumericalRadiusConfig& cfg) {
  require_square(m);
  if (cfg.grid_points < 3 || cfg.top_k < 1 || !(cfg.refine_tol > 0.0)) {
    throw ConfigError("numerical_radius: need grid_points >= 3, top_k >= 1, refine_tol > 0");
  }
  RadiusEstimate est;
  est.method = "theta-sweep";
  est.tolerance = cfg.refine_tol;
  est.restarts = cfg.top_k;

  const RotatedPencil pencil(m);
  const int n = cfg.grid_points;
  const double h = kTwoPi / n;
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = pencil.top(i * h);
  int evals = n;

  std::vector<int> peaks;
  for (int i = 0; i < n; ++i) {
    const double l = vals[(i + n - 1) % n];
    const double r = vals[(i + 1) % n];
    if (vals[i] >= l && vals[i] >= r) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](int a, int b) { return vals[a] > vals[b]; });
  if (peaks.size() > static_cast<std::size_t>(cfg.top_k)) peaks.resize(cfg.top_k);

  double best_theta = 0.0;
  double best = vals[0];
  for (int i = 1; i < n; ++i) {
    if (vals[i] > best) {
      best = vals[i];
      best_theta = i * h;
    }
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int p : peaks) {
    double lo = (p - 1) * h;
    double hi = (p + 1) * h;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = pencil.top(c);
    double fd = pencil.top(d);
    evals += 2;
    while (hi - lo > cfg.refine_tol) {
      if (fc > fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - inv_phi * (hi - lo);
        fc = pencil.top(c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + inv_phi * (hi - lo);
        fd = pencil.top(d);
      }
      ++evals;
    }
    for (auto [th, fv] : {std::pair{c, fc}, std::pair{d, fd}}) {
      if (fv > best) {
        best = fv;
        best_theta = th;
      }
    }
  }

  // lambda_max(herm(e^{i theta} M)) = Re<e^{i theta} M x, x> <= |<M x, x>| at the
  // top eigenvector, so the argmax certifies at least `best`.
  CVector x = fix_phase(top_eigenvector(pencil.at(best_theta)));
  const double attained = std::abs(x.dot(m * x));
  est.value = std::max({best, attained, 0.0});
  est.certified_lower = std::max(attained, 0.0);
  if (est.certified_lower > est.value) est.certified_lower = est.value;
  est.iterations = evals;
  est.argmax = std::move(x);
  return est;
}

RadiusEstimate euclidean_radius(const OperatorTuple& a, const EuclideanRadiusConfig& cfg) {
  validate(cfg);
  RadiusEstimate est;
  est.tolerance = cfg.tol;
  const double scale = tuple_op_norm(a);
  if (scale == 0.0) {
    est.method = "zero";
    est.argmax = CVector::Unit(a.dim(), 0);
    return est;
  }
  const OperatorTuple an = cdouble(1.0 / scale) * a;

  Best grad;
  int iterations = 0;
  int restarts = 0;
  ObjectiveWorkspace ws(an);
  auto run_ascent = [&](const CVector& start) {
    AscentResult r = sphere_ascent(ws, start, cfg);
    iterations += r.iterations;
    ++restarts;
    grad.offer(a, r.x);
  };

  CMatrix herm_sum = CMatrix::Zero(a.dim(), a.dim());
  CMatrix gram = CMatrix::Zero(a.dim(), a.dim());
  for (const auto& m : an) {
    herm_sum += hermitian_part(m);
    gram += m.adjoint() * m;
  }
  run_ascent(top_eigenvector(herm_sum));
  run_ascent(top_eigenvector(gram));
  for (int r = 0; r < cfg.restarts; ++r) {
    std::mt19937_64 rng(detail::mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    run_ascent(random_unit(a.dim(), rng));
  }

  Best best = grad;
  est.method = "projected-gradient";
  if (a.d() <= cfg.lambda_reduction_max_d) {
    Best lam;
    if (a.d() == 1) {
      // A quarter of the default theta grid is plenty once the peaks are refined.
      NumericalRadiusConfig nr_cfg;
      nr_cfg.grid_points = 180;
      RadiusEstimate nr = numerical_radius(a[0], nr_cfg);
      iterations += nr.iterations;
      lam.offer(a, nr.argmax);
    } else {
      auto run_lambda = [&](const Eigen::VectorXcd& start) {
        AscentResult r = lambda_ascent(an, start, cfg);
        iterations += r.iterations;
        ++restarts;
        lam.offer(a, r.x);
      };
      const auto d = static_cast<Eigen::Index>(a.d());
      for (Eigen::Index k = 0; k < d; ++k) run_lambda(Eigen::VectorXcd::Unit(d, k));
      const int extra = std::max(1, cfg.restarts / 8);
      for (int r = 0; r < extra; ++r) {
        std::mt19937_64 rng(detail::mix_seed(cfg.seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(r)));
        run_lambda(random_unit(d, rng));
      }
    }
    if (lam.value > best.value) {
      best = lam;
      est.method = "lambda-reduction";
    }
  }

  est.argmax = fix_phase(best.x);
  est.value = best.value;
  est.certified_lower = std::min(std::sqrt(euclidean_objective(a, est.argmax)), est.value);
  est.restarts = restarts;
  est.iterations = iterations;
  return est;
}

RadiusEstimate euclidean_radius_boosted(const OperatorTuple& a, const EuclideanRadiusConfig& cfg,
                                        int factor) {
  EuclideanRadiusConfig boosted = cfg;
  boosted.restarts = cfg.restarts * std::max(factor, 1);
  return euclidean_radius(a, boosted);
}

double euclidean_radius_oracle(const OperatorTuple& a, int grid_density) {
  if (a.dim() != 2) {
    std::ostringstream os;
    os << "euclidean_radius_oracle only supports dim = 2, got " << a.dim();
    throw UnsupportedError(os.str());
  }
  if (grid_density < 100) throw ConfigError("euclidean_radius_oracle: grid_density must be >= 100");

  // Plain complex arithmetic on the 2x2 entries: this is the brute-force
  // reference, kept free of the optimizer's code paths.
  struct Entry {
    cdouble a00, a01, a10, a11;
  };
  std::vector<Entry> es;
  for (const auto& m : a) es.push_back({m(0, 0), m(0, 1), m(1, 0), m(1, 1)});
  auto objective = [&](double theta, double phi) {
    const double c = std::cos(theta);
    const cdouble s = std::polar(std::sin(theta), phi);
    double f = 0.0;
    for (const auto& e : es) {
      // <A x, x> = conj(x0) (a00 x0 + a01 x1) + conj(x1) (a10 x0 + a11 x1)
      const cdouble z = c * (e.a00 * c + e.a01 * s) + std::conj(s) * (e.a10 * c + e.a11 * s);
      f += std::norm(z);
    }
    return f;
  };

  const double half_pi = std::numbers::pi / 2.0;
  double best = -1.0;
  double bt = 0.0;
  double bp = 0.0;
  double dt = half_pi / grid_density;
  double dp = kTwoPi / grid_density;
  for (int i = 0; i <= grid_density; ++i) {
    for (int j = 0; j < grid_density; ++j) {
      const double f = objective(i * dt, j * dp);
      if (f > best) {
        best = f;
        bt = i * dt;
        bp = j * dp;
      }
    }
  }
  constexpr int kRefine = 64;
  for (int level = 0; level < 2; ++level) {
    const double t0 = bt - dt;
    const double p0 = bp - dp;
    dt = 2.0 * dt / kRefine;
    dp = 2.0 * dp / kRefine;
    for (int i = 0; i <= kRefine; ++i) {
      const double th = std::clamp(t0 + i * dt, 0.0, half_pi);
      for (int j = 0; j <= kRefine; ++j) {
        const double ph = p0 + j * dp;
        const double f = objective(th, ph);
        if (f > best) {
          best = f;
          bt = th;
          bp = ph;
        }
      }
    }
  }
  return std::sqrt(std::max(best, 0.0));
}

double numerical_radius_oracle(const CMatrix& m, int grid_points) {
  require_square(m);
  if (grid_points < 10000) throw ConfigError("numerical_radius_oracle: grid_points must be >= 1e4");
  double best = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    best = std::max(best, detail::rotated_hermitian_max(m, kTwoPi * i / grid_points));
  }
  return best;
}

}  // namespace eorad
