#include "eorad/blockmat.hpp"

#include <cmath>
#include <sstream>

#include "eorad/errors.hpp"

namespace eorad {
namespace {

constexpr int kRhsRestartFactor = 4;

struct ModeName {
  ComparisonMode mode;
  std::string_view name;
  BoundId id;
};

constexpr ModeName kModes[] = {
    {ComparisonMode::THEM1_FG, "THEM1_FG", BoundId::THEM1_FG},
    {ComparisonMode::COR1_ALPHA, "COR1_ALPHA", BoundId::COR1_ALPHA},
    {ComparisonMode::COR2_FG_NORM, "COR2_FG_NORM", BoundId::COR2_FG_NORM},
    {ComparisonMode::COR3_ALPHA_NORM, "COR3_ALPHA_NORM", BoundId::COR3_ALPHA_NORM},
    {ComparisonMode::COR4_SYM, "COR4_SYM", BoundId::COR4_SYM},
    {ComparisonMode::COR5_SYM_NORM, "COR5_SYM_NORM", BoundId::COR5_SYM_NORM},
};

bool uses_fg(ComparisonMode m) {
  return m == ComparisonMode::THEM1_FG || m == ComparisonMode::COR2_FG_NORM;
}

bool uses_norm(ComparisonMode m) {
  return m == ComparisonMode::COR2_FG_NORM || m == ComparisonMode::COR3_ALPHA_NORM ||
         m == ComparisonMode::COR5_SYM_NORM;
}

double rhs_radius(const OperatorTuple& a, const EuclideanRadiusConfig& cfg) {
  return euclidean_radius_boosted(a, cfg, kRhsRestartFactor).value;
}

// f^2(|X|) + g^2(|Y*|), entrywise over the tuple.
OperatorTuple fg_mix(const OperatorTuple& x, const OperatorTuple& y, const ComparisonParams& p) {
  std::vector<CMatrix> out;
  out.reserve(x.d());
  if (p.fg) {
    const auto& fg = *p.fg;
    auto f2 = [&](double v) { return fg.f(v) * fg.f(v); };
    auto g2 = [&](double v) { return fg.g(v) * fg.g(v); };
    for (std::size_t k = 0; k < x.d(); ++k) {
      out.push_back(psd_apply(abs_pow(x[k], 1.0), f2) + psd_apply(abs_adjoint_pow(y[k], 1.0), g2));
    }
  } else {
    const double alpha = *p.alpha;
    for (std::size_t k = 0; k < x.d(); ++k) {
      out.push_back(abs_pow(x[k], 2.0 * alpha) + abs_adjoint_pow(y[k], 2.0 * (1.0 - alpha)));
    }
  }
  return OperatorTuple(std::move(out));
}

void check_params(ComparisonMode mode, const ComparisonParams& p) {
  if (uses_fg(mode)) {
    if (!p.fg || p.alpha) {
      throw ConfigError(std::string(to_string(mode)) + " takes a function pair and no alpha");
    }
  } else {
    if (!p.alpha || p.fg) {
      throw ConfigError(std::string(to_string(mode)) + " takes alpha and no function pair");
    }
    if (!(*p.alpha >= 0.0 && *p.alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1]");
  }
}

}  // namespace

BlockOperatorMatrix::BlockOperatorMatrix(std::size_t n, std::vector<OperatorTuple> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n_ == 0) throw DimensionError("block operator matrix needs n >= 1");
  if (blocks_.size() != n_ * n_) {
    std::ostringstream os;
    os << "block operator matrix with n=" << n_ << " needs " << n_ * n_ << " blocks, got "
       << blocks_.size();
    throw DimensionError(os.str());
  }
  for (std::size_t b = 1; b < blocks_.size(); ++b) {
    if (blocks_[b].d() != blocks_[0].d() || blocks_[b].dim() != blocks_[0].dim()) {
      std::ostringstream os;
      os << "block (" << b / n_ << ", " << b % n_ << ") has d=" << blocks_[b].d()
         << ", dim=" << blocks_[b].dim() << "; expected d=" << blocks_[0].d()
         << ", dim=" << blocks_[0].dim();
      throw DimensionError(os.str());
    }
  }
}

OperatorTuple assemble(const BlockOperatorMatrix& bm) {
  const Eigen::Index m = bm.block_dim();
  const auto n = static_cast<Eigen::Index>(bm.n());
  std::vector<CMatrix> out;
  out.reserve(bm.d());
  for (std::size_t k = 0; k < bm.d(); ++k) {
    CMatrix big(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        big.block(i * m, j * m, m, m) = bm(static_cast<std::size_t>(i), static_cast<std::size_t>(j))[k];
      }
    }
    out.push_back(std::move(big));
  }
  return OperatorTuple(std::move(out));
}

std::string_view to_string(ComparisonMode mode) {
  for (const auto& e : kModes) {
    if (e.mode == mode) return e.name;
  }
  return "UNKNOWN";
}

BoundId bound_id(ComparisonMode mode) {
  for (const auto& e : kModes) {
    if (e.mode == mode) return e.id;
  }
  throw ConfigError("unknown comparison mode");
}

const std::vector<ComparisonMode>& all_comparison_modes() {
  static const std::vector<ComparisonMode> modes = [] {
    std::vector<ComparisonMode> v;
    for (const auto& e : kModes) v.push_back(e.mode);
    return v;
  }();
  return modes;
}

bool is_symmetric_mode(ComparisonMode mode) {
  return mode == ComparisonMode::COR4_SYM || mode == ComparisonMode::COR5_SYM_NORM;
}

ComparisonMatrix comparison_matrix(const BlockOperatorMatrix& bm, ComparisonMode mode,
                                   const ComparisonParams& params,
                                   const EuclideanRadiusConfig& cfg) {
  Eigen::VectorXd diagonal(static_cast<Eigen::Index>(bm.n()));
  for (std::size_t i = 0; i < bm.n(); ++i) {
    diagonal(static_cast<Eigen::Index>(i)) = rhs_radius(bm(i, i), cfg);
  }
  return comparison_matrix(bm, mode, params, diagonal, cfg);
}

ComparisonMatrix comparison_matrix(const BlockOperatorMatrix& bm, ComparisonMode mode,
                                   const ComparisonParams& params,
                                   const Eigen::VectorXd& diagonal,
                                   const EuclideanRadiusConfig& cfg) {
  check_params(mode, params);
  const std::size_t n = bm.n();
  if (diagonal.size() != static_cast<Eigen::Index>(n)) {
    throw DimensionError("comparison_matrix: diagonal has the wrong length");
  }
  ComparisonMatrix cm;
  cm.mode = mode;
  cm.params = params;
  cm.entries = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    cm.entries(ii, ii) = diagonal(ii);
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const OperatorTuple p = fg_mix(bm(j, i), bm(i, j), params);
      const OperatorTuple q = fg_mix(bm(i, j), bm(j, i), params);
      const double v = uses_norm(mode) ? std::sqrt(tuple_op_norm(p) * tuple_op_norm(q))
                                       : std::sqrt(rhs_radius(p, cfg) * rhs_radius(q, cfg));
      if (is_symmetric_mode(mode)) {
        cm.entries(ii, jj) = 0.5 * v;
        cm.entries(jj, ii) = 0.5 * v;
      } else {
        cm.entries(ii, jj) = v;
      }
    }
  }
  return cm;
}

double nonneg_numrad(const Eigen::MatrixXd& b) {
  if (b.rows() == 0 || b.rows() != b.cols()) throw DimensionError("nonneg_numrad needs a square matrix");
  if ((b.array() < 0.0).any() || !b.allFinite()) {
    throw PreconditionError("nonneg_numrad needs finite entrywise nonnegative input");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es((b + b.transpose()) * 0.5, Eigen::EigenvaluesOnly);
  return std::max(es.eigenvalues()(b.rows() - 1), 0.0);
}

double nonneg_numrad(const ComparisonMatrix& cm) { return nonneg_numrad(cm.entries); }

ComparisonMatrix symmetrized(const ComparisonMatrix& cm) {
  ComparisonMatrix out = cm;
  switch (cm.mode) {
    case ComparisonMode::COR1_ALPHA:
      out.mode = ComparisonMode::COR4_SYM;
      break;
    case ComparisonMode::COR3_ALPHA_NORM:
      out.mode = ComparisonMode::COR5_SYM_NORM;
      break;
    default:
      throw ConfigError("symmetrized: only COR1_ALPHA and COR3_ALPHA_NORM have symmetric forms");
  }
  const Eigen::VectorXd diag = cm.entries.diagonal();
  out.entries = (cm.entries + cm.entries.transpose()) * 0.5;
  out.entries.diagonal() = diag;
  return out;
}

BoundReport block_radius_bound(const BlockOperatorMatrix& bm, ComparisonMode mode,
                               const ComparisonParams& params, const EuclideanRadiusConfig& cfg) {
  return comparison_report(comparison_matrix(bm, mode, params, cfg), bm.d());
}

BoundReport comparison_report(const ComparisonMatrix& cm, std::size_t d) {
  BoundReport r;
  r.id = bound_id(cm.mode);
  r.formula = "w_e([A_ij]) <= w([a_ij])";
  r.params["d"] = static_cast<double>(d);
  r.params["n"] = static_cast<double>(cm.entries.rows());
  if (cm.params.alpha) r.params["alpha"] = *cm.params.alpha;
  if (cm.params.fg) r.function_pair = cm.params.fg->label();
  for (Eigen::Index i = 0; i < cm.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < cm.entries.cols(); ++j) {
      r.components["a_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = cm.entries(i, j);
    }
  }
  r.value = nonneg_numrad(cm);
  return r;
}

std::array<BoundReport, 2> two_by_two_bounds(const OperatorTuple& a, const OperatorTuple& b,
                                             const OperatorTuple& c, const OperatorTuple& d,
                                             const EuclideanRadiusConfig& cfg) {
  require_same_shape(a, b, "two_by_two_bounds");
  require_same_shape(a, c, "two_by_two_bounds");
  require_same_shape(a, d, "two_by_two_bounds");
  const double we_a = rhs_radius(a, cfg);
  const double we_d = rhs_radius(d, cfg);
  const OperatorTuple p = abs_pow(b, 1.0) + abs_adjoint_pow(c, 1.0);
  const OperatorTuple q = abs_pow(c, 1.0) + abs_adjoint_pow(b, 1.0);
  const double beta = std::sqrt(rhs_radius(p, cfg) * rhs_radius(q, cfg));
  const double gamma = std::sqrt(tuple_op_norm(p) * tuple_op_norm(q));
  auto closed_form = [&](double off) {
    return 0.5 * (we_a + we_d + std::sqrt((we_a - we_d) * (we_a - we_d) + off * off));
  };

  std::array<BoundReport, 2> out;
  out[0].id = BoundId::COR6;
  out[0].formula =
      "w_e([[A, B], [C, D]]) <= (w_e(A) + w_e(D) + sqrt((w_e(A) - w_e(D))^2 + beta^2)) / 2, "
      "beta^2 = w_e(|B| + |C*|) w_e(|C| + |B*|)";
  out[0].components["beta"] = beta;
  out[0].value = closed_form(beta);
  out[1].id = BoundId::COR7;
  out[1].formula =
      "w_e([[A, B], [C, D]]) <= (w_e(A) + w_e(D) + sqrt((w_e(A) - w_e(D))^2 + gamma^2)) / 2, "
      "gamma^2 = || |B| + |C*| || || |C| + |B*| ||";
  out[1].components["gamma"] = gamma;
  out[1].value = closed_form(gamma);
  for (auto& r : out) {
    r.params["d"] = static_cast<double>(a.d());
    r.components["we_A"] = we_a;
    r.components["we_D"] = we_d;
  }
  return out;
}

std::vector<double> default_alpha_grid() { return {0.0, 0.25, 0.5, 0.75, 1.0}; }

}  // namespace eorad
