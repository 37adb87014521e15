#include "eorad/generators.hpp"

#include <sstream>

#include "eorad/errors.hpp"

namespace eorad {
namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace

void validate(const GeneratorSpec& spec) {
  if (spec.dim < 1 || spec.d < 1 || spec.n < 1) {
    std::ostringstream os;
    os << "generator spec needs dim, d, n >= 1 (got dim=" << spec.dim << ", d=" << spec.d
       << ", n=" << spec.n << ")";
    throw ConfigError(os.str());
  }
  if (!(spec.scale > 0.0)) throw ConfigError("generator spec needs scale > 0");
  if (spec.rank < 0) throw ConfigError("generator spec needs rank >= 0");
}

CMatrix ginibre(int dim, double scale, Rng& rng) {
  // Entries with E|z|^2 = 1.
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = cdouble(normal(rng), normal(rng));
  }
  return scale * m;
}

CMatrix low_rank_ginibre(int dim, int rank, double scale, Rng& rng) {
  if (rank <= 0 || rank >= dim) return ginibre(dim, scale, rng);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  CMatrix x(dim, rank);
  CMatrix y(rank, dim);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < dim; ++i) x(i, j) = cdouble(normal(rng), normal(rng));
  }
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < rank; ++i) y(i, j) = cdouble(normal(rng), normal(rng));
  }
  return (scale / std::sqrt(static_cast<double>(rank))) * (x * y);
}

CMatrix random_hermitian(int dim, double scale, Rng& rng) {
  return hermitian_part(ginibre(dim, scale, rng));
}

CMatrix random_psd(int dim, double scale, Rng& rng) {
  const CMatrix g = ginibre(dim, 1.0, rng);
  // Clamp away round-off so min eigenvalue >= 0 holds exactly.
  return project_psd(scale * g * g.adjoint() / static_cast<double>(dim));
}

CMatrix haar_unitary(int dim, Rng& rng) {
  // QR of a Ginibre matrix with the phases of R's diagonal divided out.
  const CMatrix g = ginibre(dim, 1.0, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const double a = std::abs(r(i, i));
    if (a > 0.0) q.col(i) *= r(i, i) / a;
  }
  return q;
}

CVector random_unit_vector(int dim, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector x(dim);
  for (int i = 0; i < dim; ++i) x(i) = cdouble(normal(rng), normal(rng));
  return x.normalized();
}

OperatorTuple random_tuple(int d, int dim, double scale, Rng& rng, int rank) {
  std::vector<CMatrix> v;
  v.reserve(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) v.push_back(low_rank_ginibre(dim, rank, scale, rng));
  return OperatorTuple(std::move(v));
}

CommutingPair random_commuting_pair(int d, int dim, double scale, Rng& rng) {
  std::vector<CMatrix> bs;
  std::vector<CMatrix> cs;
  for (int k = 0; k < d; ++k) {
    CMatrix b = ginibre(dim, scale, rng);
    const CMatrix abs_b = abs_pow(b, 1.0);
    const int degree = std::uniform_int_distribution<int>(0, 3)(rng);
    // Work with |B| / ||B|| so the polynomial stays O(1) at any scale.
    const double nb = std::max(op_norm(abs_b), 1e-300);
    const CMatrix x = abs_b / nb;
    CMatrix c = CMatrix::Zero(dim, dim);
    CMatrix pw = CMatrix::Identity(dim, dim);
    for (int p = 0; p <= degree; ++p) {
      c += uniform(rng, -1.0, 1.0) * pw;
      pw = pw * x;
    }
    bs.push_back(std::move(b));
    cs.push_back(hermitian_part(c));
  }
  return {OperatorTuple(std::move(bs)), OperatorTuple(std::move(cs))};
}

PositiveBlock random_positive_block(int d, int dim, double scale, Rng& rng) {
  std::vector<CMatrix> as;
  std::vector<CMatrix> bs;
  std::vector<CMatrix> cs;
  const double s = std::sqrt(scale);
  for (int k = 0; k < d; ++k) {
    const CMatrix x = ginibre(dim, s, rng);
    const CMatrix y = ginibre(dim, s, rng);
    as.push_back(hermitian_part(x * x.adjoint()));
    bs.push_back(hermitian_part(y.adjoint() * y));
    cs.push_back(y.adjoint() * x.adjoint());
  }
  return {OperatorTuple(std::move(as)), OperatorTuple(std::move(bs)), OperatorTuple(std::move(cs))};
}

BlockOperatorMatrix random_block_matrix(int n, int d, int dim, double scale, Rng& rng, int rank) {
  std::vector<OperatorTuple> blocks;
  blocks.reserve(static_cast<std::size_t>(n * n));
  for (int b = 0; b < n * n; ++b) blocks.push_back(random_tuple(d, dim, scale, rng, rank));
  return BlockOperatorMatrix(static_cast<std::size_t>(n), std::move(blocks));
}

Generated generate(const GeneratorSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::GINIBRE:
      return low_rank_ginibre(spec.dim, spec.rank, spec.scale, rng);
    case GeneratorKind::HERMITIAN:
      return random_hermitian(spec.dim, spec.scale, rng);
    case GeneratorKind::PSD:
      return random_psd(spec.dim, spec.scale, rng);
    case GeneratorKind::UNITARY_HAAR:
      return haar_unitary(spec.dim, rng);
    case GeneratorKind::COMMUTING_PAIR:
      return random_commuting_pair(spec.d, spec.dim, spec.scale, rng);
    case GeneratorKind::POSITIVE_BLOCK:
      return random_positive_block(spec.d, spec.dim, spec.scale, rng);
    case GeneratorKind::TUPLE:
      return random_tuple(spec.d, spec.dim, spec.scale, rng, spec.rank);
    case GeneratorKind::BLOCK_MATRIX:
      return random_block_matrix(spec.n, spec.d, spec.dim, spec.scale, rng, spec.rank);
  }
  throw ConfigError("unknown generator kind");
}

}  // namespace eorad
