#pragma once

// Seeded random instance generators. Output is a pure function of the spec
// (including its seed); nothing reads global state or wall-clock entropy.

#include <cstdint>
#include <random>
#include <variant>

#include "eorad/blockmat.hpp"
#include "eorad/matfun.hpp"
#include "eorad/operator_tuple.hpp"

namespace eorad {

using Rng = std::mt19937_64;

enum class GeneratorKind {
  GINIBRE,
  HERMITIAN,
  PSD,
  UNITARY_HAAR,
  COMMUTING_PAIR,
  POSITIVE_BLOCK,
  TUPLE,
  BLOCK_MATRIX,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::GINIBRE;
  int dim = 2;
  int d = 1;
  int n = 1;
  double scale = 1.0;
  std::uint64_t seed = 0;
  /// When > 0 and < dim, GINIBRE/TUPLE/BLOCK_MATRIX entries have this rank.
  int rank = 0;
};

/// B and C with C_k = p_k(|B_k|) for real cubic polynomials p_k, so
/// |B_k| C_k = C_k* |B_k| holds by construction.
struct CommutingPair {
  OperatorTuple b;
  OperatorTuple c;
};

/// A = X X*, B = Y* Y, C = Y* X*: the block [[A, C*], [C, B]] equals
/// [X; Y*] [X*, Y] and is positive.
struct PositiveBlock {
  OperatorTuple a;
  OperatorTuple b;
  OperatorTuple c;
};

using Generated = std::variant<CMatrix, OperatorTuple, CommutingPair, PositiveBlock, BlockOperatorMatrix>;

/// Throws ConfigError on dims < 1, d < 1, n < 1 or scale <= 0.
void validate(const GeneratorSpec& spec);

Generated generate(const GeneratorSpec& spec);

// Building blocks, all drawing from a caller-owned engine.
CMatrix ginibre(int dim, double scale, Rng& rng);
CMatrix low_rank_ginibre(int dim, int rank, double scale, Rng& rng);
CMatrix random_hermitian(int dim, double scale, Rng& rng);
CMatrix random_psd(int dim, double scale, Rng& rng);
CMatrix haar_unitary(int dim, Rng& rng);
CVector random_unit_vector(int dim, Rng& rng);
OperatorTuple random_tuple(int d, int dim, double scale, Rng& rng, int rank = 0);
CommutingPair random_commuting_pair(int d, int dim, double scale, Rng& rng);
PositiveBlock random_positive_block(int d, int dim, double scale, Rng& rng);
BlockOperatorMatrix random_block_matrix(int n, int d, int dim, double scale, Rng& rng, int rank = 0);

}  // namespace eorad
