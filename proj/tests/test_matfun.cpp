#include <gtest/gtest.h>

#include <cmath>

#include "eorad/errors.hpp"
#include "eorad/generators.hpp"
#include "eorad/matfun.hpp"
#include "fixtures.hpp"

using namespace eorad;
using namespace eorad::testing;

namespace {

constexpr double kTol = 1e-12;

TEST(AbsPow, NilpotentT1) { EXPECT_LT(max_abs_diff(abs_pow(J(), 1.0), diag(0, 1)), kTol); }

TEST(AbsPow, IdentityAnyT) {
  for (int n : {1, 3, 5}) {
    const CMatrix id = CMatrix::Identity(n, n);
    EXPECT_LT(max_abs_diff(abs_pow(id, 0.37), id), kTol);
  }
}

TEST(AbsPow, ZeroExponentIsIdentity) { EXPECT_LT(max_abs_diff(abs_pow(J(), 0.0), I2()), kTol); }

TEST(AbsPow, ZeroMatrixZeroExponent) {
  EXPECT_LT(max_abs_diff(abs_pow(CMatrix::Zero(3, 3), 0.0), CMatrix::Identity(3, 3)), kTol);
}

TEST(AbsPow, RejectsNegativeExponent) { EXPECT_THROW(abs_pow(J(), -0.5), DomainError); }

TEST(AbsPow, RejectsNonSquare) { EXPECT_THROW(abs_pow(CMatrix::Zero(2, 3), 1.0), DimensionError); }

TEST(AbsPow, RejectsNonFinite) {
  CMatrix m = I2();
  m(0, 1) = std::nan("");
  EXPECT_THROW(abs_pow(m, 1.0), DomainError);
}

TEST(AbsAdjointPow, NilpotentT1) { EXPECT_LT(max_abs_diff(abs_adjoint_pow(J(), 1.0), diag(1, 0)), kTol); }

TEST(AbsAdjointPow, ScaledIdentitySquared) {
  EXPECT_LT(max_abs_diff(abs_adjoint_pow(2.0 * I2(), 2.0), 4.0 * I2()), kTol);
}

TEST(AbsAdjointPow, EqualsAbsPowForPsd) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const CMatrix p = random_psd(4, 1.0, rng);
    for (double t : {0.0, 0.3, 1.0, 1.7}) {
      EXPECT_LT(max_abs_diff(abs_adjoint_pow(p, t), abs_pow(p, t)), 1e-10);
    }
  }
}

TEST(PolarUnitary, Nilpotent) { EXPECT_LT(max_abs_diff(polar_unitary(J()), mat2(0, 1, 1, 0)), kTol); }

TEST(PolarUnitary, UnitaryIsItself) {
  Rng rng(9);
  const CMatrix u = haar_unitary(4, rng);
  EXPECT_LT(max_abs_diff(polar_unitary(u), u), 1e-10);
}

TEST(PolarUnitary, RealDiagonalSign) { EXPECT_LT(max_abs_diff(polar_unitary(diag(3, -5)), diag(1, -1)), kTol); }

TEST(PolarUnitary, ReconstructionAndConjugation) {
  const CMatrix u = polar_unitary(J());
  EXPECT_LT(max_abs_diff(u * abs_pow(J(), 1.0), J()), kTol);
  EXPECT_LT(max_abs_diff(u * abs_pow(J(), 1.0) * u.adjoint(), abs_adjoint_pow(J(), 1.0)), kTol);
}

TEST(SpectralApply, Examples) {
  auto sq = [](double x) { return std::sqrt(x); };
  EXPECT_LT(max_abs_diff(spectral_apply(diag(0, 1), sq), diag(0, 1)), kTol);
  EXPECT_LT(max_abs_diff(spectral_apply(diag(4, 9), sq), diag(2, 3)), kTol);
  EXPECT_LT(max_abs_diff(spectral_apply(mat2(2, 1, 1, 2), [](double x) { return x * x; }), mat2(5, 4, 4, 5)),
            1e-12);
}

TEST(SpectralApply, RejectsNonHermitian) {
  EXPECT_THROW(spectral_apply(J(), [](double x) { return x; }), PreconditionError);
}

TEST(PsdApply, ClampsTinyNegativeAndRejectsLarge) {
  const CMatrix tiny = diag(1.0, -1e-14);
  EXPECT_NO_THROW(psd_apply(tiny, [](double x) { return std::sqrt(x); }));
  EXPECT_THROW(psd_apply(diag(1.0, -0.1), [](double x) { return std::sqrt(x); }), PreconditionError);
}

TEST(Scalars, OpNormAndSpectralRadius) {
  EXPECT_NEAR(op_norm(J()), 1.0, kTol);
  EXPECT_NEAR(spectral_radius_mat(J()), 0.0, kTol);
  EXPECT_NEAR(op_norm(I2()), 1.0, kTol);
  EXPECT_NEAR(spectral_radius_mat(I2()), 1.0, kTol);
  EXPECT_NEAR(op_norm(diag(1, -3)), 3.0, kTol);
  EXPECT_NEAR(spectral_radius_mat(diag(1, -3)), 3.0, kTol);
}

TEST(FunctionPair, IdentityHolds) {
  for (const auto& fg : {SpectralFunctionPair::sqrt_pair(), SpectralFunctionPair::mixed_pair(),
                         SpectralFunctionPair::power_pair(0.0), SpectralFunctionPair::power_pair(1.0),
                         SpectralFunctionPair::power_pair(0.3)}) {
    for (double x : {0.0, 0.5, 2.0, 100.0}) EXPECT_NEAR(fg.f(x) * fg.g(x), x, 1e-12 * std::max(1.0, x));
  }
}

TEST(FunctionPair, RejectsBadPair) {
  EXPECT_THROW(SpectralFunctionPair([](double x) { return x; }, [](double x) { return x; }, "bad"),
               ConfigError);
  EXPECT_THROW(SpectralFunctionPair::power_pair(1.5), DomainError);
}

TEST(FunctionPair, FromLabel) {
  EXPECT_EQ(SpectralFunctionPair::from_label("sqrt").label(), "sqrt");
  EXPECT_EQ(SpectralFunctionPair::from_label("mixed").label(), "mixed");
  EXPECT_NEAR(SpectralFunctionPair::from_label("power:0.25").f(16.0), 2.0, 1e-12);
  EXPECT_THROW(SpectralFunctionPair::from_label("cube"), ConfigError);
}

// U|M| = M and U|M|^s U* = |M*|^s over Ginibre matrices, some rank deficient.
TEST(MatfunProperty, PolarIdentities) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + trial % 5;
    const int rank = trial % 3 == 0 ? trial % dim : 0;
    const CMatrix m = rank > 0 ? low_rank_ginibre(dim, rank, 1.0, rng) : ginibre(dim, 1.0, rng);
    const CMatrix u = polar_unitary(m);
    EXPECT_LT(max_abs_diff(u * u.adjoint(), CMatrix::Identity(dim, dim)), 1e-10);
    EXPECT_LT(max_abs_diff(u * abs_pow(m, 1.0), m), 1e-9);
    for (double s : {0.5, 1.0, 2.0}) {
      EXPECT_LT(max_abs_diff(u * abs_pow(m, s) * u.adjoint(), abs_adjoint_pow(m, s)), 1e-9);
    }
  }
}

TEST(MatfunProperty, PowerSemigroup) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const CMatrix m = ginibre(4, 1.0, rng);
    EXPECT_LT(max_abs_diff(abs_pow(m, 0.3) * abs_pow(m, 0.7), abs_pow(m, 1.0)), 1e-9);
    EXPECT_LT(max_abs_diff(abs_pow(m, 2.0), m.adjoint() * m), 1e-9);
  }
}

}  // namespace
