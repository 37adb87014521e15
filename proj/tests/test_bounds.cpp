#include <gtest/gtest.h>

#include <cmath>

#include "eorad/bounds.hpp"
#include "eorad/errors.hpp"
#include "eorad/generators.hpp"
#include "fixtures.hpp"

using namespace eorad;
using namespace eorad::testing;

namespace {

const double kRt2 = std::sqrt(2.0);

TEST(BoundIds, RoundTrip) {
  for (BoundId id : all_bound_ids()) {
    const auto back = bound_id_from_string(to_string(id));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, id);
  }
  EXPECT_FALSE(bound_id_from_string("NOPE").has_value());
}

TEST(Sandwich, Examples) {
  const auto id = sandwich(OperatorTuple{I2()});
  EXPECT_NEAR(id.lower, 0.5, 1e-12);
  EXPECT_NEAR(id.upper, 1.0, 1e-12);
  const auto p = sandwich(pauli());
  EXPECT_NEAR(p.lower, 0.5, 1e-12);
  EXPECT_NEAR(p.upper, std::sqrt(3.0), 1e-12);
  const auto z = sandwich(OperatorTuple::zeros(3, 2));
  EXPECT_EQ(z.lower, 0.0);
  EXPECT_EQ(z.upper, 0.0);
}

TEST(Th1, IdentityBlockIsEquality) {
  const OperatorTuple i{I2()};
  for (const auto& r : block_dominance_bounds(i, i, i)) EXPECT_NEAR(r.value, 1.0, 1e-9) << to_string(r.id);
}

TEST(Th1, ScaledIdentity) {
  const OperatorTuple t{2.0 * I2()};
  EXPECT_NEAR(block_dominance_bounds(t, t, t)[0].value, 2.0, 1e-9);
}

TEST(Th1, RejectsNonPositiveBlock) {
  const OperatorTuple i{I2()};
  EXPECT_THROW(block_dominance_bounds(i, i, OperatorTuple{3.0 * I2()}), PreconditionError);
  EXPECT_THROW(check_positive_block(OperatorTuple{-1.0 * I2()}, i, OperatorTuple::zeros(1, 2)),
               PreconditionError);
}

TEST(Cor11, Examples) {
  const OperatorTuple i{I2()};
  for (const auto& r : product_bounds(i, i)) EXPECT_NEAR(r.value, 1.0, 1e-9) << to_string(r.id);
  const OperatorTuple j{J()};
  EXPECT_NEAR(product_bounds(j, j)[0].value, std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(product_bounds(OperatorTuple{2.0 * I2()}, OperatorTuple{3.0 * I2()})[0].value, std::sqrt(48.5),
              1e-9);
}

TEST(PolarPower, Examples) {
  const OperatorTuple j{J()};
  EXPECT_NEAR(polar_power_bounds(j, 0.5)[0].value, std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(polar_power_bounds(j, 1.0)[0].value, 1.0, 1e-9);
  for (int d : {1, 2, 3}) {
    const auto reps = polar_power_bounds(OperatorTuple::identities(static_cast<std::size_t>(d), 2), 0.5);
    EXPECT_NEAR(reps[0].value, std::sqrt(static_cast<double>(d)), 1e-9);
  }
  EXPECT_THROW(polar_power_bounds(j, 1.5), DomainError);
  EXPECT_THROW(polar_power_bounds(j, -0.1), DomainError);
}

TEST(Th9, Examples) {
  const auto fg = SpectralFunctionPair::sqrt_pair();
  const auto reps = commuting_fg_bound(OperatorTuple{J()}, OperatorTuple{diag(0, 1)}, fg);
  EXPECT_NEAR(reps[0].value, std::sqrt(0.5), 1e-6);
  const OperatorTuple i{I2()};
  EXPECT_NEAR(commuting_fg_bound(i, i, fg)[0].value, 1.0, 1e-6);
  const auto zero = commuting_fg_bound(OperatorTuple::zeros(1, 2), OperatorTuple{mat2(1, 2, 2, -1)}, fg);
  EXPECT_NEAR(zero[0].value, 0.0, 1e-12);
  EXPECT_NEAR(zero[1].value, 0.0, 1e-12);
}

TEST(Th9, RejectsNonCommuting) {
  EXPECT_THROW(commuting_fg_bound(OperatorTuple{J()}, OperatorTuple{mat2(0, 1, 1, 0)},
                                  SpectralFunctionPair::sqrt_pair()),
               PreconditionError);
}

TEST(Remark, Examples) {
  EXPECT_NEAR(remark_bound(OperatorTuple{J()}, 0.5, 0.5)[2].value, std::sqrt(0.5), 1e-9);
  for (double a : {0.0, 0.3, 1.0}) {
    for (double t : {0.0, 0.5, 1.0}) {
      for (const auto& r : remark_bound(OperatorTuple{I2()}, a, t)) EXPECT_NEAR(r.value, 1.0, 1e-9);
    }
  }
  EXPECT_NEAR(remark_bound(OperatorTuple{2.0 * J()}, 0.5, 0.5)[2].value, kRt2, 1e-9);
}

TEST(Th7, Examples) {
  const OperatorTuple i{I2()};
  EXPECT_NEAR(imaginary_combo_product_bound(i, i).value, 1.0, 1e-6);
  const OperatorTuple j{J()};
  EXPECT_NEAR(imaginary_combo_product_bound(j, j).value, std::sqrt(0.5), 1e-6);
}

TEST(Th8, Examples) {
  const auto j = imaginary_combo_bound(OperatorTuple{J()}, 0.5);
  EXPECT_NEAR(j[0].value, std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(j[1].value, std::sqrt(0.5), 1e-9);
  for (const auto& r : imaginary_combo_bound(OperatorTuple{I2()}, 0.5)) EXPECT_NEAR(r.value, 1.0, 1e-6);
}

TEST(Th15, Examples) {
  const OperatorTuple i{I2()};
  EXPECT_NEAR(product_quarter_bound(i, i).value, 1.0, 1e-6);
  const OperatorTuple j{J()};
  EXPECT_NEAR(product_quarter_bound(j, j).value, 0.25, 1e-6);
  const OperatorTuple ii = OperatorTuple::identities(2, 2);
  EXPECT_NEAR(product_quarter_bound(ii, ii).value, 2.0 * kRt2, 1e-6);
}

TEST(Theo1, Examples) {
  EXPECT_NEAR(quarter_polar_bound(OperatorTuple{I2()}, 0.5).value, 1.0, 1e-6);
  EXPECT_NEAR(quarter_polar_bound(OperatorTuple{J()}, 0.5).value, 0.5, 1e-6);
  EXPECT_NEAR(quarter_polar_bound(OperatorTuple{2.0 * I2()}, 0.5).value, 2.0, 1e-6);
}

TEST(Abstract, Nilpotent) { EXPECT_NEAR(abstract_bound(OperatorTuple{J()}).value, std::sqrt(0.5), 1e-12); }

TEST(Power, IdentityTuple) {
  const auto r = power_bound(OperatorTuple::identities(2, 3), 3);
  EXPECT_NEAR(r.value, std::sqrt(2.0) * std::pow(std::sqrt(2.0), 3), 1e-6);
  EXPECT_THROW(power_bound(OperatorTuple{I2()}, 0), DomainError);
}

TEST(Reports, SelfConsistentOnRandomInstances) {
  Rng rng(101);
  const auto fg = SpectralFunctionPair::mixed_pair();
  EuclideanRadiusConfig cfg;
  cfg.restarts = 4;
  for (int i = 0; i < 5; ++i) {
    const OperatorTuple a = random_tuple(2, 3, 1.0, rng);
    const OperatorTuple b = random_tuple(2, 3, 1.0, rng);
    std::vector<BoundReport> all;
    for (const auto& r : sandwich_reports(a)) all.push_back(r);
    for (const auto& r : polar_power_bounds(a, 0.3, cfg)) all.push_back(r);
    for (const auto& r : fg_polar_bounds(a, 0.7, fg, cfg)) all.push_back(r);
    for (const auto& r : remark_bound(a, 0.25, 0.6, cfg)) all.push_back(r);
    for (const auto& r : product_bounds(a, b, cfg)) all.push_back(r);
    for (const auto& r : imaginary_combo_bound(a, 0.4, cfg)) all.push_back(r);
    all.push_back(abstract_bound(a));
    all.push_back(imaginary_combo_product_bound(a, b, cfg));
    all.push_back(product_quarter_bound(a, b, cfg));
    all.push_back(quarter_polar_bound(a, 0.2, cfg));
    all.push_back(power_bound(a, 2, cfg));
    const CommutingPair cp = random_commuting_pair(2, 3, 1.0, rng);
    for (const auto& r : commuting_fg_bound(cp.b, cp.c, fg, cfg)) all.push_back(r);
    const PositiveBlock pb = random_positive_block(2, 3, 1.0, rng);
    for (const auto& r : block_dominance_bounds(pb.a, pb.b, pb.c, cfg)) all.push_back(r);
    for (const auto& r : all) {
      EXPECT_TRUE(is_self_consistent(r)) << to_string(r.id);
      EXPECT_EQ(r.params.at("d"), 2.0) << to_string(r.id);
      EXPECT_FALSE(r.formula.empty());
    }
  }
}

// At t = alpha = 1/2 every bound is homogeneous: bound(sA) = s bound(A).
TEST(Reports, ScaleCovariance) {
  Rng rng(103);
  EuclideanRadiusConfig cfg;
  for (int i = 0; i < 3; ++i) {
    const OperatorTuple a = random_tuple(2, 3, 1.0, rng);
    const OperatorTuple sa = cdouble(7.0) * a;
    auto close = [](double x, double y) { return std::abs(x - y) <= 1e-6 * std::max(1.0, std::abs(y)); };
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_TRUE(close(polar_power_bounds(sa, 0.5, cfg)[k].value, 7 * polar_power_bounds(a, 0.5, cfg)[k].value));
      EXPECT_TRUE(close(remark_bound(sa, 0.5, 0.5, cfg)[k].value, 7 * remark_bound(a, 0.5, 0.5, cfg)[k].value));
    }
    EXPECT_TRUE(close(abstract_bound(sa).value, 7 * abstract_bound(a).value));
    EXPECT_TRUE(close(quarter_polar_bound(sa, 0.5, cfg).value, 7 * quarter_polar_bound(a, 0.5, cfg).value));
  }
}

TEST(Reports, ChainsOrdered) {
  Rng rng(107);
  const auto fg = SpectralFunctionPair::power_pair(0.3);
  for (int i = 0; i < 10; ++i) {
    const OperatorTuple a = random_tuple(1 + i % 3, 3, 1.0, rng);
    const auto th10 = fg_polar_bounds(a, 0.4, fg);
    EXPECT_LE(th10[0].value, th10[1].value * (1 + 1e-9));
    EXPECT_LE(th10[1].value, th10[2].value * (1 + 1e-9));
    const auto th8 = imaginary_combo_bound(a, 0.6);
    EXPECT_LE(th8[0].value, th8[1].value * (1 + 1e-9));
  }
}

}  // namespace
