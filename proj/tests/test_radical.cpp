#include <gtest/gtest.h>

#include "ginv/radical.hpp"
#include "ginv/sampling.hpp"
#include "support.hpp"

using namespace ginv;
using namespace ginv::test;

namespace {
const DMatrix kP = DMatrix::diagonal({DualGaussian(1), DualGaussian(0)});  // diag(1,0)
}

TEST(Radical, Membership) {
  EXPECT_TRUE(radical_check(eps_unit(2, 1, 1)));
  EXPECT_FALSE(radical_check(DMatrix::unit(2, 2, 0, 1)));
  EXPECT_TRUE(radical_check(DMatrix(2, 2)));
}

TEST(Radical, EpsilonCriterion) {
  DMatrix a_inv = *dual_ring_inverse(kP, RadicalVariant::core);
  EXPECT_EQ(a_inv, kP);
  EXPECT_EQ(epsilon_criterion(kP, a_inv, eps_unit(2, 1, 1)), eps_unit(2, 1, 1));
  EXPECT_TRUE(epsilon_criterion(kP, a_inv, eps_unit(2, 0, 1)).is_zero());
  EXPECT_THROW(epsilon_criterion(kP, a_inv, DMatrix::unit(2, 2, 0, 1)), PreconditionViolated);
  EXPECT_THROW(epsilon_criterion(kP, DMatrix::identity(2), eps_unit(2, 0, 1)), PreconditionViolated);
}

TEST(Radical, CoreExamples) {
  auto pos = make_radical_perturbation(kP, eps_unit(2, 0, 1), RadicalVariant::core);
  EXPECT_TRUE(pos.left.is_zero());
  EXPECT_TRUE(pos.right.is_zero());
  auto r = perturbed_core_inverse(pos);
  ASSERT_TRUE(r.epsilon_is_zero);
  EXPECT_EQ(*r.inverse, kP);
  EXPECT_TRUE(verify(InverseKind::core, dm({{"1", "(1)e"}, {"0", "0"}}), *r.inverse).valid);

  auto neg = perturbed_core_inverse(make_radical_perturbation(kP, eps_unit(2, 1, 1), RadicalVariant::core));
  EXPECT_FALSE(neg.epsilon_is_zero);
  EXPECT_FALSE(neg.inverse);
  EXPECT_TRUE(neg.oracle_confirms_nonexistence);
  EXPECT_FALSE(oracle_core(DMatrix(kP + eps_unit(2, 1, 1))));

  EXPECT_THROW(perturbed_dual_core_inverse(pos), PreconditionViolated);
  EXPECT_THROW(make_radical_perturbation(DMatrix(dm({{"0", "1"}, {"0", "0"}})), eps_unit(2, 0, 0), RadicalVariant::core),
               PreconditionViolated);
}

TEST(Radical, DualCoreExamples) {
  auto p = make_radical_perturbation(kP, eps_unit(2, 1, 0), RadicalVariant::dual_core);
  auto r = perturbed_dual_core_inverse(p);
  ASSERT_TRUE(r.epsilon_is_zero);
  // Mirror through the adjoint: (a + j)_⊕ = ((a* + j*)^⊕)*.
  auto mirror = perturbed_core_inverse(make_radical_perturbation(adjoint(kP), adjoint(eps_unit(2, 1, 0)), RadicalVariant::core));
  EXPECT_EQ(*r.inverse, adjoint(*mirror.inverse));

  auto neg = perturbed_dual_core_inverse(make_radical_perturbation(kP, eps_unit(2, 1, 1), RadicalVariant::dual_core));
  EXPECT_FALSE(neg.inverse);
  EXPECT_FALSE(oracle_dual_core(DMatrix(kP + eps_unit(2, 1, 1))));
}

TEST(Radical, ProjectionConstruction) {
  auto p = make_radical_perturbation(kP, eps_unit(2, 0, 1), RadicalVariant::core);
  auto w = projection_construction(p);
  EXPECT_EQ(w.q, DMatrix::diagonal({DualGaussian(0), DualGaussian(1)}));
  EXPECT_TRUE(try_invert(w.u));

  DMatrix a = dm({{"1", "1"}, {"0", "0"}});
  auto p2 = make_radical_perturbation(a, eps_unit(2, 0, 0), RadicalVariant::core);
  ASSERT_TRUE(p2.epsilon.is_zero());
  auto w2 = projection_construction(p2);
  EXPECT_TRUE((w2.q * DMatrix(a + eps_unit(2, 0, 0))).is_zero());

  auto neg = make_radical_perturbation(kP, eps_unit(2, 1, 1), RadicalVariant::core);
  EXPECT_THROW(projection_construction(neg), PreconditionViolated);
}

TEST(RadicalProperties, CriterionMatchesOracle) {
  Sampler g(83);
  int zero = 0, nonzero = 0;
  for (int k = 0; k < 120; ++k) {
    std::size_t n = g.uniform(1, 3);
    const bool force = g.chance(50);
    GMatrix a0 = sample_core_invertible(g, n, g.uniform(0, n)).phi;
    GMatrix a0_inv = *core_inverse(a0);
    GMatrix j1 = force ? GMatrix(a0 * a0_inv * g.matrix(n, n) + g.matrix(n, n) * a0_inv * a0) : g.matrix(n, n);
    DMatrix a = lift(a0), j = make_dual(GMatrix(n, n), j1);
    auto p = make_radical_perturbation(a, j, RadicalVariant::core);
    ASSERT_TRUE(radical_check(p.epsilon));
    auto r = perturbed_inverse(p);
    auto oracle = oracle_core(DMatrix(a + j));
    ASSERT_EQ(r.epsilon_is_zero, oracle.has_value());
    if (r.epsilon_is_zero) {
      ++zero;
      ASSERT_EQ(*r.inverse, *oracle);
      ASSERT_EQ(*core_via_projection(DMatrix(a + j), projection_construction(p).q), *r.inverse);
    } else {
      ++nonzero;
    }
  }
  EXPECT_GT(zero, 10);
  EXPECT_GT(nonzero, 10);
}
