#include <gtest/gtest.h>

#include "ginv/sampling.hpp"
#include "support.hpp"

using namespace ginv;
using namespace ginv::test;

TEST(Matrix, Products) {
  GMatrix a{{1, 1}, {0, 0}};
  EXPECT_EQ(GMatrix::identity(2) * a, a);
  EXPECT_EQ(a * GMatrix({{1, 0}, {0, 0}}), (GMatrix{{1, 0}, {0, 0}}));
  EXPECT_TRUE((e_unit(2, 0, 1) * e_unit(2, 0, 0)).is_zero());
  EXPECT_THROW(a * GMatrix(3, 1), DimensionMismatch);
  EXPECT_THROW(a + GMatrix(2, 3), DimensionMismatch);
}

TEST(Matrix, RaggedRowsRejected) {
  EXPECT_THROW((GMatrix{{1, 2}, {3}}), DimensionMismatch);
  EXPECT_THROW(GMatrix(2, 2, std::vector<GaussianRational>(3)), DimensionMismatch);
}

TEST(Matrix, Adjoint) {
  EXPECT_EQ(adjoint(GMatrix{{GaussianRational::i()}}), GMatrix{{-GaussianRational::i()}});
  EXPECT_EQ(adjoint(GMatrix::identity(3)), GMatrix::identity(3));
  EXPECT_EQ(adjoint(dm({{"1", "(1)e"}, {"0", "0"}})), dm({{"1", "0"}, {"(1)e", "0"}}));
  EXPECT_EQ(adjoint(gm({{"1", "2i", "3"}})), gm({{"1"}, {"-2i"}, {"3"}}));
}

TEST(Matrix, Invert) {
  EXPECT_EQ(invert(GMatrix{{1, 1}, {0, 1}}), (GMatrix{{1, -1}, {0, 1}}));
  EXPECT_THROW(invert(GMatrix{{1, 1}, {1, 1}}), NotInvertible);
  EXPECT_FALSE(try_invert(GMatrix{{1, 1}, {1, 1}}));
  EXPECT_THROW(invert(GMatrix(2, 3)), DimensionMismatch);
  DMatrix m = DMatrix::identity(2) + eps_unit(2, 0, 1);
  EXPECT_EQ(invert(m), DMatrix(DMatrix::identity(2) - eps_unit(2, 0, 1)));
  EXPECT_THROW(invert(DMatrix(eps_unit(2, 0, 0) + DMatrix::unit(2, 2, 1, 1))), NotInvertible);
}

TEST(Matrix, Rank) {
  EXPECT_EQ(rank(GMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(GMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(GMatrix{{1, 1}, {1, 1}}), 1u);
  EXPECT_THROW(rank(DMatrix::identity(2)), UnsupportedRing);
}

TEST(Matrix, FullRankFactorization) {
  auto check = [](const GMatrix& a, const GMatrix& f, const GMatrix& g) {
    auto r = full_rank_factorize(a);
    EXPECT_EQ(r.F * r.G, a);
    EXPECT_EQ(r.rank, rank(a));
    EXPECT_EQ(r.F, f);
    EXPECT_EQ(r.G, g);
  };
  check(GMatrix{{1, 1}, {0, 0}}, GMatrix{{1}, {0}}, GMatrix{{1, 1}});
  check(GMatrix{{1, 1}, {1, 1}}, GMatrix{{1}, {1}}, GMatrix{{1, 1}});
  auto id = full_rank_factorize(GMatrix::identity(2));
  EXPECT_EQ(id.F * id.G, GMatrix::identity(2));
  EXPECT_THROW(full_rank_factorize(GMatrix(2, 2)), ZeroMatrix);
}

TEST(Matrix, SolveLinear) {
  GMatrix m{{1, 2}, {3, 4}};
  auto id = solve_linear(GMatrix::identity(2), m, Side::right);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id.solution, m);

  GMatrix a{{1, 1}, {0, 0}};
  auto r = solve_linear(GMatrix(a * a), a, Side::right);
  ASSERT_TRUE(r);
  EXPECT_EQ(a * a * *r.solution, a);

  // diag(1,0) X = diag(1,ε): the second row demands 0 = ε.
  DMatrix d = DMatrix::diagonal({DualGaussian(1), DualGaussian(0)});
  DMatrix rhs = DMatrix::diagonal({DualGaussian(1), DualGaussian::eps()});
  auto bad = solve_linear(d, rhs, Side::right);
  ASSERT_FALSE(bad);
  ASSERT_TRUE(bad.inconsistency);
  const DMatrix& y = bad.inconsistency->combination;
  EXPECT_TRUE((y * d).is_zero());
  EXPECT_FALSE((y * rhs).is_zero());

  auto left = solve_linear(GMatrix{{0, 0}, {0, 1}}, GMatrix{{1, 0}, {0, 0}}, Side::left);
  ASSERT_FALSE(left);
  const GMatrix& z = left.inconsistency->combination;
  EXPECT_TRUE((GMatrix{{0, 0}, {0, 1}} * z).is_zero());
  EXPECT_FALSE((GMatrix{{1, 0}, {0, 0}} * z).is_zero());
}

TEST(MatrixProperties, AdjointReversesProducts) {
  Sampler g(99);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = g.uniform(1, 4), m = g.uniform(1, 4), p = g.uniform(1, 4);
    GMatrix a = g.matrix(n, m), b = g.matrix(m, p);
    ASSERT_EQ(adjoint(GMatrix(a * b)), adjoint(b) * adjoint(a));
    DMatrix da = make_dual(a, g.matrix(n, m)), db = make_dual(b, g.matrix(m, p));
    ASSERT_EQ(adjoint(DMatrix(da * db)), adjoint(db) * adjoint(da));
  }
}

TEST(MatrixProperties, InvertSucceedsIffFullRank) {
  Sampler g(5);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = g.uniform(1, 4);
    GMatrix a = g.of_rank(n, n, g.uniform(0, n));
    auto inv = try_invert(a);
    ASSERT_EQ(inv.has_value(), rank(a) == n);
    if (inv) {
      ASSERT_EQ(a * *inv, GMatrix::identity(n));
      ASSERT_EQ(*inv * a, GMatrix::identity(n));
    }
    DMatrix d = make_dual(a, g.matrix(n, n));
    auto dinv = try_invert(d);
    ASSERT_EQ(dinv.has_value(), rank(a) == n);
    if (dinv) {
      ASSERT_EQ(d * *dinv, DMatrix::identity(n));
      ASSERT_EQ(*dinv * d, DMatrix::identity(n));
    }
  }
}

TEST(MatrixProperties, FactorizationReproducesInput) {
  Sampler g(11);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = g.uniform(1, 4), m = g.uniform(1, 4);
    GMatrix a = g.of_rank(n, m, g.uniform(1, std::min(n, m)));
    auto f = full_rank_factorize(a);
    ASSERT_EQ(f.F * f.G, a);
    ASSERT_EQ(rank(f.F), f.rank);
    ASSERT_EQ(rank(f.G), f.rank);
    ASSERT_EQ(f.rank, rank(a));
  }
}

TEST(MatrixProperties, SolveResidualOrWitness) {
  Sampler g(13);
  for (int k = 0; k < 300; ++k) {
    std::size_t n = g.uniform(1, 4), m = g.uniform(1, 4), c = g.uniform(1, 3);
    const Side side = g.chance(50) ? Side::right : Side::left;
    GMatrix a = g.of_rank(n, m, g.uniform(0, std::min(n, m)));
    GMatrix b = side == Side::right ? g.matrix(n, c) : g.matrix(c, m);
    if (g.chance(50)) b = side == Side::right ? GMatrix(a * g.matrix(m, c)) : GMatrix(g.matrix(c, n) * a);
    auto r = solve_linear(a, b, side);
    if (r) {
      ASSERT_EQ(side == Side::right ? a * *r.solution : *r.solution * a, b);
    } else {
      const GMatrix& y = r.inconsistency->combination;
      if (side == Side::right) {
        ASSERT_TRUE((y * a).is_zero());
        ASSERT_FALSE((y * b).is_zero());
      } else {
        ASSERT_TRUE((a * y).is_zero());
        ASSERT_FALSE((b * y).is_zero());
      }
    }

    DMatrix da = make_dual(a, g.matrix(n, m));
    DMatrix db = side == Side::right ? make_dual(g.matrix(n, c), g.matrix(n, c)) : make_dual(g.matrix(c, m), g.matrix(c, m));
    if (g.chance(50)) db = side == Side::right ? DMatrix(da * lift(g.matrix(m, c))) : DMatrix(lift(g.matrix(c, n)) * da);
    auto dr = solve_linear(da, db, side);
    if (dr) {
      ASSERT_EQ(side == Side::right ? da * *dr.solution : *dr.solution * da, db);
    } else {
      const DMatrix& y = dr.inconsistency->combination;
      ASSERT_TRUE((side == Side::right ? y * da : da * y).is_zero());
      ASSERT_FALSE((side == Side::right ? y * db : db * y).is_zero());
    }
  }
}
