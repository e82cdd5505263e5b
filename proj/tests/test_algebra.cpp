#include "xprod/algebra.hpp"
#include "xprod/error.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

Vec v2(cd a, cd b)
{
  Vec v(2);
  v << a, b;
  return v;
}

// 2x2 matrix product written out entry by entry
Mat hand_product(const Mat& a, const Mat& b)
{
  Mat c(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return c;
}

} // namespace

TEST(Algebra, ColumnAlgebraProduct)
{
  NormedAlgebra a = column_algebra();
  // [[1,0],[1,0]] [[2,0],[0,0]] = [[2,0],[2,0]]
  Vec p = a.multiply(v2(1.0, 1.0), v2(2.0, 0.0));
  EXPECT_NEAR(max_abs(Vec(p - v2(2.0, 2.0))), 0.0, 1e-15);
  EXPECT_EQ(a.norm(v2(3.0, -4.0)), 7.0);
}

TEST(Algebra, ColumnAlgebraIdentitiesAndOpposite)
{
  NormedAlgebra a = column_algebra();
  EXPECT_FALSE(a.identity());
  EXPECT_FALSE(a.left_identity());
  ASSERT_TRUE(a.right_identity());
  Vec u = *a.right_identity();
  EXPECT_NEAR(max_abs(Vec(u - v2(1.0, 0.0))), 0.0, 1e-12);

  NormedAlgebra o = a.opposite();
  EXPECT_TRUE(o.left_identity());
  EXPECT_FALSE(o.right_identity());
  EXPECT_FALSE(o.identity());
}

TEST(Algebra, MatrixLeftRegularAgainstBruteForce)
{
  NormedAlgebra a = matrix_algebra(2);
  Rng rng(3);
  Vec x = random_vec(rng, 4), y = random_vec(rng, 4);
  Mat prod = hand_product(a.as_matrix(x), a.as_matrix(y));
  EXPECT_NEAR(max_abs(Vec(a.multiply(x, y) - a.from_matrix(prod))), 0.0, 1e-14);
  EXPECT_NEAR(max_abs(Vec(a.left_regular(x) * y - a.from_matrix(prod))), 0.0, 1e-14);
  EXPECT_NEAR(max_abs(Vec(a.right_regular(y) * x - a.from_matrix(prod))), 0.0, 1e-14);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Mat ei = a.as_matrix(a.basis(i)), ej = a.as_matrix(a.basis(j));
      EXPECT_NEAR(max_abs(Vec(a.multiply(a.basis(i), a.basis(j)) - a.from_matrix(hand_product(ei, ej)))), 0.0,
                  1e-15);
    }
}

TEST(Algebra, AssociativityOfBuiltins)
{
  for (const auto& name : {"scalars", "diag(2)", "diag(3)", "matrix(2)", "column(2)"}) {
    NormedAlgebra a = algebra_by_name(name);
    EXPECT_LT(a.structure().associativity_defect(), 1e-12) << name;
  }
}

TEST(Algebra, NonAssociativeStructureRejected)
{
  // e0 e0 = e1, everything else 0 except e1 e0 = e0: (e0 e0) e0 = e0, e0 (e0 e0) = 0
  std::vector<cd> c(8, 0.0);
  c[(0 * 2 + 0) * 2 + 1] = 1.0;
  c[(1 * 2 + 0) * 2 + 0] = 1.0;
  try {
    make_algebra(Structure(2, c), NormTag::One);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAssociative);
  }
  try {
    Structure(2, std::vector<cd>(7, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Algebra, NormsAndNormingFunctionals)
{
  NormedAlgebra d = diagonal_algebra(2);
  EXPECT_EQ(d.norm(v2(3.0, cd(0.0, -4.0))), 4.0);
  NormedAlgebra m = matrix_algebra(2);
  Vec x(4);
  x << 1.0, 1.0, 0.0, 1.0; // [[1,1],[0,1]], singular values golden ratio and its inverse
  EXPECT_NEAR(m.norm(x), (1.0 + std::sqrt(5.0)) / 2.0, 1e-14);
  Rng rng(5);
  for (const auto& name : {"diag(2)", "matrix(2)", "column(2)"}) {
    NormedAlgebra a = algebra_by_name(name);
    Vec y = random_vec(rng, Eigen::Index(a.dim()));
    Vec phi = a.norming_functional(y);
    EXPECT_NEAR(std::abs((phi.transpose() * y)(0) - a.norm(y)), 0.0, 1e-12) << name;
    EXPECT_NEAR(a.dual_norm(phi), 1.0, 1e-9) << name;
  }
}

TEST(Algebra, BallSupOfNormIsOne)
{
  for (const auto& name : {"scalars", "diag(2)", "matrix(2)", "column(2)"}) {
    NormedAlgebra a = algebra_by_name(name);
    NormBounds b = a.ball_sup([&](const Vec& x) { return a.norm(x); });
    EXPECT_NEAR(b.lower, 1.0, 1e-9) << name;
    EXPECT_GE(b.upper, b.lower);
  }
}

TEST(Algebra, KronStructureMatchesComponentwiseProduct)
{
  NormedAlgebra a = column_algebra(), b = diagonal_algebra(2);
  Structure k = kron(a.structure(), b.structure());
  Rng rng(9);
  Vec a1 = random_vec(rng, 2), a2 = random_vec(rng, 2), b1 = random_vec(rng, 2), b2 = random_vec(rng, 2);
  auto kv = [](const Vec& x, const Vec& y) {
    Vec out(x.size() * y.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
      for (Eigen::Index j = 0; j < y.size(); ++j)
        out(i * y.size() + j) = x(i) * y(j);
    return out;
  };
  Vec lhs = k.multiply(kv(a1, b1), kv(a2, b2));
  Vec rhs = kv(a.multiply(a1, a2), b.multiply(b1, b2));
  EXPECT_NEAR(max_abs(Vec(lhs - rhs)), 0.0, 1e-14);
}
