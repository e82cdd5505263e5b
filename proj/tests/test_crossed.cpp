#include "xprod/crossed.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"
#include "xprod/suite.hpp"

#include <gtest/gtest.h>

using namespace xprod;

TEST(Crossed, RrefAgreesWithSvdNullspace)
{
  Rng rng(21);
  for (int rank : {0, 1, 3, 5}) {
    Mat m = Mat::Zero(6, 6);
    for (int k = 0; k < rank; ++k)
      m += random_vec(rng, 6) * random_vec(rng, 6).adjoint();
    Mat a = nullspace(m), b = rref_nullspace(m);
    ASSERT_EQ(a.cols(), 6 - rank);
    ASSERT_EQ(b.cols(), 6 - rank);
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      EXPECT_LT(distance_to_span(a, b.col(j)), 1e-10);
      EXPECT_LT(max_abs(Vec(m * b.col(j))), 1e-10);
    }
  }
}

TEST(Crossed, KernelMatchesBruteForceOnFixtures)
{
  for (const auto& id : builtin_fixture_ids()) {
    Fixture fx = builtin_fixture(id);
    RepClass r = fx.r;
    RepClass partial(r.begin() + 1, r.end());
    for (const RepClass& cls : {r, partial}) {
      Mat svd = class_kernel(fx.sys, cls);
      Mat brute = brute_force_kernel(fx.sys, cls);
      ASSERT_EQ(svd.cols(), brute.cols()) << id;
      for (Eigen::Index j = 0; j < brute.cols(); ++j)
        EXPECT_LT(distance_to_span(svd, brute.col(j)), 1e-10) << id;
    }
  }
}

TEST(Crossed, QuotientProductIsAssociativeAndUnital)
{
  Fixture fx = builtin_fixture("F3");
  RepClass partial(fx.r.begin() + 1, fx.r.end());
  CrossedProduct cp = build_crossed_product(fx.sys, partial);
  EXPECT_EQ(cp.kernel().cols() + Eigen::Index(cp.quotient_dim()), 24);
  EXPECT_LT(cp.structure().associativity_defect(), 1e-10);
  ASSERT_TRUE(cp.unit());
  Rng rng(3);
  Vec x = random_vec(rng, Eigen::Index(cp.quotient_dim()));
  EXPECT_LT(max_abs(Vec(cp.multiply(*cp.unit(), x) - x)), 1e-10);
  EXPECT_LT(max_abs(Vec(cp.multiply(x, *cp.unit()) - x)), 1e-10);
}

TEST(Crossed, CanonicalMapsReproduceLeftRegular)
{
  Fixture fx = builtin_fixture("F2");
  CrossedProduct cp = build_crossed_product(fx.sys, fx.r);
  CanonicalMaps maps = canonical_maps(cp);
  Rng rng(4);
  for (int k = 0; k < 5; ++k) {
    AFunction f = AFunction::random(rng, 2, 2);
    EXPECT_LT(rel_diff(canonical_integrated(cp, maps, f), cp.left_mult(cp.q(f))), 1e-10);
  }
}
