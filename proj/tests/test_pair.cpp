#include "xprod/actions.hpp"
#include "xprod/crossed.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

Mat one() { return Mat::Identity(1, 1); }

} // namespace

TEST(Pair, IntegratedFormHandExample)
{
  DynamicalSystem sys = trivial_action(scalar_algebra(), cyclic_group(2));
  CovariantPair p = make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), Mat(-one())}, Flavor::MM);
  Vec x(2);
  x << 1.0, 2.0;
  Mat t = integrated_form(sys, p, AFunction(2, 1, x));
  EXPECT_NEAR(std::abs(t(0, 0) - (-1.0)), 0.0, 1e-15);
}

TEST(Pair, FlavorAndCovarianceValidation)
{
  DynamicalSystem sys = coordinate_permutation(diagonal_algebra(2), cyclic_group(2), {{0, 1}, {1, 0}});
  std::vector<Mat> pi = {Mat::Zero(2, 2), Mat::Zero(2, 2)};
  pi[0](0, 0) = 1.0;
  pi[1](1, 1) = 1.0;
  Mat swap = Mat::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  CovariantPair ok = make_pair(sys, SpaceNorm::lp(2, PNorm::Inf), pi, {Mat::Identity(2, 2), swap}, Flavor::MM);
  EXPECT_TRUE(ok.non_degenerate);
  try {
    make_pair(sys, SpaceNorm::lp(2, PNorm::Inf), pi, {Mat::Identity(2, 2), Mat::Identity(2, 2)}, Flavor::MM);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CovarianceViolated);
  }
  std::vector<Mat> bad = {Mat::Identity(2, 2), Mat::Identity(2, 2)};
  try {
    make_pair(sys, SpaceNorm::lp(2, PNorm::Inf), bad, {Mat::Identity(2, 2), swap}, Flavor::MM);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FlavorMismatch);
  }
}

TEST(Pair, Line13IsAntiAntiWithInverseLaw)
{
  Fixture fx = builtin_fixture("F2");
  TableAction t = covariant_action(fx.sys, 13, fx.characters[0]);
  EXPECT_EQ(t.pair.flavor, Flavor::AA);
  EXPECT_EQ(t.pair.law, CovarianceLaw::AlphaInverse);
  const FiniteGroup& g = fx.sys.group();
  // brute-force U_r pi(a) U_r^-1 = pi(alpha_{r^-1} a) over basis and group
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t i = 0; i < 2; ++i) {
      Vec a = fx.sys.algebra().basis(i);
      Mat lhs = t.pair.u[r] * t.pair.pi_of(a) * t.pair.u[r].inverse();
      Mat rhs = t.pair.pi_of(fx.sys.alpha(g.inv(r)) * a);
      EXPECT_LT(max_abs(Mat(lhs - rhs)), 1e-14);
    }
}

TEST(Seminorm, KernelAndQuotientOnZ2)
{
  DynamicalSystem sys = trivial_action(scalar_algebra(), cyclic_group(2));
  RepClass r = {make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), one()}, Flavor::MM)};
  Vec x(2);
  x << 3.0, cd(0.0, 4.0);
  EXPECT_NEAR(seminorm(sys, r, AFunction(2, 1, x)).lower, 5.0, 1e-14); // |3 + 4i|
  x << 1.0, -1.0;
  EXPECT_NEAR(seminorm(sys, r, AFunction(2, 1, x)).upper, 0.0, 1e-15);
  CrossedProduct cp = build_crossed_product(sys, r);
  EXPECT_EQ(cp.kernel().cols(), 1);
  EXPECT_EQ(cp.quotient_dim(), 1u);
}

TEST(Seminorm, TwoCharactersGiveBlockMaximum)
{
  DynamicalSystem sys = trivial_action(scalar_algebra(), cyclic_group(2));
  RepClass r = {make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), one()}, Flavor::MM),
                make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), Mat(-one())}, Flavor::MM)};
  Vec x(2);
  x << 2.0, 1.0;
  AFunction f(2, 1, x);
  EXPECT_NEAR(seminorm(sys, r, f).lower, 3.0, 1e-14);
  for (PNorm p : {PNorm::One, PNorm::Two, PNorm::Inf}) {
    CovariantPair sum = direct_sum_realization(sys, r, p);
    EXPECT_NEAR(sum.space.operator_norm(integrated_form(sys, sum, f)).lower, 3.0, 1e-14);
  }
  EXPECT_EQ(build_crossed_product(sys, r).kernel().cols(), 0);
}

TEST(Seminorm, DistinctCharactersAreNotComparable)
{
  DynamicalSystem sys = trivial_action(scalar_algebra(), cyclic_group(2));
  RepClass r1 = {make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), Mat(-one())}, Flavor::MM)};
  RepClass r2 = {make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), one()}, Flavor::MM)};
  Rng rng(6);
  EXPECT_FALSE(compare_classes(sys, r1, r2, rng).dominated);
  EXPECT_FALSE(compare_classes(sys, r2, r1, rng).dominated);
  EXPECT_TRUE(compare_classes(sys, r1, r1, rng).dominated);
}

TEST(SpaceNorm, LpOperatorNorms)
{
  Mat m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  EXPECT_NEAR(SpaceNorm::lp(2, PNorm::One).operator_norm(m).lower, 6.0, 1e-14); // max column sum
  EXPECT_NEAR(SpaceNorm::lp(2, PNorm::Inf).operator_norm(m).lower, 7.0, 1e-14); // max row sum
  EXPECT_NEAR(SpaceNorm::lp(2, PNorm::Two).operator_norm(m).lower, std::sqrt(15.0 + std::sqrt(221.0)), 1e-12);
}
