#include "xprod/dynamics.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

Mat swap2()
{
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

} // namespace

TEST(Dynamics, FlipSystemIsIsometric)
{
  DynamicalSystem sys = coordinate_permutation(diagonal_algebra(2), cyclic_group(2), {{0, 1}, {1, 0}});
  EXPECT_TRUE(sys.isometric());
  EXPECT_NEAR(sys.c_alpha().lower, 1.0, 1e-12);
  EXPECT_NEAR(sys.c_alpha().upper, 1.0, 1e-12);
  EXPECT_NEAR(max_abs(Mat(sys.alpha(1) - swap2())), 0.0, 0.0);
}

TEST(Dynamics, S3ConjugationConstantFromSvd)
{
  std::vector<Mat> rho = s3_realization();
  FiniteGroup g = symmetric_group(3);
  DynamicalSystem sys = inner_conjugation(matrix_algebra(2), g, rho);
  double c = 0.0;
  for (const auto& r : rho) {
    Eigen::JacobiSVD<Mat> svd(r);
    auto s = svd.singularValues();
    c = std::max(c, s(0) / s(s.size() - 1));
  }
  EXPECT_GT(c, 1.0);
  EXPECT_NEAR(sys.c_alpha_value(), c, 1e-9);
  EXPECT_FALSE(sys.isometric());
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      EXPECT_LT(max_abs(Mat(sys.alpha(s) * sys.alpha(t) - sys.alpha(g.mul(s, t)))), 1e-12);
}

TEST(Dynamics, OppositeSystemIsHomomorphismOnOppositeGroup)
{
  Fixture fx = builtin_fixture("F3");
  DynamicalSystem o = fx.sys.opposite();
  const FiniteGroup& go = o.group();
  for (std::size_t r = 0; r < 6; ++r)
    EXPECT_LT(max_abs(Mat(o.alpha(r) - fx.sys.alpha(fx.sys.group().inv(r)))), 1e-15);
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      EXPECT_LT(max_abs(Mat(o.alpha(s) * o.alpha(t) - o.alpha(go.mul(s, t)))), 1e-12);
}

TEST(Dynamics, InvalidActionsRejected)
{
  NormedAlgebra a = diagonal_algebra(2);
  FiniteGroup g = cyclic_group(2);
  Mat half = Mat::Identity(2, 2) * 0.5;
  try {
    make_system(a, g, {Mat::Identity(2, 2), half});
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::NotHomomorphism || e.kind() == ErrorKind::NotMultiplicative) << e.what();
  }
  try {
    make_system(a, g, {swap2(), swap2()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomomorphism);
  }
  // rotation of C^2 is invertible and squares to -I on Z4 ... but is not multiplicative on diag(2)
  Mat rot = Mat::Zero(2, 2);
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  try {
    make_system(a, cyclic_group(4), {Mat::Identity(2, 2), rot, Mat(-Mat::Identity(2, 2)), Mat(-rot)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotMultiplicative);
  }
}

TEST(Dynamics, PhasePermutationDetection)
{
  EXPECT_TRUE(is_phase_permutation(swap2()));
  Mat m = swap2();
  m(0, 1) = cd(0.0, 1.0);
  EXPECT_TRUE(is_phase_permutation(m));
  m(0, 1) = 2.0;
  EXPECT_FALSE(is_phase_permutation(m));
}
