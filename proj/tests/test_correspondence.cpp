#include "xprod/actions.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

Mat one() { return Mat::Identity(1, 1); }

double pair_gap(const CovariantPair& a, const CovariantPair& b)
{
  double e = 0.0;
  for (std::size_t i = 0; i < a.pi.size(); ++i)
    e = std::max(e, max_abs(Mat(a.pi[i] - b.pi[i])));
  for (std::size_t r = 0; r < a.u.size(); ++r)
    e = std::max(e, max_abs(Mat(a.u[r] - b.u[r])));
  return e;
}

} // namespace

TEST(Correspondence, SignCharacterByHand)
{
  FiniteGroup g = cyclic_group(2);
  DynamicalSystem sys = trivial_action(scalar_algebra(), g);
  CovariantPair p = make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one()}, {one(), Mat(-one())}, Flavor::MM);
  ConvolutionRep t = beurling_rep(sys, p);
  Vec x(2);
  x << 5.0, 3.0;
  EXPECT_NEAR(std::abs(t(AFunction(2, 1, x))(0, 0) - 2.0), 0.0, 1e-15); // f(e) - f(g)
  CovariantPair back = rep_to_pair(t);
  EXPECT_NEAR(std::abs(back.pi[0](0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(back.u[1](0, 0) + 1.0), 0.0, 1e-15);

  // classical equality ||T|| = max_r |U_r| / w(r) with w = (1,2)
  Weight w = make_weight(g, {1.0, 2.0});
  RepBounds b = correspondence_bounds(sys, w, p, t, back);
  EXPECT_NEAR(b.t_norm.lower, 1.0, 1e-12);
  EXPECT_NEAR(b.c_u.lower, 1.0, 1e-12);
  EXPECT_TRUE(b.holds[0] && b.holds[1] && b.holds[2]);
}

TEST(Correspondence, InducedPairRoundTripOnS3)
{
  Fixture fx = builtin_fixture("F3");
  CovariantPair p = induced_pair(fx.sys, fx.w);
  ConvolutionRep t = beurling_rep(fx.sys, p);
  EXPECT_LT(t.multiplicativity_error(), 1e-10);
  EXPECT_LT(pair_gap(rep_to_pair(t), p), 1e-10);
}

TEST(Correspondence, InducedPairIsLeftRegular)
{
  // [lambda~ x| Lambda (f) h](s) = sum_r alpha_{s^-1}(f(r)) h(r^-1 s)
  Fixture fx = builtin_fixture("F3");
  const FiniteGroup& g = fx.sys.group();
  const NormedAlgebra& a = fx.sys.algebra();
  CovariantPair p = induced_pair(fx.sys, fx.w);
  Rng rng(5);
  AFunction f = AFunction::random(rng, 6, 4), h = AFunction::random(rng, 6, 4);
  Vec got = integrated_form(fx.sys, p, f) * h.flat();
  for (std::size_t s = 0; s < 6; ++s) {
    Vec want = Vec::Zero(4);
    for (std::size_t r = 0; r < 6; ++r)
      want += a.multiply(fx.sys.alpha(g.inv(s)) * f.at(r), h.at(g.mul(g.inv(r), s)));
    EXPECT_LT(max_abs(Vec(got.segment(s * 4, 4) - want)), 1e-12);
  }
}

TEST(Correspondence, TranslationNormsMatchColumnSums)
{
  Fixture fx = builtin_fixture("F5");
  const FiniteGroup& g = fx.sys.group();
  CovariantPair p = induced_pair(fx.sys, fx.w);
  for (std::size_t r = 0; r < 4; ++r) {
    double want = 0.0;
    for (std::size_t s = 0; s < 4; ++s)
      want = std::max(want, fx.w(g.mul(r, s)) / fx.w(s));
    EXPECT_NEAR(p.space.operator_norm(p.u[r]).lower, want, 1e-12);
    EXPECT_LE(want, fx.w(r));
  }
}

TEST(Correspondence, InducedPairNeedsOneSidedIdentity)
{
  std::vector<cd> zero(8, 0.0);
  NormedAlgebra null = make_algebra(Structure(2, zero), NormTag::One, "null");
  DynamicalSystem sys = trivial_action(null, cyclic_group(2));
  try {
    induced_pair(sys, unit_weight(cyclic_group(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoApproximateIdentity);
  }
}

TEST(Correspondence, AntiPairRoundTripOnFlip)
{
  Fixture fx = builtin_fixture("F2");
  CovariantPair p = covariant_action(fx.sys, 13, fx.characters[1]).pair;
  ConvolutionRep t = anti_pair_to_antirep(fx.sys, p);
  EXPECT_TRUE(t.anti);
  Rng rng(7);
  for (int k = 0; k < 5; ++k) {
    AFunction f = AFunction::random(rng, 2, 2), g = AFunction::random(rng, 2, 2);
    EXPECT_LT(rel_diff(t(twisted_convolve(fx.sys, f, g)), t(g) * t(f)), 1e-10);
  }
  EXPECT_LT(pair_gap(antirep_to_anti_pair(t), p), 1e-10);
  auto [sys_o, mm] = retype_pair(fx.sys, p);
  EXPECT_EQ(mm.flavor, Flavor::MM);
  EXPECT_LT(covariance_defect(sys_o, mm.pi, mm.u, CovarianceLaw::Alpha), 1e-12);
}

TEST(Correspondence, BimoduleCommutingAndNot)
{
  FiniteGroup g = cyclic_group(2);
  DynamicalSystem sys = trivial_action(scalar_algebra(), g);
  Mat id = Mat::Identity(2, 2), swap = Mat::Zero(2, 2), sign = Mat::Identity(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  sign(1, 1) = -1.0;
  SpaceNorm x = SpaceNorm::lp(2, PNorm::Two);
  CovariantPair pm = make_pair(sys, x, {id}, {id, swap}, Flavor::MM);
  CovariantPair pa_ok = make_pair(sys, x, {id}, {id, swap}, Flavor::AA);
  BimoduleReps reps = bimodule_correspondence(sys, pm, sys, pa_ok);
  EXPECT_LT(reps.commutator, 1e-12);
  auto [back_m, back_a] = bimodule_inverse(reps);
  EXPECT_LT(pair_gap(back_m, pm), 1e-12);
  EXPECT_LT(pair_gap(back_a, pa_ok), 1e-12);

  CovariantPair pa_bad = make_pair(sys, x, {id}, {id, sign}, Flavor::AA);
  try {
    bimodule_correspondence(sys, pm, sys, pa_bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
  }
}
