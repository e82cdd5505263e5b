#include "xprod/actions.hpp"
#include "xprod/convolution.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/fixtures.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

double pair_gap(const CovariantPair& a, const std::vector<Mat>& pi, const std::vector<Mat>& u)
{
  double e = 0.0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    e = std::max(e, max_abs(Mat(a.pi[i] - pi[i])));
  for (std::size_t r = 0; r < u.size(); ++r)
    e = std::max(e, max_abs(Mat(a.u[r] - u[r])));
  return e;
}

} // namespace

TEST(Actions, EveryLineConstructsOnEveryFixture)
{
  for (const auto& id : builtin_fixture_ids()) {
    Fixture fx = builtin_fixture(id);
    for (const auto& chi : fx.characters) {
      for (int l = 1; l <= 16; ++l) {
        TableAction t = covariant_action(fx.sys, l, chi);
        EXPECT_LT(covariance_defect(fx.sys, t.pair.pi, t.pair.u, t.pair.law), 1e-10) << id << " line " << l;
      }
      for (int l = 1; l <= 8; ++l) {
        TableAction t = commuting_action(fx.sys, l, chi);
        EXPECT_LT(max_commutator(t.pair.pi, t.pair.u), 1e-10) << id << " commuting line " << l;
      }
    }
  }
}

TEST(Actions, Line1IsLeftMultiplicationAndTranslation)
{
  Fixture fx = builtin_fixture("F3");
  const FiniteGroup& g = fx.sys.group();
  TableAction t = covariant_action(fx.sys, 1, fx.characters[1]);
  Rng rng(12);
  Vec a = random_vec(rng, 4);
  AFunction f = AFunction::random(rng, 6, 4);
  // (pi(a) f)(s) = a f(s), (U_r f)(s) = chi(r) alpha_r(f(r^-1 s))
  Mat pa = t.pair.pi_of(a);
  Vec got = pa * f.flat();
  for (std::size_t s = 0; s < 6; ++s)
    EXPECT_LT(max_abs(Vec(got.segment(s * 4, 4) - fx.sys.algebra().multiply(a, f.at(s)))), 1e-13);
  for (std::size_t r = 0; r < 6; ++r) {
    Vec ur = t.pair.u[r] * f.flat();
    for (std::size_t s = 0; s < 6; ++s) {
      Vec want = fx.characters[1](r) * (fx.sys.alpha(r) * f.at(g.mul(g.inv(r), s)));
      EXPECT_LT(max_abs(Vec(ur.segment(s * 4, 4) - want)), 1e-13);
    }
  }
}

TEST(Actions, ConjugationByTChiSwapsLines1And2)
{
  Fixture fx = builtin_fixture("F5");
  const std::size_t d = fx.sys.dim();
  for (const auto& a : fx.characters)
    for (const auto& b : fx.characters) {
      Character psi = character_product(a, character_inverse(b));
      Mat t = t_chi_matrix(fx.sys.group(), d, psi);
      CovariantPair l1 = covariant_action(fx.sys, 1, a).pair;
      CovariantPair l2 = covariant_action(fx.sys, 2, b).pair;
      std::vector<Mat> pi, u;
      for (const auto& m : l1.pi)
        pi.push_back(t * m * t);
      for (const auto& m : l1.u)
        u.push_back(t * m * t);
      EXPECT_LT(pair_gap(l2, pi, u), 1e-12);
    }
}

TEST(Actions, CompanionLine5IsLine1OverOppositeGroup)
{
  Fixture fx = builtin_fixture("F3");
  DynamicalSystem comp = fx.sys.with_opposite_group();
  for (const auto& chi : fx.characters) {
    CovariantPair l5 = covariant_action(fx.sys, 5, chi).pair;
    CovariantPair l1 = covariant_action(comp, 1, chi).pair;
    EXPECT_LT(pair_gap(l5, l1.pi, l1.u), 1e-14);
  }
}
