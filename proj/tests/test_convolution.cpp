#include "xprod/convolution.hpp"
#include "xprod/fixtures.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

AFunction scalars(std::initializer_list<cd> v)
{
  Vec x(v.size());
  Eigen::Index i = 0;
  for (cd c : v)
    x(i++) = c;
  return AFunction(v.size(), 1, x);
}

// [f * g](s) = sum_r f(r) alpha_r(g(r^-1 s)), written directly from the structure constants
AFunction oracle_convolve(const DynamicalSystem& sys, const AFunction& f, const AFunction& g)
{
  const FiniteGroup& G = sys.group();
  const Structure& st = sys.algebra().structure();
  const std::size_t d = sys.dim();
  AFunction out(sys.order(), d);
  for (std::size_t s = 0; s < sys.order(); ++s)
    for (std::size_t r = 0; r < sys.order(); ++r) {
      Vec b = sys.alpha(r) * g.at(G.mul(G.inv(r), s));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          for (std::size_t k = 0; k < d; ++k)
            out.at(s)(k) += f.at(r)(i) * b(j) * st.c(i, j, k);
    }
  return out;
}

} // namespace

TEST(Convolution, Z2ScalarHandExample)
{
  DynamicalSystem sys = trivial_action(scalar_algebra(), cyclic_group(2));
  AFunction h = twisted_convolve(sys, scalars({1.0, 2.0}), scalars({3.0, 4.0}));
  EXPECT_NEAR(std::abs(h.at(0)(0) - 11.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.at(1)(0) - 10.0), 0.0, 1e-15);
}

TEST(Convolution, WeightedNorms)
{
  FiniteGroup g = cyclic_group(2);
  Weight w = make_weight(g, {1.0, 2.0});
  AFunction f = scalars({1.0, 2.0});
  EXPECT_DOUBLE_EQ(weighted_norm(scalar_algebra(), f, w, 1.0), 5.0);
  EXPECT_DOUBLE_EQ(std::pow(weighted_norm(scalar_algebra(), f, w, 2.0), 2.0), 9.0);
}

TEST(Convolution, MatchesOracleOnEveryFixture)
{
  Rng rng(11);
  for (const auto& id : builtin_fixture_ids()) {
    Fixture fx = builtin_fixture(id);
    for (int k = 0; k < 5; ++k) {
      AFunction f = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      AFunction g = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      EXPECT_LT(max_abs_diff(twisted_convolve(fx.sys, f, g), oracle_convolve(fx.sys, f, g)), 1e-12) << id;
      EXPECT_LT(max_abs(Vec(convolution_left_matrix(fx.sys, f) * g.flat() - oracle_convolve(fx.sys, f, g).flat())),
                1e-12)
          << id;
      EXPECT_LT(
          max_abs(Vec(convolution_right_matrix(fx.sys, g) * f.flat() - oracle_convolve(fx.sys, f, g).flat())),
          1e-12)
          << id;
    }
  }
}

TEST(Convolution, ElementaryTensors)
{
  Fixture fx = builtin_fixture("F3");
  const FiniteGroup& G = fx.sys.group();
  Rng rng(2);
  Vec a = random_vec(rng, 4), b = random_vec(rng, 4);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t s = 0; s < 6; ++s) {
      AFunction lhs = twisted_convolve(fx.sys, AFunction::delta(6, 4, r, a), AFunction::delta(6, 4, s, b));
      AFunction rhs = AFunction::delta(6, 4, G.mul(r, s), fx.sys.algebra().multiply(a, fx.sys.alpha(r) * b));
      EXPECT_LT(max_abs_diff(lhs, rhs), 1e-13);
    }
}

TEST(Convolution, AssociativeAndSubmultiplicative)
{
  Rng rng(4);
  for (const auto& id : builtin_fixture_ids()) {
    Fixture fx = builtin_fixture(id);
    BeurlingAlgebra b(fx.sys, fx.w);
    for (int k = 0; k < 10; ++k) {
      AFunction f = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      AFunction g = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      AFunction h = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      EXPECT_LT(max_abs_diff(b.multiply(b.multiply(f, g), h), b.multiply(f, b.multiply(g, h))), 1e-12) << id;
      EXPECT_LE(b.norm(b.multiply(f, g)), b.submultiplicative_constant() * b.norm(f) * b.norm(g) * (1 + 1e-12))
          << id;
    }
  }
}

TEST(Hat, FlipSystemExamples)
{
  Fixture fx = builtin_fixture("F2");
  Vec e0(2), e1(2);
  e0 << 1.0, 0.0;
  e1 << 0.0, 1.0;
  AFunction h = AFunction::delta(2, 2, 1, e0);
  EXPECT_EQ(max_abs_diff(hat_conjugator(fx.sys, h), AFunction::delta(2, 2, 1, e1)), 0.0);
  EXPECT_EQ(max_abs_diff(s_chi(fx.sys, fx.characters[0], h), AFunction::delta(2, 2, 1, e1)), 0.0);
}

TEST(Hat, AntiIsomorphismOnEveryFixture)
{
  Rng rng(8);
  for (const auto& id : builtin_fixture_ids()) {
    Fixture fx = builtin_fixture(id);
    for (const auto& chi : fx.characters) {
      AFunction f = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      AFunction g = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
      AFunction lhs = hat_anti_iso(fx.sys, chi, twisted_convolve(fx.sys, f, g));
      AFunction rhs = opposite_convolve(fx.sys, hat_anti_iso(fx.sys, chi, g), hat_anti_iso(fx.sys, chi, f));
      EXPECT_LT(max_abs_diff(lhs, rhs), 1e-12) << id;
      EXPECT_LT(max_abs_diff(check_anti_iso(fx.sys, chi, hat_anti_iso(fx.sys, chi, f)), f), 1e-13) << id;
      EXPECT_LT(max_abs_diff(t_chi(fx.sys.group(), chi, t_chi(fx.sys.group(), chi, f)), f), 1e-13) << id;
      EXPECT_LT(max_abs_diff(s_chi_inverse(fx.sys, chi, s_chi(fx.sys, chi, f)), f), 1e-13) << id;
      EXPECT_LT(max_abs(Vec(s_chi_matrix(fx.sys, chi) * f.flat() - s_chi(fx.sys, chi, f).flat())), 1e-13) << id;
    }
    AFunction f = AFunction::random(rng, fx.sys.order(), fx.sys.dim());
    EXPECT_LT(max_abs_diff(check_conjugator(fx.sys, hat_conjugator(fx.sys, f)), f), 1e-13) << id;
  }
}

TEST(Hat, NormPreservedForIsometricSymmetricWeight)
{
  Fixture fx = builtin_fixture("F1"); // trivial action, w = (1,2) symmetric on Z2
  Rng rng(1);
  AFunction f = AFunction::random(rng, 2, 1);
  AFunction h = hat_anti_iso(fx.sys, fx.characters[0], f);
  EXPECT_NEAR(weighted_norm(fx.sys.algebra(), h, fx.w), weighted_norm(fx.sys.algebra(), f, fx.w), 1e-14);
}
