#include "xprod/error.hpp"
#include "xprod/tensor.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

Mat one() { return Mat::Identity(1, 1); }

AlgebraRep diag_rep()
{
  NormedAlgebra a = diagonal_algebra(2);
  std::vector<Mat> images;
  for (int i = 0; i < 2; ++i) {
    Mat m = Mat::Zero(2, 2);
    m(i, i) = 1.0;
    images.push_back(m);
  }
  return {a.structure(), SpaceNorm::lp(2, PNorm::Two), images};
}

} // namespace

TEST(Tensor, OdotOfDiagonalRepsIsProductOfDiagonals)
{
  AlgebraRep p = diag_rep();
  AlgebraRep prod = odot(p, p);
  ASSERT_EQ(prod.images.size(), 4u);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Mat want = Mat::Zero(2, 2);
      if (i == j)
        want(i, i) = 1.0;
      EXPECT_EQ(max_abs(Mat(prod.images[i * 2 + j] - want)), 0.0);
    }
  EXPECT_LT(prod.multiplicativity_error(), 1e-14);

  Vec u = Vec::Ones(2);
  auto parts = decompose_rep(prod, {p.domain, p.domain}, {u, u});
  ASSERT_EQ(parts.size(), 2u);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      EXPECT_LT(max_abs(Mat(parts[k].images[i] - p.images[i])), 1e-14);
}

TEST(Tensor, OdotRejectsNonCommutingFactors)
{
  AlgebraRep p = diag_rep();
  AlgebraRep q = p;
  Mat s(2, 2);
  s << 1.0, 1.0, 1.0, -1.0;
  for (auto& m : q.images)
    m = s * m * s.inverse();
  try {
    odot(p, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCommuting);
  }
}

TEST(Tensor, UniquenessSweepOnlyAcceptsOne)
{
  AlgebraRep p = diag_rep();
  AlgebraRep prod = odot(p, p);
  auto pts = uniqueness_sweep(prod, p, p, {cd(1.0), cd(2.0), cd(0.5), cd(0.0, 1.0), cd(-1.0)});
  ASSERT_EQ(pts.size(), 5u);
  EXPECT_TRUE(pts[0].pass);
  for (std::size_t k = 1; k < pts.size(); ++k)
    EXPECT_FALSE(pts[k].pass) << pts[k].c;
}

TEST(Tensor, ProjectiveNormOfElementaryTensor)
{
  Rng rng(13);
  for (const auto& [na, nb] : std::vector<std::pair<std::string, std::string>>{
           {"diag(2)", "diag(2)"}, {"column(2)", "diag(2)"}, {"column(2)", "column(2)"}}) {
    NormedAlgebra a = algebra_by_name(na), b = algebra_by_name(nb);
    Vec x = random_vec(rng, 2), y = random_vec(rng, 2);
    ProjectiveBounds pb = projective_norm_bounds(a, b, kron_vec(x, y), rng);
    EXPECT_NEAR(pb.upper, a.norm(x) * b.norm(y), 1e-12) << na << nb;
    EXPECT_NEAR(pb.lower, a.norm(x) * b.norm(y), 1e-12) << na << nb;
  }
}

TEST(Tensor, TwoScalarFactorsOverZ2)
{
  FiniteGroup g = cyclic_group(2);
  DynamicalSystem sys = trivial_action(scalar_algebra(), g);
  SpaceNorm x = SpaceNorm::lp(1, PNorm::Two);
  RepClass r = {make_pair(sys, x, {one()}, {one(), one()}, Flavor::MM),
                make_pair(sys, x, {one()}, {one(), Mat(-one())}, Flavor::MM)};
  CrossedProduct cp = build_crossed_product(sys, r);
  ASSERT_EQ(cp.quotient_dim(), 2u);
  NFold nf = n_fold_correspondence({cp, cp}, {r[1], r[0]});
  ASSERT_EQ(nf.product.images.size(), 4u);
  Rng rng(17);
  for (int k = 0; k < 5; ++k) {
    AFunction f = AFunction::random(rng, 2, 1), h = AFunction::random(rng, 2, 1);
    cd want = (f.at(0)(0) - f.at(1)(0)) * (h.at(0)(0) + h.at(1)(0));
    Mat got = nf.product.apply(kron_vec(cp.q(f), cp.q(h)));
    EXPECT_NEAR(std::abs(got(0, 0) - want), 0.0, 1e-12);
  }
  auto back = n_fold_inverse({cp, cp}, nf.product);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_NEAR(std::abs(back[0].u[1](0, 0) + 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(back[1].u[1](0, 0) - 1.0), 0.0, 1e-12);
}
