#include "xprod/fixtures.hpp"

#include "xprod/actions.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/error.hpp"

#include <cmath>

namespace xprod {

namespace {

Mat diag2(cd a, cd b)
{
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

Mat swap2()
{
  Mat m = Mat::Zero(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  return m;
}

Character sign_character(const FiniteGroup& g, const std::vector<double>& signs)
{
  std::vector<cd> v(signs.begin(), signs.end());
  return make_character(g, v);
}

std::vector<Mat> coordinate_images(std::size_t n)
{
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i) {
    Mat m = Mat::Zero(n, n);
    m(i, i) = 1.0;
    out.push_back(m);
  }
  return out;
}

Fixture f1()
{
  Fixture fx;
  fx.id = "F1";
  FiniteGroup g = cyclic_group(2);
  fx.sys = trivial_action(scalar_algebra(), g);
  fx.w = make_weight(g, {1.0, 2.0});
  fx.characters = {trivial_character(g), sign_character(g, {1.0, -1.0})};
  fx.r.push_back(induced_pair(fx.sys, fx.w));
  Mat one = Mat::Identity(1, 1);
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(1, PNorm::Two), {one}, {one, Mat(-one)}, Flavor::MM,
                           std::nullopt, "sign character"));
  fx.notes = "scalars over Z2, trivial action";
  return fx;
}

Fixture f2()
{
  Fixture fx;
  fx.id = "F2";
  FiniteGroup g = cyclic_group(2);
  fx.sys = coordinate_permutation(diagonal_algebra(2), g, {{0, 1}, {1, 0}});
  fx.w = unit_weight(g);
  fx.characters = {trivial_character(g), sign_character(g, {1.0, -1.0})};
  fx.r.push_back(induced_pair(fx.sys, fx.w));
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(2, PNorm::Inf), coordinate_images(2),
                           {Mat::Identity(2, 2), swap2()}, Flavor::MM, std::nullopt, "flip on l^inf"));
  fx.notes = "isometric unital action with unit weight";
  return fx;
}

Fixture f3()
{
  Fixture fx;
  fx.id = "F3";
  FiniteGroup g = symmetric_group(3);
  NormedAlgebra a = matrix_algebra(2);
  std::vector<Mat> rho = s3_realization();
  fx.sys = inner_conjugation(a, g, rho);
  std::vector<double> w, sign;
  for (const auto& p : symmetric_group_elements(3)) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t k = i + 1; k < p.size(); ++k)
        if (p[i] > p[k])
          ++inversions;
    w.push_back(1.0 + inversions);
    sign.push_back(inversions % 2 ? -1.0 : 1.0);
  }
  fx.w = make_weight(g, w);
  fx.characters = {trivial_character(g), sign_character(g, sign)};
  fx.r.push_back(induced_pair(fx.sys, fx.w));
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < 4; ++i)
    pi.push_back(a.as_matrix(a.basis(i)));
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(2, PNorm::Two), pi, rho, Flavor::MM, std::nullopt,
                           "defining representation"));
  fx.notes = "non-isometric inner action on M_2, weight 1 + length";
  return fx;
}

Fixture f4()
{
  Fixture fx;
  fx.id = "F4";
  FiniteGroup g = cyclic_group(2);
  NormedAlgebra a = column_algebra();
  fx.sys = make_system(a, g, {Mat::Identity(2, 2), diag2(1.0, -1.0)}, "column algebra, y -> -y");
  fx.w = make_weight(g, {1.0, 2.0});
  fx.characters = {trivial_character(g), sign_character(g, {1.0, -1.0})};
  fx.r.push_back(induced_pair(fx.sys, fx.w));
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < 2; ++i)
    pi.push_back(a.left_regular(a.basis(i)));
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(2, PNorm::One), pi, fx.sys.alphas(), Flavor::MM, std::nullopt,
                           "left regular"));
  fx.notes = "right identity only";
  return fx;
}

Fixture f5()
{
  Fixture fx;
  fx.id = "F5";
  FiniteGroup g = cyclic_group(4);
  std::vector<std::vector<std::size_t>> perm = {{0, 1}, {1, 0}, {0, 1}, {1, 0}};
  fx.sys = coordinate_permutation(diagonal_algebra(2), g, perm);
  fx.w = make_weight(g, {1.0, 2.0, 3.0, 2.0});
  const cd i(0.0, 1.0);
  fx.characters.push_back(trivial_character(g));
  for (int k = 1; k < 4; ++k) {
    std::vector<cd> v;
    for (int s = 0; s < 4; ++s)
      v.push_back(std::pow(i, k * s));
    fx.characters.push_back(make_character(g, v));
  }
  fx.r.push_back(induced_pair(fx.sys, fx.w));
  std::vector<Mat> u, ui;
  for (std::size_t s = 0; s < 4; ++s) {
    Mat m = (s % 2) ? swap2() : Mat(Mat::Identity(2, 2));
    u.push_back(m);
    ui.push_back(fx.characters[1](s) * m);
  }
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(2, PNorm::Inf), coordinate_images(2), u, Flavor::MM,
                           std::nullopt, "flip on l^inf"));
  fx.r.push_back(make_pair(fx.sys, SpaceNorm::lp(2, PNorm::Inf), coordinate_images(2), ui, Flavor::MM,
                           std::nullopt, "flip twisted by i"));
  fx.notes = "non-symmetric weight, character of order 4";
  return fx;
}

} // namespace

std::vector<Mat> s3_realization()
{
  // orthonormal basis of the sum-zero plane in C^3
  Mat b(3, 2);
  b << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), -1.0 / std::sqrt(2.0), 1.0 / std::sqrt(6.0), 0.0,
      -2.0 / std::sqrt(6.0);
  Mat p(2, 2), pinv(2, 2);
  p << 1.0, 0.5, 0.0, 1.0;
  pinv << 1.0, -0.5, 0.0, 1.0;
  std::vector<Mat> out;
  for (const auto& s : symmetric_group_elements(3)) {
    Mat perm = Mat::Zero(3, 3);
    for (std::size_t k = 0; k < 3; ++k)
      perm(s[k], Eigen::Index(k)) = 1.0;
    out.push_back(p * (b.adjoint() * perm * b) * pinv);
  }
  return out;
}

Fixture builtin_fixture(const std::string& id)
{
  if (id == "F1")
    return f1();
  if (id == "F2")
    return f2();
  if (id == "F3")
    return f3();
  if (id == "F4")
    return f4();
  if (id == "F5")
    return f5();
  throw Error(ErrorKind::InvalidConfig, "unknown fixture '" + id + "'");
}

std::vector<std::string> builtin_fixture_ids() { return {"F1", "F2", "F3", "F4", "F5"}; }

RepClass default_class(const DynamicalSystem& sys, const Weight& w)
{
  if (sys.algebra().has_one_sided_identity())
    return {induced_pair(sys, w)};
  return {covariant_action(sys, 1, trivial_character(sys.group())).pair};
}

CovariantPair with_space(const DynamicalSystem& sys, const CovariantPair& p, SpaceNorm space)
{
  return make_pair(sys, std::move(space), p.pi, p.u, p.flavor, p.law, p.label);
}

RepClass lp_class(const Fixture& fx, PNorm p, std::size_t max_pairs)
{
  RepClass out;
  for (std::size_t k = 0; k < fx.characters.size() && out.size() < max_pairs; ++k) {
    CovariantPair line = covariant_action(fx.sys, 1, fx.characters[k]).pair;
    line.label = "line 1, character " + std::to_string(k);
    out.push_back(with_space(fx.sys, line, SpaceNorm::lp(line.space_dim(), p)));
  }
  for (const auto& q : fx.r) {
    if (out.size() >= max_pairs)
      break;
    if (q.space.kind() != SpaceNorm::Kind::Blocks)
      out.push_back(with_space(fx.sys, q, SpaceNorm::lp(q.space_dim(), p)));
  }
  return out;
}

RepClass random_nondegenerate_pairs(const Fixture& fx, Rng& rng, std::size_t count)
{
  RepClass bases = lp_class(fx, PNorm::Two, fx.characters.size() + fx.r.size());
  if (fx.sys.algebra().has_one_sided_identity())
    bases.push_back(induced_pair(fx.sys, fx.w));
  RepClass out;
  for (std::size_t k = 0; k < count; ++k) {
    const CovariantPair& base = bases[k % bases.size()];
    std::size_t m = base.space_dim();
    Mat s = random_invertible(rng, Eigen::Index(m));
    out.push_back(conjugate_pair(fx.sys, base, s, SpaceNorm::lp(m, PNorm::Two),
                                 "conjugate of " + base.label));
  }
  return out;
}

} // namespace xprod
