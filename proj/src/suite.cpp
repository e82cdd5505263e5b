#include "xprod/suite.hpp"

#include "xprod/actions.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"
#include "xprod/tensor.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <chrono>
#include <cmath>
#include <sstream>

namespace xprod {

using nlohmann::json;

namespace {

std::string sci(double x)
{
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Accumulates errors and slacks; the first failure names itself and keeps its input.
struct Tally {
  CheckRecord rec;
  bool ok = true;

  void fail(const std::string& what, const json& input = nullptr)
  {
    if (ok) {
      rec.detail = what;
      rec.reproducer = input;
    }
    ok = false;
  }
  void error(double e, double tol, const std::string& what, const json& input = nullptr)
  {
    rec.max_error = std::max(rec.max_error, std::isnan(e) ? INFINITY : e);
    if (!(e <= tol))
      fail(what + ": error " + sci(e) + " above " + sci(tol), input);
  }
  void slack(double s)
  {
    rec.bound_slack = rec.bound_slack ? std::min(*rec.bound_slack, s) : s;
  }
  // lhs <= rhs up to a relative rounding allowance
  void bound(double lhs, double rhs, double tol, const std::string& what, const json& input = nullptr)
  {
    slack(rhs - lhs);
    if (!(lhs <= rhs + tol * std::max(1.0, std::abs(rhs))))
      fail(what + ": " + sci(lhs) + " > " + sci(rhs), input);
  }
  void require(bool c, const std::string& what, const json& input = nullptr)
  {
    if (!c)
      fail(what, input);
  }
  void note(const std::string& s)
  {
    if (ok && !s.empty())
      rec.detail = rec.detail.empty() ? s : rec.detail + "; " + s;
  }
  CheckRecord done()
  {
    rec.status = ok ? Status::Pass : Status::Fail;
    return rec;
  }
};

CheckRecord skipped(const std::string& why)
{
  CheckRecord r;
  r.status = Status::Skipped;
  r.detail = why;
  return r;
}

double images_diff(const std::vector<Mat>& a, const std::vector<Mat>& b)
{
  if (a.size() != b.size())
    return INFINITY;
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, rel_diff(a[k], b[k]));
  return worst;
}

double pair_diff(const CovariantPair& a, const CovariantPair& b)
{
  return std::max(images_diff(a.pi, b.pi), images_diff(a.u, b.u));
}

json pair_json(const CovariantPair& p)
{
  json pi = json::array(), u = json::array();
  for (const auto& x : p.pi)
    pi.push_back(matrix_to_json(x));
  for (const auto& x : p.u)
    u.push_back(matrix_to_json(x));
  return {{"label", p.label}, {"flavor", to_string(p.flavor)}, {"pi", pi}, {"u", u}};
}

Mat kron_mat(const Mat& a, const Mat& b)
{
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RepClass non_induced(const Fixture& fx)
{
  RepClass out;
  for (const auto& p : fx.r)
    if (p.space.kind() != SpaceNorm::Kind::Blocks)
      out.push_back(p);
  return out;
}

CovariantPair small_pair(const Fixture& fx)
{
  RepClass s = non_induced(fx);
  return s.empty() ? lp_class(fx, PNorm::Two, 1).front() : s.front();
}

// (pi(a)^T, U_r^T) reverses both products and turns the law alpha into alpha^-1.
CovariantPair transposed(const DynamicalSystem& sys, const CovariantPair& p, const std::string& label)
{
  std::vector<Mat> pi, u;
  for (const auto& x : p.pi)
    pi.push_back(x.transpose());
  for (const auto& x : p.u)
    u.push_back(x.transpose());
  return make_pair(sys, SpaceNorm::lp(p.space_dim(), PNorm::Two), pi, u, Flavor::AA, CovarianceLaw::AlphaInverse,
                   label);
}

// p (x) I_k when left, I_k (x) p otherwise, on l^2.
CovariantPair tensor_slot(const DynamicalSystem& sys, const CovariantPair& p, std::size_t k, bool left)
{
  Mat id = Mat::Identity(Eigen::Index(k), Eigen::Index(k));
  std::vector<Mat> pi, u;
  for (const auto& x : p.pi)
    pi.push_back(left ? kron_mat(x, id) : kron_mat(id, x));
  for (const auto& x : p.u)
    u.push_back(left ? kron_mat(x, id) : kron_mat(id, x));
  return make_pair(sys, SpaceNorm::lp(p.space_dim() * k, PNorm::Two), pi, u, p.flavor, p.law,
                   p.label + (left ? " (x) I" : " in slot 2"));
}

CovariantPair conjugated(const DynamicalSystem& sys, const CovariantPair& p, const Mat& s, const Mat& si,
                         const std::string& label)
{
  std::vector<Mat> pi, u;
  for (const auto& x : p.pi)
    pi.push_back(s * x * si);
  for (const auto& x : p.u)
    u.push_back(s * x * si);
  return make_pair(sys, p.space, pi, u, p.flavor, p.law, label);
}

// ---------------------------------------------------------------- core

CheckRecord check_convolution(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  BeurlingAlgebra b(sys, c.fx.w);
  const std::size_t n = sys.order(), d = sys.dim();
  for (int k = 0; k < 100; ++k) {
    AFunction f = AFunction::random(c.rng, n, d), g = AFunction::random(c.rng, n, d),
              h = AFunction::random(c.rng, n, d);
    AFunction lhs = b.multiply(b.multiply(f, g), h), rhs = b.multiply(f, b.multiply(g, h));
    json in = {{"f", afunction_to_json(f)}, {"g", afunction_to_json(g)}, {"h", afunction_to_json(h)}};
    t.error(max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs.flat())), c.tol.tight, "associativity", in);
    t.bound(b.norm(b.multiply(f, g)), b.submultiplicative_constant() * b.norm(f) * b.norm(g), c.tol.inequality,
            "C_alpha-submultiplicativity", in);
  }
  return t.done();
}

CheckRecord check_direct_sum(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const std::pair<PNorm, const char*> ps[] = {{PNorm::One, "p=1"}, {PNorm::Two, "p=2"}, {PNorm::Inf, "p=inf"}};
  std::size_t pairs = 0;
  for (const auto& [p, name] : ps) {
    RepClass s = lp_class(c.fx, p, 3);
    pairs = s.size();
    CovariantPair sum = direct_sum_realization(sys, s, p);
    for (int k = 0; k < 50; ++k) {
      AFunction f = AFunction::random(c.rng, sys.order(), sys.dim());
      NormBounds sigma = seminorm(sys, s, f);
      NormBounds direct = sum.space.operator_norm(integrated_form(sys, sum, f));
      json in = {{"f", afunction_to_json(f)}, {"p", name}};
      t.require(sigma.is_exact() && direct.is_exact(), std::string("norms not exact for ") + name, in);
      t.error(std::abs(direct.value() - sigma.value()) / std::max(1e-300, sigma.value()), c.tol.tight,
              std::string("direct sum vs sigma^S, ") + name, in);
    }
  }
  t.note(std::to_string(pairs) + " pairs per class");
  return t.done();
}

CheckRecord check_canonical(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  CrossedProduct cp = build_crossed_product(sys, c.fx.r);
  CanonicalMaps maps = canonical_maps(cp);
  for (int k = 0; k < 20; ++k) {
    AFunction f = AFunction::random(c.rng, sys.order(), sys.dim());
    t.error(rel_diff(canonical_integrated(cp, maps, f), cp.left_mult(cp.q(f))), c.tol.tight,
            "(i_A x| i_G)(f) vs left multiplication", {{"f", afunction_to_json(f)}});
  }
  if (!cp.unit()) {
    t.note("sandwich needs a unital crossed product");
    return t.done();
  }
  const double m = 1.0;
  const double tol = 1e-9;
  for (int k = 0; k < 5; ++k) {
    AFunction f = AFunction::random(c.rng, sys.order(), sys.dim());
    Vec q = cp.q(f);
    NormBounds lam = left_mult_norm(cp, q, c.rng, 6);
    NormBounds sigma = cp.norm(q);
    json in = {{"f", afunction_to_json(f)}};
    t.bound(lam.lower, sigma.upper, tol, "||lambda(q f)|| <= ||q f||", in);
    t.bound(sigma.lower, m * lam.lower, tol, "||q f|| <= M ||lambda(q f)||", in);
  }
  return t.done();
}

CheckRecord check_kernel_oracle(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  std::vector<std::pair<std::string, RepClass>> classes = {{"R", c.fx.r}};
  RepClass small = non_induced(c.fx);
  if (!small.empty())
    classes.push_back({"R without induced pair", small});
  std::ostringstream dims;
  for (const auto& [name, r] : classes) {
    Mat svd = class_kernel(sys, r);
    Mat brute = brute_force_kernel(sys, r);
    dims << name << ": " << svd.cols() << "/" << brute.cols() << " ";
    if (svd.cols() != brute.cols()) {
      t.fail(name + ": kernel dimensions differ (" + std::to_string(svd.cols()) + " vs " +
             std::to_string(brute.cols()) + ")");
      continue;
    }
    double worst = 0.0;
    for (Eigen::Index j = 0; j < svd.cols(); ++j)
      worst = std::max(worst, distance_to_span(brute, svd.col(j)));
    for (Eigen::Index j = 0; j < brute.cols(); ++j)
      worst = std::max(worst, distance_to_span(svd, brute.col(j)));
    t.error(worst, c.tol.tight, name + ": mutual containment");
  }
  t.note("kernel dims svd/brute " + dims.str());
  return t.done();
}

// ---------------------------------------------------------------- beurling

CheckRecord check_inequality_chain(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  InequalityChain chain(sys, c.fx.w, c.fx.r);
  for (int k = 0; k < 100; ++k) {
    AFunction f = AFunction::random(c.rng, sys.order(), sys.dim());
    ChainReport rep = chain.check(f, c.tol.inequality);
    json in = {{"f", afunction_to_json(f)}};
    for (int i = 0; i < 3; ++i) {
      t.slack(rep.slack[i]);
      t.require(rep.holds[i], "inequality " + std::to_string(i + 1) + " fails, slack " + sci(rep.slack[i]), in);
    }
    if (rep.corollary_regime)
      t.error(rep.corollary_error, c.tol.equality, "sigma^R vs ||f||_{1,w}", in);
  }
  t.note(chain.corollary_regime() ? "equality regime" : "strict chain");
  t.note(sys.isometric() ? "isometric action" : "non-isometric action");
  return t.done();
}

CheckRecord check_induced_norms(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const FiniteGroup& g = sys.group();
  CovariantPair ip = induced_pair(sys, c.fx.w);
  for (std::size_t r = 0; r < g.order(); ++r) {
    double oracle = 0.0;
    for (std::size_t s = 0; s < g.order(); ++s)
      oracle = std::max(oracle, c.fx.w(g.mul(r, s)) / c.fx.w(s));
    NormBounds nb = ip.space.operator_norm(ip.u[r]);
    t.error(std::abs(nb.value() - oracle) / oracle, c.tol.equality, "||Lambda_" + std::to_string(r) + "||");
    t.bound(oracle, c.fx.w(r), c.tol.inequality, "||Lambda_r|| <= w(r)");
  }
  NormBounds pin = ip.space.rep_norm(sys.algebra(), ip.pi);
  t.bound(pin.lower, sys.c_alpha_value(), c.tol.inequality, "||lambda~|| <= C_alpha");
  return t.done();
}

// ---------------------------------------------------------------- correspondence

CheckRecord check_beurling_correspondence(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "both";
  const auto& sys = c.fx.sys;
  if (!sys.algebra().left_identity())
    return skipped(sys.algebra().name() + " has no left identity; reconstruction needs one");
  for (const auto& p : random_nondegenerate_pairs(c.fx, c.rng, 3)) {
    json in = {{"pair", pair_json(p)}};
    ConvolutionRep rep = beurling_rep(sys, p);
    t.error(rep.multiplicativity_error(), c.tol.tight, "T multiplicative", in);
    CovariantPair back = rep_to_pair(rep);
    t.error(pair_diff(back, p), c.tol.tight, "pair -> rep -> pair", in);
    ConvolutionRep again = beurling_rep(sys, back);
    t.error(images_diff(again.images, rep.images), c.tol.tight, "rep -> pair -> rep", in);
    RepBounds b = correspondence_bounds(sys, c.fx.w, p, rep, back, c.tol.inequality);
    for (int i = 0; i < 3; ++i) {
      t.slack(b.slack[i]);
      t.require(b.holds[i], "bound (" + std::to_string(i + 1) + ") fails, slack " + sci(b.slack[i]), in);
    }
  }
  return t.done();
}

CheckRecord check_crossed_correspondence(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "both";
  const auto& sys = c.fx.sys;
  if (!sys.algebra().left_identity())
    return skipped(sys.algebra().name() + " has no left identity; reconstruction needs one");

  auto roundtrip = [&](const CrossedProduct& cp, const CovariantPair& p, const std::string& tag) {
    json in = {{"pair", pair_json(p)}, {"class", tag}};
    ConvolutionRep rep = pair_to_rep(cp, p);
    t.error(rep.multiplicativity_error(), c.tol.tight, tag + ": T multiplicative", in);
    CovariantPair back = rep_to_pair(rep);
    t.error(pair_diff(back, p), c.tol.tight, tag + ": pair -> rep -> pair", in);
    t.error(images_diff(pair_to_rep(cp, back).images, rep.images), c.tol.tight, tag + ": rep -> pair -> rep", in);
  };

  CrossedProduct full = build_crossed_product(sys, c.fx.r);
  for (const auto& p : random_nondegenerate_pairs(c.fx, c.rng, 3))
    roundtrip(full, p, "R");

  RepClass small = non_induced(c.fx);
  if (!small.empty()) {
    CrossedProduct part = build_crossed_product(sys, small);
    for (const auto& p : small) {
      roundtrip(part, p, "R without induced pair");
      Mat s = random_invertible(c.rng, Eigen::Index(p.space_dim()));
      roundtrip(part, conjugated(sys, p, s, s.inverse(), p.label + " conjugated"), "R without induced pair");
    }
    if (part.kernel().cols() > 0) {
      bool rejected = false;
      try {
        pair_to_rep(part, induced_pair(sys, c.fx.w));
      } catch (const Error& e) {
        rejected = e.kind() == ErrorKind::KernelNotRespected;
      }
      t.require(rejected, "a pair that does not vanish on the kernel was accepted");
    }
    t.note("kernel dim without induced pair " + std::to_string(part.kernel().cols()));
  }
  return t.done();
}

CheckRecord check_scalar_classical(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "pair->rep";
  const auto& sys = c.fx.sys;
  if (sys.dim() != 1)
    return skipped("A is not one-dimensional");
  RepClass pairs;
  Mat one = Mat::Identity(1, 1);
  for (const auto& chi : c.fx.characters) {
    std::vector<Mat> u;
    for (std::size_t r = 0; r < sys.order(); ++r)
      u.push_back(chi(r) * one);
    pairs.push_back(make_pair(sys, SpaceNorm::lp(1, PNorm::Two), {one}, u, Flavor::MM, std::nullopt, "character"));
  }
  for (const auto& p : random_nondegenerate_pairs(c.fx, c.rng, 3))
    pairs.push_back(p);
  for (const auto& p : pairs) {
    NormBounds tn = l1_operator_norm(sys, c.fx.w, p.space, [&](const AFunction& f) {
      return integrated_form(sys, p, f);
    });
    double oracle = 0.0;
    for (std::size_t r = 0; r < sys.order(); ++r)
      oracle = std::max(oracle, p.space.operator_norm(p.u[r]).value() / c.fx.w(r));
    t.error(std::abs(tn.value() - oracle) / oracle, c.tol.equality, "||T^U|| vs sup_r ||U_r||/w(r)",
            {{"pair", pair_json(p)}});
  }
  return t.done();
}

CheckRecord check_centralizer(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  CrossedProduct cp = build_crossed_product(sys, c.fx.r);
  if (!cp.unit())
    return skipped("the crossed product is not unital");
  CanonicalMaps maps = canonical_maps(cp);
  for (const auto& p : random_nondegenerate_pairs(c.fx, c.rng, 2)) {
    json in = {{"pair", pair_json(p)}};
    ConvolutionRep rep = pair_to_rep(cp, p);
    const auto q = Eigen::Index(cp.quotient_dim());
    Vec x = random_vec(c.rng, q);
    t.error(rel_diff(centralizer_extend(cp, rep, cp.left_mult(x)), rep.apply_coords(x)), c.tol.tight,
            "Tbar(lambda(x)) = T(x)", in);
    t.error(rel_diff(centralizer_extend(cp, rep, Mat::Identity(q, q)),
                     Mat::Identity(Eigen::Index(p.space_dim()), Eigen::Index(p.space_dim()))),
            c.tol.tight, "Tbar(id) = id", in);
    for (std::size_t i = 0; i < sys.dim(); ++i)
      t.error(rel_diff(centralizer_extend(cp, rep, maps.i_a[i]), p.pi[i]), c.tol.tight, "Tbar(i_A(a)) = pi(a)",
              in);
    for (std::size_t r = 0; r < sys.order(); ++r)
      t.error(rel_diff(centralizer_extend(cp, rep, maps.i_g[r]), p.u[r]), c.tol.tight, "Tbar(i_G(r)) = U_r", in);
  }
  return t.done();
}

// ---------------------------------------------------------------- anti

CheckRecord check_hat_anti(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const std::size_t n = sys.order(), d = sys.dim();
  std::vector<Character> chars = c.fx.characters;
  chars.push_back(modular_character(sys.group()));
  for (const auto& chi : chars) {
    const double growth = sys.c_alpha_value() * character_inverse(chi).max_modulus();
    const bool isometric = sys.isometric() && std::abs(chi.max_modulus() - 1.0) < 1e-15 &&
                           std::abs(character_inverse(chi).max_modulus() - 1.0) < 1e-15;
    for (int k = 0; k < 20; ++k) {
      AFunction f = AFunction::random(c.rng, n, d), g = AFunction::random(c.rng, n, d);
      json in = {{"f", afunction_to_json(f)}, {"g", afunction_to_json(g)}};
      AFunction lhs = hat_anti_iso(sys, chi, twisted_convolve(sys, f, g));
      AFunction rhs = opposite_convolve(sys, hat_anti_iso(sys, chi, g), hat_anti_iso(sys, chi, f));
      t.error(max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs.flat())), c.tol.tight, "hat(f*g) = hat g *o hat f",
              in);
      t.error(max_abs_diff(check_anti_iso(sys, chi, hat_anti_iso(sys, chi, f)), f) / std::max(1.0, max_abs(f.flat())),
              c.tol.tight, "check(hat f) = f", in);
      t.error(max_abs_diff(hat_anti_iso(sys, chi, check_anti_iso(sys, chi, f)), f) / std::max(1.0, max_abs(f.flat())),
              c.tol.tight, "hat(check f) = f", in);
      double nf = weighted_norm(sys.algebra(), f, c.fx.w);
      double nh = weighted_norm(sys.algebra(), hat_anti_iso(sys, chi, f), c.fx.w);
      t.bound(nh, growth * nf, c.tol.inequality, "||hat f|| <= C_alpha max|chi^-1| ||f||", in);
      if (isometric)
        t.error(std::abs(nh - nf) / nf, c.tol.equality, "hat is isometric", in);
    }
  }
  return t.done();
}

CheckRecord check_anti_correspondence(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "both";
  const auto& sys = c.fx.sys;
  if (!sys.algebra().right_identity())
    return skipped(sys.algebra().name() + " has no right identity; reconstruction needs one");
  // transposes of non-degenerate pairs can degenerate (the column algebra), so keep
  // only the non-degenerate ones and add conjugates of the right-regular line
  RepClass pairs;
  for (const auto& p : random_nondegenerate_pairs(c.fx, c.rng, 3)) {
    CovariantPair q = transposed(sys, p, "transpose of " + p.label);
    if (q.non_degenerate)
      pairs.push_back(q);
  }
  for (std::size_t k = 0; k < c.fx.characters.size() && k < 2; ++k) {
    CovariantPair line = covariant_action(sys, 13, c.fx.characters[k]).pair;
    if (line.flavor != Flavor::AA)
      continue;
    const std::size_t m = line.space_dim();
    Mat s = random_invertible(c.rng, Eigen::Index(m));
    pairs.push_back(line);
    pairs.push_back(conjugated(sys, with_space(sys, line, SpaceNorm::lp(m, PNorm::Two)), s, s.inverse(),
                               line.label + " conjugated"));
  }
  if (pairs.size() < 3)
    t.fail("fewer than three non-degenerate (a,a) pairs");
  for (const auto& p : pairs) {
    json in = {{"pair", pair_json(p)}};
    ConvolutionRep rep = anti_pair_to_antirep(sys, p);
    t.error(rep.multiplicativity_error(), c.tol.tight, "T anti-multiplicative", in);
    CovariantPair back = antirep_to_anti_pair(rep);
    t.error(pair_diff(back, p), c.tol.tight, "anti pair -> anti rep -> anti pair", in);
    t.error(images_diff(anti_pair_to_antirep(sys, back).images, rep.images), c.tol.tight,
            "anti rep -> anti pair -> anti rep", in);
    if (p.space.kind() == SpaceNorm::Kind::Lp) {
      RepBounds b = correspondence_bounds(sys, c.fx.w, p, rep, back, c.tol.inequality);
      for (int i = 0; i < 3; ++i) {
        t.slack(b.slack[i]);
        t.require(b.holds[i], "bound (" + std::to_string(i + 1) + ") fails", in);
      }
    }
  }
  return t.done();
}

struct BimoduleData {
  CovariantPair pm, pa;
};

BimoduleData bimodule_data(const CheckContext& c)
{
  const auto& sys = c.fx.sys;
  CovariantPair base = small_pair(c.fx);
  const std::size_t m = base.space_dim();
  Mat s1 = random_invertible(c.rng, Eigen::Index(m)), s2 = random_invertible(c.rng, Eigen::Index(m));
  CovariantPair left = conjugated(sys, with_space(sys, base, SpaceNorm::lp(m, PNorm::Two)), s1, s1.inverse(),
                                  "left factor");
  CovariantPair right = transposed(
      sys, conjugated(sys, with_space(sys, base, SpaceNorm::lp(m, PNorm::Two)), s2, s2.inverse(), "right factor"),
      "right factor");
  return {tensor_slot(sys, left, m, true), tensor_slot(sys, right, m, false)};
}

CheckRecord check_bimodule(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "both";
  const auto& sys = c.fx.sys;
  if (!sys.algebra().left_identity() || !sys.algebra().right_identity())
    return skipped(sys.algebra().name() + " lacks a two-sided pair of identities");
  BimoduleData bd = bimodule_data(c);
  json in = {{"pm", pair_json(bd.pm)}, {"pa", pair_json(bd.pa)}};
  BimoduleReps reps = bimodule_correspondence(sys, bd.pm, sys, bd.pa, c.tol.tight);
  t.error(reps.commutator, c.tol.tight, "[T_m, T_a]", in);
  t.error(reps.t_m.multiplicativity_error(), c.tol.tight, "T_m multiplicative", in);
  t.error(reps.t_a.multiplicativity_error(), c.tol.tight, "T_a anti-multiplicative", in);
  auto [pm, pa] = bimodule_inverse(reps);
  t.error(pair_diff(pm, bd.pm), c.tol.tight, "(m,m) pair roundtrip", in);
  t.error(pair_diff(pa, bd.pa), c.tol.tight, "(a,a) pair roundtrip", in);
  t.error(max_commutator(pm.pi, pa.pi), c.tol.tight, "recovered pi_m vs pi_a", in);
  t.error(max_commutator(pm.u, pa.u), c.tol.tight, "recovered U_m vs U_a", in);
  return t.done();
}

// ---------------------------------------------------------------- actions

CheckRecord check_catalogue(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  std::vector<std::string> notes;
  int lines = 0;
  for (const auto& chi : c.fx.characters) {
    for (int table = 2; table <= 3; ++table) {
      const int count = table == 2 ? 16 : 8;
      for (int l = 1; l <= count; ++l) {
        TableAction a = table == 2 ? covariant_action(sys, l, chi) : commuting_action(sys, l, chi);
        const ActionLine& spec = table == 2 ? covariant_line(l) : commuting_line(l);
        t.error(covariance_defect(sys, a.pair.pi, a.pair.u, spec.law), c.tol.tight, a.pair.label + " covariance");
        const FlavorReport& e = a.empirical;
        bool pi_ok = pi_multiplicative(spec.flavor) ? e.pi_mult : e.pi_anti;
        bool u_ok = u_multiplicative(spec.flavor) ? e.u_mult : e.u_anti;
        t.require(pi_ok && u_ok, a.discrepancy.empty() ? a.pair.label + " flavor" : a.discrepancy);
        t.require(a.pair.non_degenerate, a.pair.label + " degenerate");
        ++lines;
      }
    }
  }
  t.note(std::to_string(lines) + " lines over " + std::to_string(c.fx.characters.size()) + " characters");
  return t.done();
}

CovariantPair conj_by(const DynamicalSystem& sys, const CovariantPair& p, const Mat& s, const Mat& si)
{
  return conjugated(sys, p, s, si, p.label + " conjugated");
}

CheckRecord check_equivalences(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const FiniteGroup& g = sys.group();
  const std::size_t d = sys.dim();
  const auto& chars = c.fx.characters;
  for (const auto& ca : chars)
    for (const auto& cb : chars) {
      // T_psi line1(ca) T_psi = line2(cb) with psi = ca/cb
      Character psi = character_product(ca, character_inverse(cb));
      Mat tm = t_chi_matrix(g, d, psi);
      t.error(pair_diff(conj_by(sys, covariant_action(sys, 1, ca).pair, tm, tm), covariant_action(sys, 2, cb).pair),
              c.tol.tight, "T: line 1 -> line 2");
      // T_psi line3(ca) T_psi = line4(cb) with psi = cb/ca
      Character psi2 = character_inverse(psi);
      Mat tm2 = t_chi_matrix(g, d, psi2);
      t.error(pair_diff(conj_by(sys, covariant_action(sys, 3, ca).pair, tm2, tm2), covariant_action(sys, 4, cb).pair),
              c.tol.tight, "T: line 3 -> line 4");
      // S_psi line1(ca) S_psi^-1 = line4(cb) with psi = ca/cb
      t.error(pair_diff(conj_by(sys, covariant_action(sys, 1, ca).pair, s_chi_matrix(sys, psi),
                                s_chi_inverse_matrix(sys, psi)),
                        covariant_action(sys, 4, cb).pair),
              c.tol.tight, "S: line 1 -> line 4");
    }
  // commuting catalogue: line 2 = T_1 line 1 T_1, line 1 = S_chi^-1 P S_chi with P the
  // untwisted pair (a f(s), f(r^-1 s))
  const NormedAlgebra& a = sys.algebra();
  const std::size_t n = g.order(), m = n * d;
  std::vector<Mat> pi(d, Mat::Zero(m, m)), u(n, Mat::Zero(m, m));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < n; ++s)
      pi[i].block(s * d, s * d, d, d) = a.left_regular(a.basis(i));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      u[r].block(s * d, g.mul(g.inv(r), s) * d, d, d) = Mat::Identity(d, d);
  CovariantPair plain = make_pair(sys, SpaceNorm::blocks(a, std::vector<double>(n, 1.0)), pi, u, Flavor::MM,
                                  CovarianceLaw::Commuting, "untwisted");
  Mat t1 = t_chi_matrix(g, d, trivial_character(g));
  for (const auto& chi : chars) {
    t.error(pair_diff(conj_by(sys, commuting_action(sys, 1, chi).pair, t1, t1), commuting_action(sys, 2, chi).pair),
            c.tol.tight, "T: commuting line 1 -> line 2");
    t.error(pair_diff(conj_by(sys, plain, s_chi_inverse_matrix(sys, chi), s_chi_matrix(sys, chi)),
                      commuting_action(sys, 1, chi).pair),
            c.tol.tight, "S: untwisted pair -> commuting line 1");
  }
  return t.done();
}

CheckRecord check_companions(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const DynamicalSystem companions[] = {sys.with_opposite_group(), sys.with_opposite_algebra(), sys.opposite()};
  const char* names[] = {"(A, G^o, alpha^o)", "(A^o, G, alpha)", "(A^o, G^o, alpha^o)"};
  for (const auto& chi : c.fx.characters)
    for (int k = 0; k < 3; ++k) {
      for (int l = 1; l <= 4; ++l)
        t.error(pair_diff(covariant_action(companions[k], l, chi).pair,
                          covariant_action(sys, l + 4 * (k + 1), chi).pair),
                c.tol.tight, "covariant line " + std::to_string(l) + " over " + names[k]);
      for (int l = 1; l <= 2; ++l)
        t.error(pair_diff(commuting_action(companions[k], l, chi).pair,
                          commuting_action(sys, l + 2 * (k + 1), chi).pair),
                c.tol.tight, "commuting line " + std::to_string(l) + " over " + names[k]);
    }
  return t.done();
}

// ---------------------------------------------------------------- tensor

struct TensorData {
  CrossedProduct cp;
  CovariantPair base;
};

std::optional<TensorData> tensor_data(const CheckContext& c)
{
  CovariantPair base = small_pair(c.fx);
  CrossedProduct cp = build_crossed_product(c.fx.sys, {base});
  if (!cp.unit())
    return std::nullopt;
  return TensorData{cp, base};
}

CheckRecord check_tensor_nfold(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "both";
  const auto& sys = c.fx.sys;
  auto td = tensor_data(c);
  if (!td)
    return skipped("the crossed product is not unital");
  const std::size_t m = td->base.space_dim();
  // n = 2
  std::vector<CovariantPair> two = {tensor_slot(sys, td->base, m, true), tensor_slot(sys, td->base, m, false)};
  std::vector<CrossedProduct> cps2 = {td->cp, td->cp};
  NFold nf = n_fold_correspondence(cps2, two, c.tol.tight);
  t.error(nf.product.multiplicativity_error(), c.tol.tight, "n=2 product multiplicative");
  auto back = n_fold_inverse(cps2, nf.product);
  for (std::size_t i = 0; i < 2; ++i)
    t.error(pair_diff(back[i], two[i]), c.tol.tight, "n=2 pair " + std::to_string(i) + " recovered");
  std::vector<Structure> fs = {td->cp.structure(), td->cp.structure()};
  std::vector<Vec> units = {*td->cp.unit(), *td->cp.unit()};
  auto parts = decompose_rep(nf.product, fs, units);
  for (std::size_t i = 0; i < 2; ++i)
    t.error(images_diff(parts[i].images, nf.factors[i].images), c.tol.tight, "decompose o odot");
  t.error(images_diff(odot(parts[0], parts[1]).images, nf.product.images), c.tol.tight, "odot o decompose");

  // n = 3 on C^m (x) C^m (x) C^m
  std::vector<CovariantPair> three;
  for (std::size_t slot = 0; slot < 3; ++slot) {
    std::vector<Mat> pi, u;
    auto place = [&](const Mat& x) {
      Mat out = Mat::Identity(1, 1);
      for (std::size_t k = 0; k < 3; ++k)
        out = kron_mat(out, k == slot ? x : Mat(Mat::Identity(Eigen::Index(m), Eigen::Index(m))));
      return out;
    };
    for (const auto& x : td->base.pi)
      pi.push_back(place(x));
    for (const auto& x : td->base.u)
      u.push_back(place(x));
    three.push_back(make_pair(sys, SpaceNorm::lp(m * m * m, PNorm::Two), pi, u, Flavor::MM, std::nullopt,
                              "slot " + std::to_string(slot)));
  }
  std::vector<CrossedProduct> cps3 = {td->cp, td->cp, td->cp};
  NFold nf3 = n_fold_correspondence(cps3, three, c.tol.tight);
  AlgebraRep right = odot(nf3.factors[0], odot(nf3.factors[1], nf3.factors[2]));
  t.error(images_diff(right.images, nf3.product.images), c.tol.tight, "n=3 associativity");
  auto back3 = n_fold_inverse(cps3, nf3.product);
  for (std::size_t i = 0; i < 3; ++i)
    t.error(pair_diff(back3[i], three[i]), c.tol.tight, "n=3 pair " + std::to_string(i) + " recovered");
  return t.done();
}

CheckRecord check_tensor_uniqueness(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  auto td = tensor_data(c);
  if (!td)
    return skipped("the crossed product is not unital");
  const std::size_t m = td->base.space_dim();
  std::vector<CovariantPair> two = {tensor_slot(sys, td->base, m, true), tensor_slot(sys, td->base, m, false)};
  NFold nf = n_fold_correspondence({td->cp, td->cp}, two, c.tol.tight);
  const std::vector<cd> cs = {1.0, -1.0, 2.0, 0.5, cd(0.0, 1.0), cd(1.0 + 1e-3, 0.0)};
  auto sweep = uniqueness_sweep(nf.product, nf.factors[0], nf.factors[1], cs, c.tol.tight);
  t.error(sweep[0].product_error, c.tol.tight, "c = 1 reproduces the product");
  t.error(sweep[0].multiplicativity, c.tol.tight, "c = 1 keeps both factors multiplicative");
  for (std::size_t k = 1; k < sweep.size(); ++k) {
    std::ostringstream os;
    os << "c = " << sweep[k].c << " accepted";
    t.require(!sweep[k].pass, os.str());
  }

  // ||pi_i|| <= M_1 M_2 ||lambda|| ||pi_1 . pi_2|| with M_i = sigma(1) and ||lambda|| = 1 on a unital factor;
  // both sides are sampled witnesses, and the samples x (x) 1, 1 (x) y feed the right-hand side
  const CrossedProduct& cp = td->cp;
  const Vec one = *cp.unit();
  const double m1 = cp.norm(one).upper;
  const SpaceNorm& x = nf.product.space;
  const auto q = Eigen::Index(cp.quotient_dim());
  std::array<double, 2> factor{};
  double product = 0.0;
  for (int k = 0; k < 20; ++k) {
    Vec a = random_vec(c.rng, q), b = random_vec(c.rng, q);
    const double sa = cp.norm(a).upper, sb = cp.norm(b).upper;
    if (sa <= 0.0 || sb <= 0.0)
      continue;
    factor[0] = std::max(factor[0], x.operator_norm(nf.factors[0].apply(a)).lower / sa);
    factor[1] = std::max(factor[1], x.operator_norm(nf.factors[1].apply(b)).lower / sb);
    for (const auto& [u, v, su, sv] :
         {std::tuple{a, b, sa, sb}, std::tuple{a, one, sa, m1}, std::tuple{one, b, m1, sb}})
      product = std::max(product, x.operator_norm(nf.product.apply(kron_vec(u, v))).lower / (su * sv));
  }
  for (int i = 0; i < 2; ++i)
    t.bound(factor[i], m1 * m1 * product, c.tol.inequality, "factor norm bound " + std::to_string(i + 1));
  return t.done();
}

CheckRecord check_odot_bound(const CheckContext& c)
{
  Tally t;
  const auto& sys = c.fx.sys;
  const NormedAlgebra& a = sys.algebra();
  CovariantPair base = small_pair(c.fx);
  const std::size_t m = base.space_dim(), d = a.dim();
  const Mat id = Mat::Identity(Eigen::Index(m), Eigen::Index(m));
  SpaceNorm space = SpaceNorm::lp(m * m, PNorm::Two);
  AlgebraRep p1{a.structure(), space, {}}, p2{a.structure(), space, {}};
  for (const auto& x : base.pi) {
    p1.images.push_back(kron_mat(x, id));
    p2.images.push_back(kron_mat(id, x));
  }
  AlgebraRep prod = odot(p1, p2, c.tol.tight);
  t.error(prod.multiplicativity_error(), c.tol.tight, "pi1 . pi2 multiplicative");
  const double n1 = space.rep_norm(a, p1.images).upper, n2 = space.rep_norm(a, p2.images).upper;
  for (int k = 0; k < 100; ++k) {
    Vec v = random_vec(c.rng, Eigen::Index(d * d));
    ProjectiveBounds pb = projective_norm_bounds(a, a, v, c.rng);
    json in = {{"t", matrix_to_json(Mat(v))}};
    t.bound(pb.lower, pb.upper, c.tol.inequality, "projective lower <= upper", in);
    t.bound(space.operator_norm(prod.apply(v)).value(), n1 * n2 * pb.upper, c.tol.inequality,
            "||(pi1 . pi2)(t)|| <= ||pi1|| ||pi2|| upper(t)", in);
  }
  double gap = 0.0;
  for (int k = 0; k < 10; ++k) {
    Vec x = random_vec(c.rng, Eigen::Index(d)), y = random_vec(c.rng, Eigen::Index(d));
    ProjectiveBounds pb = projective_norm_bounds(a, a, kron_vec(x, y), c.rng);
    double xy = a.norm(x) * a.norm(y);
    t.bound(pb.lower, xy, c.tol.inequality, "elementary lower <= ||x|| ||y||");
    t.bound(xy, pb.upper, c.tol.inequality, "||x|| ||y|| <= elementary upper");
    gap = std::max(gap, (pb.upper - pb.lower) / xy);
  }
  t.note("elementary tensor bound gap " + sci(gap));
  return t.done();
}

CheckRecord check_bimodule_encoding(const CheckContext& c)
{
  Tally t;
  t.rec.direction = "pair->rep";
  const auto& sys = c.fx.sys;
  if (!sys.algebra().left_identity() || !sys.algebra().right_identity())
    return skipped(sys.algebra().name() + " lacks a two-sided pair of identities");
  BimoduleData bd = bimodule_data(c);
  BimoduleReps reps = bimodule_correspondence(sys, bd.pm, sys, bd.pa, c.tol.tight);
  auto [opp, q] = retype_pair(sys, bd.pa);
  const Character mod = modular_character(sys.group());
  const std::size_t n = sys.order(), d = sys.dim();
  // T_a(g) = T'(g^) with T' the integrated form over the opposite system
  for (std::size_t k = 0; k < n * d; ++k) {
    AFunction e(n, d, Vec::Unit(Eigen::Index(n * d), Eigen::Index(k)));
    t.error(rel_diff(integrated_form(opp, q, hat_anti_iso(sys, mod, e)), reps.t_a.images[k]), c.tol.tight,
            "T_a vs retyped integrated form");
  }
  // the two-factor product over (A,G,alpha) and its opposite reproduces T_m(f) T_a(g)
  CrossedProduct cp1 = build_crossed_product(sys, {bd.pm});
  CrossedProduct cp2 = build_crossed_product(opp, {q});
  NFold nf = n_fold_correspondence({cp1, cp2}, {bd.pm, q}, c.tol.tight);
  for (int k = 0; k < 20; ++k) {
    AFunction f = AFunction::random(c.rng, n, d), g = AFunction::random(c.rng, n, d);
    Mat lhs = reps.t_m(f) * reps.t_a(g);
    Mat rhs = nf.product.apply(kron_vec(cp1.q(f), cp2.q(hat_anti_iso(sys, mod, g))));
    t.error(rel_diff(rhs, lhs), c.tol.tight, "two-factor encoding vs bimodule output",
            {{"f", afunction_to_json(f)}, {"g", afunction_to_json(g)}});
  }
  return t.done();
}

// ---------------------------------------------------------------- plumbing

std::uint64_t stream_seed(std::uint64_t seed, const std::string& key)
{
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

} // namespace

Mat rref_nullspace(const Mat& m, double rel_tol)
{
  Mat a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const double tol = rel_tol * std::max(1.0, max_abs(a));
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index best = r;
    for (Eigen::Index i = r + 1; i < rows; ++i)
      if (std::abs(a(i, col)) > std::abs(a(best, col)))
        best = i;
    if (std::abs(a(best, col)) <= tol)
      continue;
    a.row(r).swap(a.row(best));
    a.row(r) /= a(r, col);
    for (Eigen::Index i = 0; i < rows; ++i)
      if (i != r && a(i, col) != 0.0)
        a.row(i) -= a(i, col) * a.row(r);
    pivot_cols.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(std::size_t(cols), false);
  for (auto p : pivot_cols)
    is_pivot[std::size_t(p)] = true;
  std::vector<Vec> out;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[std::size_t(f)])
      continue;
    Vec v = Vec::Zero(cols);
    v(f) = 1.0;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v(pivot_cols[i]) = -a(Eigen::Index(i), f);
    out.push_back(v);
  }
  Mat basis(cols, Eigen::Index(out.size()));
  for (std::size_t k = 0; k < out.size(); ++k)
    basis.col(Eigen::Index(k)) = out[k];
  return basis;
}

Mat brute_force_kernel(const DynamicalSystem& sys, const RepClass& r)
{
  const std::size_t n = sys.order(), d = sys.dim(), nd = n * d;
  Eigen::Index rows = 0;
  for (const auto& p : r)
    rows += Eigen::Index(p.space_dim() * p.space_dim());
  Mat m(rows, Eigen::Index(nd));
  for (std::size_t k = 0; k < nd; ++k) {
    AFunction e(n, d, Vec::Unit(Eigen::Index(nd), Eigen::Index(k)));
    Eigen::Index off = 0;
    for (const auto& p : r) {
      Vec v = vec_of(integrated_form(sys, p, e));
      m.block(off, Eigen::Index(k), v.size(), 1) = v;
      off += v.size();
    }
  }
  Mat raw = rref_nullspace(m);
  if (raw.cols() == 0)
    return raw;
  Eigen::HouseholderQR<Mat> qr(raw);
  return qr.householderQ() * Mat::Identity(raw.rows(), raw.cols());
}

const std::vector<CheckSpec>& check_registry()
{
  static const std::vector<CheckSpec> specs = {
      {"convolution-associativity", "twisted convolution algebra", "core", 1, check_convolution},
      {"direct-sum-realization", "isometric realization by a direct sum", "core", 2, check_direct_sum},
      {"left-regular-embedding", "canonical maps and the left regular representation", "core", 3, check_canonical},
      {"kernel-oracle", "kernel of the supremum seminorm", "core", 9, check_kernel_oracle},
      {"inequality-chain", "faithful induced representation inequality chain", "beurling", 4,
       check_inequality_chain},
      {"induced-pair-norms", "norms of the induced covariant pair", "beurling", 0, check_induced_norms},
      {"beurling-correspondence", "Beurling algebra correspondence", "correspondence", 5,
       check_beurling_correspondence},
      {"crossed-correspondence", "crossed product correspondence", "correspondence", 5,
       check_crossed_correspondence},
      {"scalar-classical", "classical weighted group algebra correspondence", "correspondence", 5,
       check_scalar_classical},
      {"centralizer-extension", "extension to left centralizers", "correspondence", 0, check_centralizer},
      {"anti-isomorphism", "anti-isomorphism onto the opposite system", "anti", 6, check_hat_anti},
      {"anti-correspondence", "anti-representation correspondence", "anti", 6, check_anti_correspondence},
      {"bimodule-correspondence", "Beurling bimodule correspondence", "anti", 6, check_bimodule},
      {"action-catalogue", "catalogue of canonical covariant and commuting actions", "actions", 7,
       check_catalogue},
      {"action-equivalences", "conjugation equivalences between catalogue lines", "actions", 7,
       check_equivalences},
      {"companion-derivations", "catalogue lines over companion systems", "actions", 7, check_companions},
      {"tensor-n-fold", "tensor products of crossed products", "tensor", 8, check_tensor_nfold},
      {"tensor-uniqueness", "uniqueness of product representations", "tensor", 8, check_tensor_uniqueness},
      {"tensor-norm-bound", "product representation norm bound", "tensor", 8, check_odot_bound},
      {"bimodule-encoding", "bimodules as a two-factor tensor product", "tensor", 8, check_bimodule_encoding},
  };
  return specs;
}

Report run_suite(const std::vector<Fixture>& fixtures, const std::string& suite, std::uint64_t seed,
                 const Tolerances& tol)
{
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::InvalidConfig, "unknown suite '" + suite + "'");
  Report report;
  report.suite = suite;
  report.seed = seed;
  for (const auto& fx : fixtures)
    report.fixtures.push_back(fx.id);
  for (const auto& spec : check_registry()) {
    if (suite != "all" && spec.suite != suite)
      continue;
    for (const auto& fx : fixtures) {
      Rng rng(stream_seed(seed, spec.id + "/" + fx.id));
      CheckContext ctx{fx, rng, tol};
      auto t0 = std::chrono::steady_clock::now();
      CheckRecord rec;
      try {
        rec = spec.run(ctx);
      } catch (const Error& e) {
        bool hyp = e.kind() == ErrorKind::HypothesisViolated || e.kind() == ErrorKind::NoApproximateIdentity;
        rec.status = hyp ? Status::Skipped : Status::Fail;
        rec.detail = e.what();
      } catch (const std::exception& e) {
        rec.status = Status::Fail;
        rec.detail = e.what();
      }
      rec.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rec.check_id = spec.id;
      rec.theorem_anchor = spec.anchor;
      rec.fixture_id = fx.id;
      rec.criterion = spec.criterion;
      report.checks.push_back(std::move(rec));
    }
  }
  std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.check_id, a.fixture_id) < std::tie(b.check_id, b.fixture_id);
  });
  return report;
}

Report run_suite(const Config& cfg) { return run_suite(cfg.fixtures, cfg.suite, cfg.seed, cfg.tol); }

} // namespace xprod
