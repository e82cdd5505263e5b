#include "xprod/correspondence.hpp"

#include "xprod/error.hpp"

#include <cmath>
#include <sstream>

namespace xprod {

namespace {

bool le(double lhs, double rhs, double tol) { return lhs <= rhs * (1.0 + tol) + tol; }

AFunction basis_function(const DynamicalSystem& sys, const Mat& basis, Eigen::Index k)
{
  return AFunction(sys.order(), sys.dim(), basis.col(k));
}

} // namespace

CovariantPair induced_pair(const DynamicalSystem& sys, const Weight& w)
{
  const NormedAlgebra& A = sys.algebra();
  if (!A.has_one_sided_identity())
    throw Error(ErrorKind::NoApproximateIdentity, A.name() + " has neither a left nor a right identity");
  const FiniteGroup& G = sys.group();
  const std::size_t n = G.order(), d = A.dim(), m = n * d;
  std::vector<Mat> pi(d, Mat::Zero(m, m)), u(n, Mat::Zero(m, m));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < n; ++s)
      pi[i].block(s * d, s * d, d, d) = A.left_regular(sys.alpha(G.inv(s)).col(i));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      u[r].block(s * d, G.mul(G.inv(r), s) * d, d, d) = Mat::Identity(d, d);
  return make_pair(sys, SpaceNorm::blocks(A, w.values), std::move(pi), std::move(u), Flavor::MM,
                   CovarianceLaw::Alpha, "induced");
}

NormBounds l1_operator_norm(const DynamicalSystem& sys, const Weight& w, const SpaceNorm& x,
                            const std::function<Mat(const AFunction&)>& t)
{
  const NormedAlgebra& A = sys.algebra();
  const std::size_t n = sys.order(), d = sys.dim();
  NormBounds out{0.0, 0.0};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<Mat> images;
    for (std::size_t i = 0; i < d; ++i)
      images.push_back(t(AFunction::delta(n, d, r, A.basis(i))));
    NormBounds b = x.rep_norm(A, images);
    out = bounds_max(out, bounds_scale(b, 1.0 / w(r)));
  }
  return out;
}

InequalityChain::InequalityChain(const DynamicalSystem& sys, const Weight& w, const RepClass& r)
    : sys_(sys), w_(w), r_(r)
{
  const NormedAlgebra& A = sys.algebra();
  if (!A.right_identity())
    throw Error(ErrorKind::HypothesisViolated, "A has no right identity");
  m_ = A.norm(*A.right_identity());
  induced_ = induced_pair(sys, w);
  norms_ = class_norms(sys, r);
  for (std::size_t s = 0; s < sys.order(); ++s)
    if (!le(norms_.nu_r[s].lower, w(s), 1e-12)) {
      std::ostringstream os;
      os << "nu_R(" << s << ") = " << norms_.nu_r[s].lower << " exceeds w = " << w(s);
      throw Error(ErrorKind::HypothesisViolated, os.str());
    }
  if (class_kernel(sys, r).cols() > 0)
    throw Error(ErrorKind::HypothesisViolated, "induced pair is not R-continuous (sigma^R has a kernel)");

  for (const auto& p : r)
    if (p.space_dim() == induced_.space_dim() && p.space.kind() == SpaceNorm::Kind::Blocks &&
        pair_distance(p, induced_) < 1e-12 && p.space.weights() == w.values)
      member_ = true;

  Rng rng(0xC4A1ULL);
  for (int k = 0; k < 8; ++k) {
    AFunction f = AFunction::random(rng, sys.order(), sys.dim());
    double num = induced_.space.operator_norm(integrated_form(sys, induced_, f)).lower;
    double den = seminorm(sys, r, f).lower;
    k_sampled_ = std::max(k_sampled_, num / den);
  }

  double w_e = weight_at_identity(sys.group(), w);
  corollary_ = A.identity() && std::abs(A.norm(*A.identity()) - 1.0) < 1e-12 && sys.isometric() &&
               std::abs(w_e - 1.0) < 1e-12 && le(norms_.c_r.value(), 1.0, 1e-12) && member_;
}

ChainReport InequalityChain::check(const AFunction& f, double tol) const
{
  ChainReport rep;
  const NormedAlgebra& A = sys_.algebra();
  double w_e = weight_at_identity(sys_.group(), w_);
  rep.f_norm = weighted_norm(A, f, w_, 1.0);
  rep.lower_term = rep.f_norm / (sys_.c_alpha_value() * m_ * w_e);
  rep.induced = induced_.space.operator_norm(integrated_form(sys_, induced_, f));
  rep.sigma = seminorm(sys_, r_, f);
  rep.c_r = norms_.c_r;
  rep.k_certified = member_;
  rep.k = member_ ? NormBounds{std::min(k_sampled_, 1.0), 1.0} : NormBounds::exact(k_sampled_);
  const double k = rep.k.upper;

  rep.slack[0] = rep.induced.upper - rep.lower_term;
  rep.holds[0] = le(rep.lower_term, rep.induced.upper, tol);
  rep.slack[1] = k * rep.sigma.upper - rep.induced.lower;
  rep.holds[1] = le(rep.induced.lower, k * rep.sigma.upper, tol);
  rep.slack[2] = k * rep.c_r.upper * rep.f_norm - k * rep.sigma.lower;
  rep.holds[2] = le(rep.sigma.lower, rep.c_r.upper * rep.f_norm, tol);

  rep.corollary_regime = corollary_;
  if (corollary_)
    rep.corollary_error = std::abs(rep.sigma.value() - rep.f_norm) / std::max(1e-300, rep.f_norm);
  return rep;
}

Mat ConvolutionRep::apply_coords(const Vec& c) const
{
  Mat out = Mat::Zero(space_dim(), space_dim());
  for (std::size_t k = 0; k < images.size(); ++k)
    if (c(k) != 0.0)
      out += c(k) * images[k];
  return out;
}

double ConvolutionRep::multiplicativity_error() const
{
  double worst = 0.0;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    AFunction x = basis_function(sys, basis, i);
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      AFunction y = basis_function(sys, basis, j);
      Mat lhs = (*this)(twisted_convolve(sys, x, y));
      Mat rhs = anti ? Mat(images[j] * images[i]) : Mat(images[i] * images[j]);
      worst = std::max(worst, rel_diff(lhs, rhs));
    }
  }
  return worst;
}

bool ConvolutionRep::non_degenerate() const
{
  const std::size_t m = space_dim();
  Mat cat(m, m * images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    cat.middleCols(k * m, m) = images[k];
  return numerical_rank(cat) == m;
}

ConvolutionRep pair_to_rep(const CrossedProduct& cp, const CovariantPair& p)
{
  const DynamicalSystem& sys = cp.system();
  if (p.flavor != Flavor::MM)
    throw Error(ErrorKind::FlavorMismatch, p.label + ": expected an (m,m) pair");
  if (!p.non_degenerate)
    throw Error(ErrorKind::NotNonDegenerate, p.label);
  double scale = 1.0;
  for (const auto& x : p.pi)
    scale = std::max(scale, max_abs(x));
  for (const auto& x : p.u)
    scale = std::max(scale, max_abs(x));
  for (Eigen::Index k = 0; k < cp.kernel().cols(); ++k) {
    double v = max_abs(integrated_form(sys, p, basis_function(sys, cp.kernel(), k)));
    if (v > 1e-9 * scale * scale) {
      std::ostringstream os;
      os << p.label << ": kernel vector " << k << " maps to norm " << v;
      throw Error(ErrorKind::KernelNotRespected, os.str());
    }
  }
  ConvolutionRep t{sys, cp.basis(), p.space, {}, false};
  for (Eigen::Index k = 0; k < cp.basis().cols(); ++k)
    t.images.push_back(integrated_form(sys, p, basis_function(sys, cp.basis(), k)));
  return t;
}

ConvolutionRep beurling_rep(const DynamicalSystem& sys, const CovariantPair& p)
{
  if (p.flavor != Flavor::MM)
    throw Error(ErrorKind::FlavorMismatch, p.label + ": expected an (m,m) pair");
  const auto nd = Eigen::Index(sys.order() * sys.dim());
  ConvolutionRep t{sys, Mat::Identity(nd, nd), p.space, {}, false};
  for (Eigen::Index k = 0; k < nd; ++k)
    t.images.push_back(integrated_form(sys, p, basis_function(sys, t.basis, k)));
  return t;
}

CovariantPair rep_to_pair(const ConvolutionRep& t, const std::string& label)
{
  const DynamicalSystem& sys = t.sys;
  const NormedAlgebra& A = sys.algebra();
  if (t.anti)
    throw Error(ErrorKind::FlavorMismatch, "expected a representation, got an anti-representation");
  const auto& u = A.left_identity();
  if (!u)
    throw Error(ErrorKind::HypothesisViolated, A.name() + " has no left identity");
  if (!t.non_degenerate())
    throw Error(ErrorKind::NotNonDegenerate, "T(A^G) X does not span X");
  const std::size_t n = sys.order(), d = sys.dim(), e = sys.group().identity();
  std::vector<Mat> pi, us;
  for (std::size_t i = 0; i < d; ++i)
    pi.push_back(t(AFunction::delta(n, d, e, A.multiply(A.basis(i), *u))));
  for (std::size_t s = 0; s < n; ++s)
    us.push_back(t(AFunction::delta(n, d, s, *u)));
  return make_pair(sys, t.space, std::move(pi), std::move(us), Flavor::MM, CovarianceLaw::Alpha, label);
}

RepBounds correspondence_bounds(const DynamicalSystem& sys, const Weight& w, const CovariantPair& p,
                                const ConvolutionRep& t, const CovariantPair& recovered, double tol)
{
  RepBounds b;
  const NormedAlgebra& A = sys.algebra();
  b.t_norm = l1_operator_norm(sys, w, p.space, [&](const AFunction& f) { return t(f); });
  b.c_u = {0.0, 0.0};
  for (std::size_t r = 0; r < sys.order(); ++r)
    b.c_u = bounds_max(b.c_u, bounds_scale(p.space.operator_norm(p.u[r]), 1.0 / w(r)));
  b.pi_norm = p.space.rep_norm(A, p.pi);
  b.pi_t_norm = recovered.space.rep_norm(A, recovered.pi);
  for (std::size_t s = 0; s < sys.order(); ++s)
    b.u_t.push_back(recovered.space.operator_norm(recovered.u[s]));
  const auto& u = t.anti ? A.right_identity() : A.left_identity();
  b.m = u ? A.norm(*u) : 1.0;
  b.w_e = weight_at_identity(sys.group(), w);

  double rhs1 = b.c_u.upper * b.pi_norm.upper;
  b.slack[0] = rhs1 - b.t_norm.lower;
  b.holds[0] = le(b.t_norm.lower, rhs1, tol);
  double rhs2 = b.w_e * b.t_norm.upper;
  b.slack[1] = rhs2 - b.pi_t_norm.lower;
  b.holds[1] = le(b.pi_t_norm.lower, rhs2, tol);
  b.slack[2] = 1e300;
  b.holds[2] = true;
  for (std::size_t s = 0; s < sys.order(); ++s) {
    double rhs3 = b.m * b.w_e * b.t_norm.upper * w(s);
    b.slack[2] = std::min(b.slack[2], rhs3 - b.u_t[s].lower);
    b.holds[2] = b.holds[2] && le(b.u_t[s].lower, rhs3, tol);
  }
  return b;
}

Mat centralizer_extend(const CrossedProduct& cp, const ConvolutionRep& t, const Mat& l)
{
  auto one = cp.unit();
  if (!one)
    throw Error(ErrorKind::HypothesisViolated, "the crossed product is not unital");
  const std::size_t q = cp.quotient_dim();
  if (std::size_t(l.rows()) != q || std::size_t(l.cols()) != q)
    throw Error(ErrorKind::DimensionMismatch, "centralizer must act on the quotient");
  for (std::size_t y = 0; y < q; ++y) {
    Mat ry = cp.structure().right_mult(Vec::Unit(Eigen::Index(q), Eigen::Index(y)));
    double c = max_abs(Mat(l * ry - ry * l));
    if (c > 1e-9 * std::max(1.0, max_abs(l))) {
      std::ostringstream os;
      os << "fails to commute with right multiplication by basis " << y << " (" << c << ")";
      throw Error(ErrorKind::NotCentralizer, os.str());
    }
  }
  return t.apply_coords(l * *one);
}

ConvolutionRep anti_pair_to_antirep(const DynamicalSystem& sys, const CovariantPair& p)
{
  if (p.flavor != Flavor::AA)
    throw Error(ErrorKind::FlavorMismatch, p.label + ": expected an (a,a) pair");
  const auto nd = Eigen::Index(sys.order() * sys.dim());
  ConvolutionRep t{sys, Mat::Identity(nd, nd), p.space, {}, true};
  for (Eigen::Index k = 0; k < nd; ++k)
    t.images.push_back(integrated_form(sys, p, basis_function(sys, t.basis, k)));
  return t;
}

CovariantPair antirep_to_anti_pair(const ConvolutionRep& t, const std::string& label)
{
  const DynamicalSystem& sys = t.sys;
  const NormedAlgebra& A = sys.algebra();
  if (!t.anti)
    throw Error(ErrorKind::FlavorMismatch, "expected an anti-representation");
  const auto& u = A.right_identity();
  if (!u)
    throw Error(ErrorKind::HypothesisViolated, A.name() + " has no right identity");
  if (!t.non_degenerate())
    throw Error(ErrorKind::NotNonDegenerate, "T(A^G) X does not span X");
  const Character chi = modular_character(sys.group());
  const std::size_t n = sys.order(), d = sys.dim(), e = sys.group().identity();
  std::vector<Mat> pi, us;
  for (std::size_t i = 0; i < d; ++i)
    pi.push_back(t(check_anti_iso(sys, chi, AFunction::delta(n, d, e, A.multiply(*u, A.basis(i))))));
  for (std::size_t s = 0; s < n; ++s)
    us.push_back(t(check_anti_iso(sys, chi, AFunction::delta(n, d, s, *u))));
  return make_pair(sys, t.space, std::move(pi), std::move(us), Flavor::AA, CovarianceLaw::AlphaInverse, label);
}

std::pair<DynamicalSystem, CovariantPair> retype_pair(const DynamicalSystem& sys, const CovariantPair& p)
{
  if (p.law == CovarianceLaw::Commuting)
    throw Error(ErrorKind::CovarianceViolated, p.label + ": commuting pairs have no companion retyping");
  DynamicalSystem target = sys;
  switch (p.flavor) {
  case Flavor::MM: break;
  case Flavor::MA: target = sys.with_opposite_group(); break;
  case Flavor::AM: target = sys.with_opposite_algebra(); break;
  case Flavor::AA: target = sys.opposite(); break;
  }
  CovariantPair q = recheck_pair(target, p, Flavor::MM, CovarianceLaw::Alpha, p.label + " retyped");
  return {target, q};
}

double max_commutator(const std::vector<Mat>& x, const std::vector<Mat>& y)
{
  double worst = 0.0;
  for (const auto& a : x)
    for (const auto& b : y)
      worst = std::max(worst, max_abs(Mat(a * b - b * a)));
  return worst;
}

BimoduleReps bimodule_correspondence(const DynamicalSystem& sys_a, const CovariantPair& pm,
                                     const DynamicalSystem& sys_b, const CovariantPair& pa, double tol)
{
  if (pm.flavor != Flavor::MM || pa.flavor != Flavor::AA)
    throw Error(ErrorKind::FlavorMismatch, "bimodule data needs an (m,m) and an (a,a) pair");
  if (pm.space_dim() != pa.space_dim())
    throw Error(ErrorKind::DimensionMismatch, "the two pairs act on different spaces");
  struct Family {
    const char* name;
    const std::vector<Mat>* ops;
  };
  const Family left[] = {{"pi_m", &pm.pi}, {"U_m", &pm.u}};
  const Family right[] = {{"pi_a", &pa.pi}, {"U_a", &pa.u}};
  double scale = 1.0;
  for (const auto* fam : {&pm.pi, &pm.u, &pa.pi, &pa.u})
    for (const auto& x : *fam)
      scale = std::max(scale, max_abs(x));
  for (const auto& l : left)
    for (const auto& r : right) {
      double c = max_commutator(*l.ops, *r.ops);
      if (c > tol * scale * scale) {
        std::ostringstream os;
        os << l.name << " vs " << r.name << " (" << c << ")";
        throw Error(ErrorKind::NotCommuting, os.str());
      }
    }
  BimoduleReps out{beurling_rep(sys_a, pm), anti_pair_to_antirep(sys_b, pa), 0.0};
  out.commutator = max_commutator(out.t_m.images, out.t_a.images);
  return out;
}

std::pair<CovariantPair, CovariantPair> bimodule_inverse(const BimoduleReps& reps)
{
  return {rep_to_pair(reps.t_m, "recovered (m,m)"), antirep_to_anti_pair(reps.t_a, "recovered (a,a)")};
}

} // namespace xprod
