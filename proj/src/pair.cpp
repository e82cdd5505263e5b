#include "xprod/pair.hpp"

#include "xprod/error.hpp"

#include <sstream>

namespace xprod {

const char* to_string(Flavor f)
{
  switch (f) {
  case Flavor::MM: return "(m,m)";
  case Flavor::MA: return "(m,a)";
  case Flavor::AM: return "(a,m)";
  case Flavor::AA: return "(a,a)";
  }
  return "?";
}

const char* to_string(CovarianceLaw l)
{
  switch (l) {
  case CovarianceLaw::Alpha: return "alpha_r";
  case CovarianceLaw::AlphaInverse: return "alpha_r^-1";
  case CovarianceLaw::Commuting: return "commuting";
  }
  return "?";
}

Flavor flavor_from_string(const std::string& s)
{
  if (s == "(m,m)" || s == "mm")
    return Flavor::MM;
  if (s == "(m,a)" || s == "ma")
    return Flavor::MA;
  if (s == "(a,m)" || s == "am")
    return Flavor::AM;
  if (s == "(a,a)" || s == "aa")
    return Flavor::AA;
  throw Error(ErrorKind::InvalidConfig, "unknown flavor '" + s + "'");
}

bool pi_multiplicative(Flavor f) { return f == Flavor::MM || f == Flavor::MA; }
bool u_multiplicative(Flavor f) { return f == Flavor::MM || f == Flavor::AM; }

CovarianceLaw default_law(Flavor f)
{
  return u_multiplicative(f) ? CovarianceLaw::Alpha : CovarianceLaw::AlphaInverse;
}

Mat CovariantPair::pi_of(const Vec& a) const
{
  Mat m = Mat::Zero(space_dim(), space_dim());
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (a(i) != 0.0)
      m += a(i) * pi[i];
  return m;
}

namespace {

Mat combine(const std::vector<Mat>& pi, const Vec& a)
{
  Mat m = Mat::Zero(pi[0].rows(), pi[0].cols());
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (a(i) != 0.0)
      m += a(i) * pi[i];
  return m;
}

} // namespace

FlavorReport classify_flavor(const DynamicalSystem& sys, const std::vector<Mat>& pi, const std::vector<Mat>& u,
                             double tol)
{
  FlavorReport r;
  const Structure& A = sys.algebra().structure();
  const FiniteGroup& G = sys.group();
  const std::size_t d = A.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Mat pij = combine(pi, A.left_basis(i).col(j));
      double scale = std::max({1.0, max_abs(pi[i]), max_abs(pi[j])});
      r.pi_mult_error = std::max(r.pi_mult_error, max_abs(Mat(pij - pi[i] * pi[j])) / (scale * scale));
      r.pi_anti_error = std::max(r.pi_anti_error, max_abs(Mat(pij - pi[j] * pi[i])) / (scale * scale));
    }
  for (std::size_t s = 0; s < G.order(); ++s)
    for (std::size_t t = 0; t < G.order(); ++t) {
      const Mat& ust = u[G.mul(s, t)];
      double scale = std::max({1.0, max_abs(u[s]), max_abs(u[t])});
      r.u_mult_error = std::max(r.u_mult_error, max_abs(Mat(ust - u[s] * u[t])) / (scale * scale));
      r.u_anti_error = std::max(r.u_anti_error, max_abs(Mat(ust - u[t] * u[s])) / (scale * scale));
    }
  r.pi_mult = r.pi_mult_error <= tol;
  r.pi_anti = r.pi_anti_error <= tol;
  r.u_mult = r.u_mult_error <= tol;
  r.u_anti = r.u_anti_error <= tol;
  return r;
}

double covariance_defect(const DynamicalSystem& sys, const std::vector<Mat>& pi, const std::vector<Mat>& u,
                         CovarianceLaw law)
{
  const FiniteGroup& G = sys.group();
  const std::size_t d = sys.dim();
  double worst = 0.0;
  for (std::size_t r = 0; r < G.order(); ++r) {
    Mat uinv = u[r].inverse();
    for (std::size_t i = 0; i < d; ++i) {
      Vec target = Vec::Unit(d, i);
      if (law == CovarianceLaw::Alpha)
        target = sys.alpha(r).col(i);
      else if (law == CovarianceLaw::AlphaInverse)
        target = sys.alpha(G.inv(r)).col(i);
      Mat lhs = u[r] * pi[i] * uinv;
      Mat rhs = combine(pi, target);
      worst = std::max(worst, max_abs(Mat(lhs - rhs)) / std::max(1.0, max_abs(rhs)));
    }
  }
  return worst;
}

bool is_non_degenerate(const std::vector<Mat>& pi, std::size_t m)
{
  Mat cat(m, m * pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i)
    cat.middleCols(i * m, m) = pi[i];
  return numerical_rank(cat) == m;
}

CovariantPair make_pair(const DynamicalSystem& sys, SpaceNorm space, std::vector<Mat> pi, std::vector<Mat> u,
                        Flavor flavor, std::optional<CovarianceLaw> law, const std::string& label, double tol)
{
  const std::size_t m = space.dim();
  if (pi.size() != sys.dim() || u.size() != sys.order())
    throw Error(ErrorKind::DimensionMismatch, label + ": need one pi per basis element and one U per group element");
  for (const auto& x : pi)
    if (std::size_t(x.rows()) != m || std::size_t(x.cols()) != m)
      throw Error(ErrorKind::DimensionMismatch, label + ": pi image has wrong size");
  for (const auto& x : u)
    if (std::size_t(x.rows()) != m || std::size_t(x.cols()) != m)
      throw Error(ErrorKind::DimensionMismatch, label + ": U image has wrong size");
  if (max_abs(Mat(u[sys.group().identity()] - Mat::Identity(m, m))) > tol)
    throw Error(ErrorKind::FlavorMismatch, label + ": U_e is not the identity");

  FlavorReport fr = classify_flavor(sys, pi, u, tol);
  bool ok_pi = pi_multiplicative(flavor) ? fr.pi_mult : fr.pi_anti;
  bool ok_u = u_multiplicative(flavor) ? fr.u_mult : fr.u_anti;
  if (!ok_pi || !ok_u) {
    std::ostringstream os;
    os << label << ": declared " << to_string(flavor) << " but pi errors (mult " << fr.pi_mult_error << ", anti "
       << fr.pi_anti_error << "), U errors (mult " << fr.u_mult_error << ", anti " << fr.u_anti_error << ")";
    throw Error(ErrorKind::FlavorMismatch, os.str());
  }
  CovarianceLaw l = law.value_or(default_law(flavor));
  double cd_ = covariance_defect(sys, pi, u, l);
  if (cd_ > tol) {
    std::ostringstream os;
    os << label << ": law " << to_string(l) << " defect " << cd_;
    throw Error(ErrorKind::CovarianceViolated, os.str());
  }
  CovariantPair p;
  p.space = std::move(space);
  p.pi = std::move(pi);
  p.u = std::move(u);
  p.flavor = flavor;
  p.law = l;
  p.non_degenerate = is_non_degenerate(p.pi, m);
  p.label = label;
  return p;
}

CovariantPair recheck_pair(const DynamicalSystem& sys, const CovariantPair& p, Flavor flavor, CovarianceLaw law,
                           const std::string& label)
{
  try {
    return make_pair(sys, p.space, p.pi, p.u, flavor, law, label);
  } catch (const Error& e) {
    throw Error(ErrorKind::CovarianceViolated, e.what());
  }
}

CovariantPair conjugate_pair(const DynamicalSystem& sys, const CovariantPair& p, const Mat& s, SpaceNorm space,
                             const std::string& label)
{
  Mat si = s.inverse();
  std::vector<Mat> pi, u;
  for (const auto& x : p.pi)
    pi.push_back(s * x * si);
  for (const auto& x : p.u)
    u.push_back(s * x * si);
  return make_pair(sys, std::move(space), std::move(pi), std::move(u), p.flavor, p.law, label);
}

double pair_distance(const CovariantPair& a, const CovariantPair& b)
{
  if (a.pi.size() != b.pi.size() || a.u.size() != b.u.size())
    throw Error(ErrorKind::DimensionMismatch, "pairs over different systems");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.pi.size(); ++i)
    worst = std::max(worst, max_abs(Mat(a.pi[i] - b.pi[i])));
  for (std::size_t i = 0; i < a.u.size(); ++i)
    worst = std::max(worst, max_abs(Mat(a.u[i] - b.u[i])));
  return worst;
}

} // namespace xprod
