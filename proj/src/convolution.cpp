#include "xprod/convolution.hpp"

#include "xprod/error.hpp"

#include <cmath>

namespace xprod {

namespace {

void check_shape(const DynamicalSystem& sys, const AFunction& f)
{
  if (f.order() != sys.order() || f.dim() != sys.dim())
    throw Error(ErrorKind::DimensionMismatch, "function does not live on this system");
}

} // namespace

AFunction twisted_convolve(const DynamicalSystem& sys, const AFunction& f, const AFunction& g)
{
  check_shape(sys, f);
  check_shape(sys, g);
  const FiniteGroup& G = sys.group();
  const Structure& A = sys.algebra().structure();
  AFunction out(sys.order(), sys.dim());
  for (std::size_t r = 0; r < G.order(); ++r) {
    Mat lf = A.left_mult(f.at(r)) * sys.alpha(r);
    for (std::size_t s = 0; s < G.order(); ++s)
      out.at(s) += lf * g.at(G.mul(G.inv(r), s));
  }
  return out;
}

AFunction opposite_convolve(const DynamicalSystem& sys, const AFunction& f, const AFunction& g)
{
  check_shape(sys, f);
  check_shape(sys, g);
  const FiniteGroup& G = sys.group();
  const Structure& A = sys.algebra().structure();
  AFunction out(sys.order(), sys.dim());
  for (std::size_t r = 0; r < G.order(); ++r) {
    Mat rf = A.right_mult(f.at(r)) * sys.alpha(G.inv(r));
    for (std::size_t s = 0; s < G.order(); ++s)
      out.at(s) += rf * g.at(G.mul(s, G.inv(r)));
  }
  return out;
}

Mat convolution_left_matrix(const DynamicalSystem& sys, const AFunction& f)
{
  check_shape(sys, f);
  const FiniteGroup& G = sys.group();
  const std::size_t d = sys.dim();
  Mat m = Mat::Zero(sys.order() * d, sys.order() * d);
  for (std::size_t r = 0; r < G.order(); ++r) {
    Mat lf = sys.algebra().left_regular(f.at(r)) * sys.alpha(r);
    for (std::size_t s = 0; s < G.order(); ++s)
      m.block(s * d, G.mul(G.inv(r), s) * d, d, d) += lf;
  }
  return m;
}

Mat convolution_right_matrix(const DynamicalSystem& sys, const AFunction& g)
{
  check_shape(sys, g);
  const FiniteGroup& G = sys.group();
  const std::size_t d = sys.dim();
  Mat m = Mat::Zero(sys.order() * d, sys.order() * d);
  // f(r) alpha_r(g(t)) lands at s = r t and is linear in f(r) via right multiplication
  for (std::size_t r = 0; r < G.order(); ++r)
    for (std::size_t t = 0; t < G.order(); ++t) {
      Vec b = sys.alpha(r) * g.at(t);
      m.block(G.mul(r, t) * d, r * d, d, d) += sys.algebra().right_regular(b);
    }
  return m;
}

double weighted_norm(const NormedAlgebra& a, const AFunction& f, const Weight& w, double p)
{
  if (f.order() != w.values.size() || f.dim() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "function does not match algebra and weight");
  double s = 0.0;
  for (std::size_t r = 0; r < f.order(); ++r)
    s += std::pow(a.norm(f.at(r)), p) * w(r);
  return std::pow(s, 1.0 / p);
}

AFunction hat_conjugator(const DynamicalSystem& sys, const AFunction& h)
{
  check_shape(sys, h);
  AFunction out(sys.order(), sys.dim());
  for (std::size_t s = 0; s < sys.order(); ++s)
    out.at(s) = sys.alpha(s) * h.at(s);
  return out;
}

AFunction check_conjugator(const DynamicalSystem& sys, const AFunction& h)
{
  check_shape(sys, h);
  AFunction out(sys.order(), sys.dim());
  for (std::size_t s = 0; s < sys.order(); ++s)
    out.at(s) = sys.alpha(sys.group().inv(s)) * h.at(s);
  return out;
}

AFunction hat_anti_iso(const DynamicalSystem& sys, const Character& chi, const AFunction& f)
{
  check_shape(sys, f);
  const FiniteGroup& G = sys.group();
  AFunction out(sys.order(), sys.dim());
  for (std::size_t s = 0; s < sys.order(); ++s)
    out.at(s) = chi(G.inv(s)) * (sys.alpha(G.inv(s)) * f.at(s));
  return out;
}

AFunction check_anti_iso(const DynamicalSystem& sys, const Character& chi, const AFunction& g)
{
  check_shape(sys, g);
  AFunction out(sys.order(), sys.dim());
  for (std::size_t s = 0; s < sys.order(); ++s)
    out.at(s) = chi(s) * (sys.alpha(s) * g.at(s));
  return out;
}

AFunction t_chi(const FiniteGroup& g, const Character& chi, const AFunction& f)
{
  AFunction out(f.order(), f.dim());
  for (std::size_t s = 0; s < g.order(); ++s)
    out.at(s) = chi(s) * f.at(g.inv(s));
  return out;
}

AFunction s_chi(const DynamicalSystem& sys, const Character& chi, const AFunction& f)
{
  return hat_anti_iso(sys, chi, f);
}

AFunction s_chi_inverse(const DynamicalSystem& sys, const Character& chi, const AFunction& f)
{
  return check_anti_iso(sys, chi, f);
}

Mat t_chi_matrix(const FiniteGroup& g, std::size_t d, const Character& chi)
{
  const std::size_t n = g.order();
  Mat m = Mat::Zero(n * d, n * d);
  for (std::size_t s = 0; s < n; ++s)
    m.block(s * d, g.inv(s) * d, d, d) = chi(s) * Mat::Identity(d, d);
  return m;
}

Mat s_chi_matrix(const DynamicalSystem& sys, const Character& chi)
{
  const std::size_t n = sys.order(), d = sys.dim();
  const FiniteGroup& G = sys.group();
  Mat m = Mat::Zero(n * d, n * d);
  for (std::size_t s = 0; s < n; ++s)
    m.block(s * d, s * d, d, d) = chi(G.inv(s)) * sys.alpha(G.inv(s));
  return m;
}

Mat s_chi_inverse_matrix(const DynamicalSystem& sys, const Character& chi)
{
  const std::size_t n = sys.order(), d = sys.dim();
  Mat m = Mat::Zero(n * d, n * d);
  for (std::size_t s = 0; s < n; ++s)
    m.block(s * d, s * d, d, d) = chi(s) * sys.alpha(s);
  return m;
}

BeurlingAlgebra::BeurlingAlgebra(DynamicalSystem sys, Weight w) : sys_(std::move(sys)), w_(std::move(w))
{
  if (w_.values.size() != sys_.order())
    throw Error(ErrorKind::DimensionMismatch, "weight length differs from group order");
}

std::optional<AFunction> BeurlingAlgebra::unit() const
{
  const auto& u = sys_.algebra().identity();
  if (!u)
    return std::nullopt;
  return AFunction::delta(sys_.order(), sys_.dim(), sys_.group().identity(), *u);
}

} // namespace xprod
