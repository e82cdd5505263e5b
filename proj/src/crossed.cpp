#include "xprod/crossed.hpp"

#include "xprod/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace xprod {

ClassNorms class_norms(const DynamicalSystem& sys, const RepClass& r)
{
  ClassNorms out;
  out.nu_r.assign(sys.order(), NormBounds{0.0, 0.0});
  out.c_r = {0.0, 0.0};
  for (const auto& p : r) {
    out.c_r = bounds_max(out.c_r, p.space.rep_norm(sys.algebra(), p.pi));
    for (std::size_t s = 0; s < sys.order(); ++s)
      out.nu_r[s] = bounds_max(out.nu_r[s], p.space.operator_norm(p.u[s]));
  }
  return out;
}

Mat integrated_form(const DynamicalSystem& sys, const CovariantPair& p, const AFunction& f)
{
  if (f.order() != sys.order() || f.dim() != sys.dim())
    throw Error(ErrorKind::DimensionMismatch, "function does not live on this system");
  const std::size_t m = p.space_dim();
  Mat out = Mat::Zero(m, m);
  if (p.flavor == Flavor::MM) {
    for (std::size_t s = 0; s < sys.order(); ++s)
      out += p.pi_of(f.at(s)) * p.u[s];
  } else if (p.flavor == Flavor::AA) {
    for (std::size_t s = 0; s < sys.order(); ++s)
      out += p.u[s] * p.pi_of(f.at(s));
  } else {
    throw Error(ErrorKind::FlavorMismatch,
                p.label + ": integrated form needs (m,m) or (a,a); retype over the companion system first");
  }
  return out;
}

Mat integrated_form_matrix(const DynamicalSystem& sys, const CovariantPair& p)
{
  const std::size_t m = p.space_dim(), d = sys.dim(), n = sys.order();
  if (p.flavor != Flavor::MM && p.flavor != Flavor::AA)
    throw Error(ErrorKind::FlavorMismatch, p.label + ": integrated form needs (m,m) or (a,a)");
  Mat out(m * m, n * d);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < d; ++i) {
      Mat t = p.flavor == Flavor::MM ? Mat(p.pi[i] * p.u[s]) : Mat(p.u[s] * p.pi[i]);
      out.col(s * d + i) = vec_of(t);
    }
  return out;
}

NormBounds seminorm(const DynamicalSystem& sys, const RepClass& r, const AFunction& f)
{
  NormBounds out{0.0, 0.0};
  for (const auto& p : r)
    out = bounds_max(out, p.space.operator_norm(integrated_form(sys, p, f)));
  return out;
}

Mat class_kernel(const DynamicalSystem& sys, const RepClass& r, double rel_tol)
{
  const Eigen::Index nd = Eigen::Index(sys.order() * sys.dim());
  if (r.empty())
    return Mat::Identity(nd, nd);
  Eigen::Index rows = 0;
  for (const auto& p : r)
    rows += Eigen::Index(p.space_dim() * p.space_dim());
  Mat stacked(rows, nd);
  Eigen::Index off = 0;
  for (const auto& p : r) {
    Mat m = integrated_form_matrix(sys, p);
    stacked.middleRows(off, m.rows()) = m;
    off += m.rows();
  }
  return nullspace(stacked, rel_tol);
}

std::optional<Vec> CrossedProduct::unit() const
{
  const auto& u = sys_.algebra().identity();
  if (!u)
    return std::nullopt;
  return q(AFunction::delta(sys_.order(), sys_.dim(), sys_.group().identity(), *u));
}

CrossedProduct build_crossed_product(const DynamicalSystem& sys, const RepClass& r)
{
  for (const auto& p : r)
    if (p.flavor != Flavor::MM)
      throw Error(ErrorKind::FlavorMismatch, p.label + ": crossed products are built from (m,m) pairs");
  CrossedProduct cp;
  cp.sys_ = sys;
  cp.r_ = r;
  const std::size_t n = sys.order(), d = sys.dim(), nd = n * d;
  cp.kernel_ = class_kernel(sys, r);
  cp.q_ = orthogonal_complement(cp.kernel_, Eigen::Index(nd));

  // the kernel must absorb products with anything on either side
  for (Eigen::Index k = 0; k < cp.kernel_.cols(); ++k) {
    AFunction kf(n, d, cp.kernel_.col(k));
    for (std::size_t b = 0; b < nd; ++b) {
      AFunction e(n, d, Vec::Unit(Eigen::Index(nd), Eigen::Index(b)));
      for (const AFunction& prod : {twisted_convolve(sys, kf, e), twisted_convolve(sys, e, kf)}) {
        double off = (cp.q_.adjoint() * prod.flat()).norm();
        if (off > 1e-9 * std::max(1.0, prod.flat().norm())) {
          std::ostringstream os;
          os << "kernel vector " << k << " times basis " << b << " leaves the kernel by " << off;
          throw Error(ErrorKind::KernelNotIdeal, os.str());
        }
      }
    }
  }

  const std::size_t q = cp.quotient_dim();
  std::vector<cd> c(q * q * q);
  for (std::size_t i = 0; i < q; ++i) {
    Mat left = convolution_left_matrix(sys, AFunction(n, d, cp.q_.col(i)));
    for (std::size_t j = 0; j < q; ++j) {
      Vec prod = cp.q_.adjoint() * (left * cp.q_.col(j));
      for (std::size_t k = 0; k < q; ++k)
        c[(i * q + j) * q + k] = prod(k);
    }
  }
  cp.s_ = Structure(q, std::move(c));
  return cp;
}

Mat CanonicalMaps::i_a_of(const Vec& a) const
{
  Mat m = Mat::Zero(i_a[0].rows(), i_a[0].cols());
  for (std::size_t i = 0; i < i_a.size(); ++i)
    if (a(i) != 0.0)
      m += a(i) * i_a[i];
  return m;
}

CanonicalMaps canonical_maps(const CrossedProduct& cp)
{
  const DynamicalSystem& sys = cp.system();
  const FiniteGroup& G = sys.group();
  const std::size_t n = sys.order(), d = sys.dim(), nd = n * d;
  const Mat& Q = cp.basis();
  const Mat& K = cp.kernel();
  CanonicalMaps out;
  auto descend = [&](const Mat& full, const std::string& what) {
    if (K.cols() > 0) {
      double leak = (Q.adjoint() * full * K).norm();
      if (leak > 1e-9 * std::max(1.0, full.norm()))
        throw Error(ErrorKind::KernelNotIdeal, what + " does not preserve the kernel");
    }
    return Mat(Q.adjoint() * full * Q);
  };
  for (std::size_t i = 0; i < d; ++i) {
    Mat full = Mat::Zero(nd, nd);
    Mat l = sys.algebra().left_regular(Vec::Unit(d, i));
    for (std::size_t s = 0; s < n; ++s)
      full.block(s * d, s * d, d, d) = l;
    out.i_a.push_back(descend(full, "i_A"));
  }
  for (std::size_t r = 0; r < n; ++r) {
    Mat full = Mat::Zero(nd, nd);
    for (std::size_t s = 0; s < n; ++s)
      full.block(s * d, G.mul(G.inv(r), s) * d, d, d) = sys.alpha(r);
    out.i_g.push_back(descend(full, "i_G"));
  }
  return out;
}

Mat canonical_integrated(const CrossedProduct& cp, const CanonicalMaps& maps, const AFunction& f)
{
  const std::size_t q = cp.quotient_dim();
  Mat out = Mat::Zero(q, q);
  for (std::size_t s = 0; s < cp.system().order(); ++s)
    out += maps.i_a_of(f.at(s)) * maps.i_g[s];
  return out;
}

NormBounds left_mult_norm(const CrossedProduct& cp, const Vec& c, Rng& rng, int samples)
{
  const std::size_t q = cp.quotient_dim();
  double best = 0.0;
  auto consider = [&](const Vec& g) {
    double den = cp.norm(g).lower;
    if (den <= 1e-300)
      return;
    best = std::max(best, cp.norm(cp.multiply(c, g)).lower / den);
  };
  if (auto u = cp.unit())
    consider(*u);
  for (int k = 0; k < samples; ++k)
    consider(random_vec(rng, Eigen::Index(q)));
  for (std::size_t k = 0; k < q; ++k)
    consider(Vec::Unit(Eigen::Index(q), Eigen::Index(k)));
  // sigma(f * g) <= sigma(f) sigma(g)
  return {best, std::max(best, cp.norm(c).upper)};
}

CovariantPair direct_sum_realization(const DynamicalSystem& sys, const RepClass& r, PNorm p)
{
  if (r.empty())
    throw Error(ErrorKind::DimensionMismatch, "empty class");
  std::vector<SpaceNorm> spaces;
  std::size_t m = 0;
  for (const auto& x : r) {
    if (x.flavor != Flavor::MM)
      throw Error(ErrorKind::FlavorMismatch, x.label + ": direct sums are taken of (m,m) pairs");
    spaces.push_back(x.space);
    m += x.space_dim();
  }
  std::vector<Mat> pi(sys.dim(), Mat::Zero(m, m)), u(sys.order(), Mat::Zero(m, m));
  std::size_t off = 0;
  for (const auto& x : r) {
    const std::size_t k = x.space_dim();
    for (std::size_t i = 0; i < sys.dim(); ++i)
      pi[i].block(off, off, k, k) = x.pi[i];
    for (std::size_t s = 0; s < sys.order(); ++s)
      u[s].block(off, off, k, k) = x.u[s];
    off += k;
  }
  // all children l^p with the same p: the sum is l^p on the concatenated coordinates
  bool flat = true;
  for (const auto& s : spaces)
    flat = flat && s.kind() == SpaceNorm::Kind::Lp && s.p() == p;
  SpaceNorm space = flat ? SpaceNorm::lp(m, p) : SpaceNorm::direct_sum(std::move(spaces), p);
  return make_pair(sys, std::move(space), std::move(pi), std::move(u), Flavor::MM, CovarianceLaw::Alpha,
                   "direct sum");
}

ClassComparison compare_classes(const DynamicalSystem& sys, const RepClass& r1, const RepClass& r2, Rng& rng,
                                int samples)
{
  ClassComparison out;
  const std::size_t n = sys.order(), d = sys.dim(), nd = n * d;
  Mat k1 = class_kernel(sys, r1), k2 = class_kernel(sys, r2);

  out.dominated = true;
  for (Eigen::Index j = 0; j < k2.cols(); ++j)
    if (distance_to_span(k1, k2.col(j)) > 1e-8) {
      out.dominated = false;
      out.division_undefined = true;
      std::ostringstream os;
      os << "kernel vector " << j << " of the second class is not annihilated by the first";
      out.certificate = os.str();
      break;
    }
  if (out.dominated) {
    std::ostringstream os;
    os << "ker sigma2 (dim " << k2.cols() << ") inside ker sigma1 (dim " << k1.cols() << ")";
    out.certificate = os.str();
  }

  Mat q2 = orthogonal_complement(k2, Eigen::Index(nd));
  auto ratio = [&](const Vec& c) {
    AFunction f(n, d, q2 * c);
    double s2 = seminorm(sys, r2, f).lower, s1 = seminorm(sys, r1, f).lower;
    return s2 > 0 ? s1 / s2 : 0.0;
  };
  for (int k = 0; k < samples && q2.cols() > 0; ++k)
    out.m_lower = std::max(out.m_lower, ratio(random_vec(rng, q2.cols())));

  if (out.dominated && q2.cols() <= 2) {
    if (q2.cols() == 0) {
      out.best_m = 0.0;
    } else if (q2.cols() == 1) {
      out.best_m = ratio(Vec::Ones(1));
    } else {
      // points (cos t, e^{i p} sin t) cover the projective line
      double best = 0.0, bt = 0.0, bp = 0.0;
      const int nt = 48, np = 96;
      auto at = [&](double t, double ph) {
        Vec c(2);
        c << std::cos(t), std::polar(std::sin(t), ph);
        return ratio(c);
      };
      for (int i = 0; i <= nt; ++i)
        for (int j = 0; j < np; ++j) {
          double t = 0.5 * std::numbers::pi * i / nt, ph = 2.0 * std::numbers::pi * j / np;
          double v = at(t, ph);
          if (v > best) {
            best = v;
            bt = t;
            bp = ph;
          }
        }
      double ht = 0.5 * std::numbers::pi / nt, hp = 2.0 * std::numbers::pi / np;
      for (int it = 0; it < 40; ++it) {
        for (auto [dt, dp] : {std::pair{ht, 0.0}, {-ht, 0.0}, {0.0, hp}, {0.0, -hp}}) {
          double v = at(bt + dt, bp + dp);
          if (v > best) {
            best = v;
            bt += dt;
            bp += dp;
          }
        }
        ht *= 0.7;
        hp *= 0.7;
      }
      out.best_m = best;
    }
    out.m_lower = std::max(out.m_lower, *out.best_m);
  }
  return out;
}

} // namespace xprod
