#include "xprod/space.hpp"

#include "xprod/error.hpp"

#include <cmath>
#include <sstream>

namespace xprod {

SpaceNorm SpaceNorm::lp(std::size_t m, PNorm p)
{
  SpaceNorm s;
  s.kind_ = Kind::Lp;
  s.m_ = m;
  s.p_ = p;
  return s;
}

SpaceNorm SpaceNorm::blocks(const NormedAlgebra& a, std::vector<double> weights)
{
  SpaceNorm s;
  s.kind_ = Kind::Blocks;
  s.alg_ = std::make_shared<const NormedAlgebra>(a);
  s.weights_ = std::move(weights);
  s.m_ = a.dim() * s.weights_.size();
  s.p_ = PNorm::One;
  return s;
}

SpaceNorm SpaceNorm::direct_sum(std::vector<SpaceNorm> children, PNorm p)
{
  SpaceNorm s;
  s.kind_ = Kind::DirectSum;
  s.p_ = p;
  for (const auto& c : children)
    s.m_ += c.dim();
  s.children_ = std::move(children);
  return s;
}

double SpaceNorm::norm(const Vec& x) const
{
  if (std::size_t(x.size()) != m_)
    throw Error(ErrorKind::DimensionMismatch, "vector does not match space dimension");
  switch (kind_) {
  case Kind::Lp: return vec_norm(x, p_);
  case Kind::Blocks: {
    const std::size_t d = alg_->dim();
    double s = 0.0;
    for (std::size_t b = 0; b < weights_.size(); ++b)
      s += weights_[b] * alg_->norm(x.segment(b * d, d));
    return s;
  }
  case Kind::DirectSum: {
    Vec parts(children_.size());
    std::size_t off = 0;
    for (std::size_t i = 0; i < children_.size(); ++i) {
      parts(i) = children_[i].norm(x.segment(off, children_[i].dim()));
      off += children_[i].dim();
    }
    return vec_norm(parts, p_);
  }
  }
  return 0.0;
}

namespace {

bool block_diagonal(const Mat& t, const std::vector<std::size_t>& sizes)
{
  double scale = std::max(1.0, max_abs(t));
  std::size_t ro = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::size_t co = 0;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      if (i != j && max_abs(Mat(t.block(ro, co, sizes[i], sizes[j]))) > 1e-14 * scale)
        return false;
      co += sizes[j];
    }
    ro += sizes[i];
  }
  return true;
}

} // namespace

bool SpaceNorm::exact_operator_norm(const std::vector<Mat>& ops) const
{
  switch (kind_) {
  case Kind::Lp: return true;
  case Kind::Blocks: {
    if (alg_->norm_tag() == NormTag::One || alg_->dim() == 1)
      return true;
    if (alg_->norm_tag() == NormTag::Operator)
      return false;
    std::vector<std::size_t> sizes(weights_.size(), alg_->dim());
    for (const auto& t : ops)
      if (!block_diagonal(t, sizes))
        return false;
    return true;
  }
  case Kind::DirectSum: {
    bool flat = true;
    for (const auto& c : children_)
      flat = flat && c.kind() == Kind::Lp && c.p() == p_;
    return flat;
  }
  }
  return false;
}

NormBounds SpaceNorm::operator_norm(const Mat& t) const
{
  if (std::size_t(t.rows()) != m_ || std::size_t(t.cols()) != m_)
    throw Error(ErrorKind::DimensionMismatch, "operator does not match space dimension");
  switch (kind_) {
  case Kind::Lp: return NormBounds::exact(induced_norm(t, p_));

  case Kind::Blocks: {
    // l^1 extreme-point reduction: ||T|| = max_r sup_{||a||<=1} ||T(delta_r a)|| / w(r)
    const std::size_t d = alg_->dim(), n = weights_.size();
    if (alg_->norm_tag() == NormTag::One || d == 1) {
      double best = 0.0;
      for (std::size_t c = 0; c < m_; ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < m_; ++r)
          s += std::abs(t(r, c)) * weights_[r / d];
        best = std::max(best, s / weights_[c / d]);
      }
      return NormBounds::exact(best);
    }
    if (block_diagonal(t, std::vector<std::size_t>(n, d))) {
      NormBounds out{0.0, 0.0};
      for (std::size_t b = 0; b < n; ++b)
        out = bounds_max(out, alg_->map_norm(t.block(b * d, b * d, d, d)));
      return out;
    }
    NormBounds out{0.0, 0.0};
    for (std::size_t r = 0; r < n; ++r) {
      Mat col = t.middleCols(r * d, d);
      NormBounds b = alg_->ball_sup([&](const Vec& a) { return norm(col * a); });
      out = bounds_max(out, bounds_scale(b, 1.0 / weights_[r]));
    }
    return out;
  }

  case Kind::DirectSum: {
    std::vector<std::size_t> sizes;
    for (const auto& c : children_)
      sizes.push_back(c.dim());
    if (block_diagonal(t, sizes)) {
      NormBounds out{0.0, 0.0};
      std::size_t off = 0;
      for (const auto& c : children_) {
        out = bounds_max(out, c.operator_norm(t.block(off, off, c.dim(), c.dim())));
        off += c.dim();
      }
      return out;
    }
    bool flat = true;
    for (const auto& c : children_)
      flat = flat && c.kind() == Kind::Lp && c.p() == p_;
    if (flat)
      return NormBounds::exact(induced_norm(t, p_));
    throw Error(ErrorKind::DimensionMismatch, "operator norm on a mixed direct sum needs a block-diagonal operator");
  }
  }
  return {};
}

NormBounds SpaceNorm::rep_norm(const NormedAlgebra& a, const std::vector<Mat>& images) const
{
  if (images.size() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "one image per basis element expected");
  auto combine = [&](const Vec& x) {
    Mat m = Mat::Zero(m_, m_);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (x(i) != 0.0)
        m += x(i) * images[i];
    return m;
  };
  if (exact_operator_norm(images))
    return a.ball_sup([&](const Vec& x) { return operator_norm(combine(x)).lower; });

  NormBounds lo = a.ball_sup([&](const Vec& x) { return operator_norm(combine(x)).lower; });
  if (a.norm_tag() == NormTag::One || a.dim() == 1) {
    double up = 0.0;
    for (const auto& im : images)
      up = std::max(up, operator_norm(im).upper);
    return {lo.lower, std::max(lo.lower, up)};
  }
  // |a_i| <= ||a|| for the sup and operator norms
  double up = 0.0;
  for (const auto& im : images)
    up += operator_norm(im).upper;
  return {lo.lower, std::max(lo.lower, up)};
}

std::string SpaceNorm::describe() const
{
  auto pn = [](PNorm p) { return p == PNorm::One ? "1" : p == PNorm::Two ? "2" : "inf"; };
  std::ostringstream os;
  switch (kind_) {
  case Kind::Lp: os << "l^" << pn(p_) << "(C^" << m_ << ")"; break;
  case Kind::Blocks: os << "l^1(G," << alg_->name() << ",w)"; break;
  case Kind::DirectSum:
    os << "(+)_" << pn(p_) << "[";
    for (std::size_t i = 0; i < children_.size(); ++i)
      os << (i ? "," : "") << children_[i].describe();
    os << "]";
    break;
  }
  return os.str();
}

} // namespace xprod
