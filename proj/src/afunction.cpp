#include "xprod/afunction.hpp"

#include "xprod/error.hpp"

namespace xprod {

AFunction::AFunction(std::size_t order, std::size_t dim, Vec flat) : n_(order), d_(dim), data_(std::move(flat))
{
  if (std::size_t(data_.size()) != n_ * d_)
    throw Error(ErrorKind::DimensionMismatch, "flat vector length differs from |G| * dim A");
}

AFunction AFunction::delta(std::size_t order, std::size_t dim, std::size_t r, const Vec& a)
{
  AFunction f(order, dim);
  f.at(r) = a;
  return f;
}

AFunction AFunction::random(Rng& rng, std::size_t order, std::size_t dim)
{
  return AFunction(order, dim, random_vec(rng, order * dim));
}

double max_abs_diff(const AFunction& a, const AFunction& b)
{
  if (a.order() != b.order() || a.dim() != b.dim())
    throw Error(ErrorKind::DimensionMismatch, "functions live on different spaces");
  return max_abs(Vec(a.flat() - b.flat()));
}

} // namespace xprod
