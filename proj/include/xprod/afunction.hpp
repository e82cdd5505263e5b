#pragma once

#include "xprod/linalg.hpp"

namespace xprod {

// f : G -> A stored as one flat vector, block s at [s*d, (s+1)*d).
class AFunction {
public:
  AFunction() = default;
  AFunction(std::size_t order, std::size_t dim) : n_(order), d_(dim), data_(Vec::Zero(order * dim)) {}
  AFunction(std::size_t order, std::size_t dim, Vec flat);

  static AFunction delta(std::size_t order, std::size_t dim, std::size_t r, const Vec& a);
  static AFunction random(Rng& rng, std::size_t order, std::size_t dim);

  std::size_t order() const { return n_; }
  std::size_t dim() const { return d_; }
  const Vec& flat() const { return data_; }
  Vec& flat() { return data_; }

  auto at(std::size_t s) const { return data_.segment(s * d_, d_); }
  auto at(std::size_t s) { return data_.segment(s * d_, d_); }

  AFunction operator+(const AFunction& o) const { return {n_, d_, Vec(data_ + o.data_)}; }
  AFunction operator-(const AFunction& o) const { return {n_, d_, Vec(data_ - o.data_)}; }
  AFunction operator*(cd c) const { return {n_, d_, Vec(c * data_)}; }

private:
  std::size_t n_ = 0, d_ = 0;
  Vec data_;
};

double max_abs_diff(const AFunction& a, const AFunction& b);

} // namespace xprod
