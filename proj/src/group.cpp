#include "xprod/group.hpp"

#include "xprod/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace xprod {

const char* to_string(ErrorKind k)
{
  switch (k) {
  case ErrorKind::NotAssociative: return "NotAssociative";
  case ErrorKind::NoIdentity: return "NoIdentity";
  case ErrorKind::NoInverse: return "NoInverse";
  case ErrorKind::NotSubmultiplicative: return "NotSubmultiplicative";
  case ErrorKind::NotMultiplicative: return "NotMultiplicative";
  case ErrorKind::DimensionMismatch: return "DimensionMismatch";
  case ErrorKind::NotHomomorphism: return "NotHomomorphism";
  case ErrorKind::NotInvertible: return "NotInvertible";
  case ErrorKind::CovarianceViolated: return "CovarianceViolated";
  case ErrorKind::FlavorMismatch: return "FlavorMismatch";
  case ErrorKind::KernelNotIdeal: return "KernelNotIdeal";
  case ErrorKind::HypothesisViolated: return "HypothesisViolated";
  case ErrorKind::KernelNotRespected: return "KernelNotRespected";
  case ErrorKind::NotNonDegenerate: return "NotNonDegenerate";
  case ErrorKind::NotCentralizer: return "NotCentralizer";
  case ErrorKind::NotCommuting: return "NotCommuting";
  case ErrorKind::NoApproximateIdentity: return "NoApproximateIdentity";
  case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const
{
  std::vector<std::vector<std::size_t>> t(n_, std::vector<std::size_t>(n_));
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t u = 0; u < n_; ++u)
      t[s][u] = mul(s, u);
  return t;
}

FiniteGroup FiniteGroup::opposite() const
{
  FiniteGroup o = *this;
  for (std::size_t s = 0; s < n_; ++s)
    for (std::size_t t = 0; t < n_; ++t)
      o.table_[s * n_ + t] = table_[t * n_ + s];
  o.name_ = name_ + "^op";
  return o;
}

FiniteGroup make_group(const std::vector<std::vector<std::size_t>>& table, const std::string& name)
{
  const std::size_t n = table.size();
  if (n == 0)
    throw Error(ErrorKind::DimensionMismatch, "empty multiplication table");
  FiniteGroup g;
  g.n_ = n;
  g.name_ = name;
  g.table_.resize(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    if (table[s].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(s) + " has wrong length");
    for (std::size_t t = 0; t < n; ++t) {
      if (table[s][t] >= n)
        throw Error(ErrorKind::DimensionMismatch,
                    "entry (" + std::to_string(s) + "," + std::to_string(t) + ") out of range");
      g.table_[s * n + t] = table[s][t];
    }
  }

  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t)
        if (g.mul(g.mul(r, s), t) != g.mul(r, g.mul(s, t))) {
          std::ostringstream os;
          os << "(" << r << "," << s << "," << t << ")";
          throw Error(ErrorKind::NotAssociative, os.str());
        }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t s = 0; s < n && ok; ++s)
      ok = g.mul(e, s) == s && g.mul(s, e) == s;
    if (ok) {
      g.e_ = e;
      found = true;
    }
  }
  if (!found)
    throw Error(ErrorKind::NoIdentity, "no two-sided identity in the table");

  g.inverse_.assign(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t)
      if (g.mul(s, t) == g.e_ && g.mul(t, s) == g.e_) {
        g.inverse_[s] = t;
        break;
      }
    if (g.inverse_[s] == n)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(s));
  }
  g.modular_.assign(n, 1.0);
  return g;
}

FiniteGroup cyclic_group(std::size_t n)
{
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = (a + b) % n;
  return make_group(t, "Z_" + std::to_string(n));
}

std::vector<std::vector<int>> symmetric_group_elements(std::size_t n)
{
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do
    out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric_group(std::size_t n)
{
  auto el = symmetric_group_elements(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < el.size(); ++i)
    index[el[i]] = i;
  std::vector<std::vector<std::size_t>> t(el.size(), std::vector<std::size_t>(el.size()));
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = 0; b < el.size(); ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i)
        c[i] = el[a][el[b][i]];
      t[a][b] = index.at(c);
    }
  return make_group(t, "S_" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n)
{
  // r^k s^j * r^l s^m = r^(k + (-1)^j l) s^(j+m)
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t k = a % n, j = a / n, l = b % n, m = b / n;
      std::size_t rk = j == 0 ? (k + l) % n : (k + n - l) % n;
      t[a][b] = rk + n * ((j + m) % 2);
    }
  return make_group(t, "D_" + std::to_string(n));
}

FiniteGroup group_by_name(const std::string& name)
{
  auto bad = [&] { return Error(ErrorKind::InvalidConfig, "unknown group '" + name + "'"); };
  if (name.size() < 3 || name[1] != '_')
    throw bad();
  std::size_t n = 0;
  try {
    n = std::stoul(name.substr(2));
  } catch (...) {
    throw bad();
  }
  if (n == 0)
    throw bad();
  switch (name[0]) {
  case 'Z': return cyclic_group(n);
  case 'S':
    if (n > 5)
      throw Error(ErrorKind::InvalidConfig, "S_n limited to n <= 5");
    return symmetric_group(n);
  case 'D': return dihedral_group(n);
  default: throw bad();
  }
}

Weight make_weight(const FiniteGroup& g, const std::vector<double>& values)
{
  if (values.size() != g.order())
    throw Error(ErrorKind::DimensionMismatch, "weight length differs from group order");
  for (std::size_t s = 0; s < g.order(); ++s)
    if (!(values[s] > 0.0))
      throw Error(ErrorKind::NotSubmultiplicative, "weight not positive at " + std::to_string(s));
  if (values[g.identity()] < 1.0)
    throw Error(ErrorKind::NotSubmultiplicative, "weight at identity below 1");
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t)
      if (values[g.mul(s, t)] > values[s] * values[t] * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "(" << s << "," << t << ")";
        throw Error(ErrorKind::NotSubmultiplicative, os.str());
      }
  return Weight{values};
}

Weight unit_weight(const FiniteGroup& g) { return Weight{std::vector<double>(g.order(), 1.0)}; }

double weight_at_identity(const FiniteGroup& g, const Weight& w)
{
  // {e} is open, so the infimum is attained at Z = {e}
  return w(g.identity());
}

double Character::max_modulus() const
{
  double m = 0.0;
  for (auto v : values)
    m = std::max(m, std::abs(v));
  return m;
}

Character make_character(const FiniteGroup& g, const std::vector<cd>& values)
{
  if (values.size() != g.order())
    throw Error(ErrorKind::DimensionMismatch, "character length differs from group order");
  if (std::abs(values[g.identity()] - 1.0) > 1e-12)
    throw Error(ErrorKind::NotMultiplicative, "chi(e) != 1");
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (std::abs(values[s]) == 0.0)
      throw Error(ErrorKind::NotMultiplicative, "chi vanishes at " + std::to_string(s));
    for (std::size_t t = 0; t < g.order(); ++t)
      if (std::abs(values[g.mul(s, t)] - values[s] * values[t]) > 1e-12 * (1.0 + std::abs(values[g.mul(s, t)]))) {
        std::ostringstream os;
        os << "(" << s << "," << t << ")";
        throw Error(ErrorKind::NotMultiplicative, os.str());
      }
  }
  return Character{values};
}

Character trivial_character(const FiniteGroup& g) { return Character{std::vector<cd>(g.order(), 1.0)}; }

Character character_product(const Character& a, const Character& b)
{
  Character c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i)
    c.values[i] *= b.values[i];
  return c;
}

Character character_inverse(const Character& a)
{
  Character c = a;
  for (auto& v : c.values)
    v = 1.0 / v;
  return c;
}

Character modular_character(const FiniteGroup& g)
{
  Character c;
  for (std::size_t s = 0; s < g.order(); ++s)
    c.values.push_back(1.0 / g.modular(s));
  return c;
}

} // namespace xprod
