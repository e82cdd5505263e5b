#pragma once

#include "xprod/linalg.hpp"

#include <string>
#include <vector>

namespace xprod {

// A finite group given by its multiplication table. Elements are 0..n-1.
// Haar measure is counting measure, so the modular function is identically 1.
class FiniteGroup {
public:
  FiniteGroup() = default;

  std::size_t order() const { return n_; }
  std::size_t identity() const { return e_; }
  std::size_t mul(std::size_t s, std::size_t t) const { return table_[s * n_ + t]; }
  std::size_t inv(std::size_t s) const { return inverse_[s]; }
  double modular(std::size_t s) const { return modular_[s]; }
  const std::string& name() const { return name_; }
  std::vector<std::vector<std::size_t>> table() const;

  // mult_op[s][t] = mult[t][s]; same underlying set and identity.
  FiniteGroup opposite() const;

  friend FiniteGroup make_group(const std::vector<std::vector<std::size_t>>& table,
                                const std::string& name);

private:
  std::size_t n_ = 0;
  std::size_t e_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<double> modular_;
  std::string name_;
};

// Validates closure, associativity, identity and inverses.
// Throws Error{NotAssociative | NoIdentity | NoInverse | DimensionMismatch}.
FiniteGroup make_group(const std::vector<std::vector<std::size_t>>& table,
                       const std::string& name = "custom");

FiniteGroup cyclic_group(std::size_t n);
// Permutations of {0..n-1} in lexicographic order, (st)(i) = s(t(i)).
FiniteGroup symmetric_group(std::size_t n);
// Order 2n; index k + n*j stands for r^k s^j with s r s = r^-1.
FiniteGroup dihedral_group(std::size_t n);
// "Z_n", "S_n", "D_n".
FiniteGroup group_by_name(const std::string& name);

std::vector<std::vector<int>> symmetric_group_elements(std::size_t n);

struct Weight {
  std::vector<double> values;
  double operator()(std::size_t s) const { return values[s]; }
};

// Positive, submultiplicative, w(e) >= 1. Throws NotSubmultiplicative naming (s,t).
Weight make_weight(const FiniteGroup& g, const std::vector<double>& values);
Weight unit_weight(const FiniteGroup& g);

// inf over neighbourhoods Z of e of sup_Z w. On a discrete group this is w(e).
double weight_at_identity(const FiniteGroup& g, const Weight& w);

struct Character {
  std::vector<cd> values;
  cd operator()(std::size_t s) const { return values[s]; }
  double max_modulus() const;
};

// chi(st) = chi(s) chi(t), chi(e) = 1, chi nonzero. Throws NotMultiplicative.
Character make_character(const FiniteGroup& g, const std::vector<cd>& values);
Character trivial_character(const FiniteGroup& g);
Character character_product(const Character& a, const Character& b);
Character character_inverse(const Character& a);
// The character s -> 1/modular(s) used by the anti-isomorphism.
Character modular_character(const FiniteGroup& g);

} // namespace xprod
