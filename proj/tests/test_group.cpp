#include "xprod/error.hpp"
#include "xprod/group.hpp"

#include <gtest/gtest.h>

using namespace xprod;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidConfig;
}

// brute-force group axioms over all triples, independent of make_group
bool axioms_hold(const FiniteGroup& g)
{
  const std::size_t n = g.order(), e = g.identity();
  for (std::size_t s = 0; s < n; ++s) {
    if (g.mul(e, s) != s || g.mul(s, e) != s)
      return false;
    if (g.mul(s, g.inv(s)) != e || g.mul(g.inv(s), s) != e)
      return false;
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t u = 0; u < n; ++u)
        if (g.mul(g.mul(s, t), u) != g.mul(s, g.mul(t, u)))
          return false;
  }
  return true;
}

} // namespace

TEST(Group, CyclicAndSymmetricSatisfyAxioms)
{
  for (std::size_t n : {1, 2, 3, 4, 6})
    EXPECT_TRUE(axioms_hold(cyclic_group(n))) << n;
  EXPECT_TRUE(axioms_hold(symmetric_group(3)));
  EXPECT_TRUE(axioms_hold(dihedral_group(4)));
}

TEST(Group, S3IsNonAbelianAndTranspositionsAreInvolutions)
{
  FiniteGroup g = symmetric_group(3);
  ASSERT_EQ(g.order(), 6u);
  bool abelian = true;
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      abelian = abelian && g.mul(s, t) == g.mul(t, s);
  EXPECT_FALSE(abelian);

  auto perms = symmetric_group_elements(3);
  for (std::size_t s = 0; s < 6; ++s) {
    int fixed = 0;
    for (int i = 0; i < 3; ++i)
      fixed += perms[s][i] == i;
    if (fixed == 1)
      EXPECT_EQ(g.inv(s), s);
  }
}

TEST(Group, OppositeTableIsTranspose)
{
  FiniteGroup g = symmetric_group(3);
  FiniteGroup o = g.opposite();
  EXPECT_EQ(o.identity(), g.identity());
  for (std::size_t s = 0; s < 6; ++s)
    for (std::size_t t = 0; t < 6; ++t)
      EXPECT_EQ(o.mul(s, t), g.mul(t, s));
  EXPECT_TRUE(axioms_hold(o));
}

TEST(Group, ModularFunctionIsOne)
{
  FiniteGroup g = dihedral_group(3);
  for (std::size_t s = 0; s < g.order(); ++s)
    EXPECT_EQ(g.modular(s), 1.0);
}

TEST(Group, MalformedTablesAreRejected)
{
  EXPECT_EQ(kind_of([] { make_group({{0, 1}, {1}}); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { make_group({{0, 1}, {1, 2}}); }), ErrorKind::DimensionMismatch);
  // every product equals 0: associative, but no identity
  EXPECT_EQ(kind_of([] { make_group({{0, 0}, {0, 0}}); }), ErrorKind::NoIdentity);
  // left-zero semigroup with an adjoined identity is not a group
  EXPECT_EQ(kind_of([] { make_group({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}); }), ErrorKind::NoInverse);
  // a Latin square with identity 0 that is not associative
  EXPECT_EQ(kind_of([] {
              make_group({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
            }),
            ErrorKind::NotAssociative);
}

TEST(Group, ErrorNamesTheRow)
{
  try {
    make_group({{0, 1}, {1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("row 1"), std::string::npos) << e.what();
  }
}

TEST(Weight, SubmultiplicativityOnZ2)
{
  FiniteGroup g = cyclic_group(2);
  Weight w = make_weight(g, {1.0, 2.0});
  EXPECT_EQ(weight_at_identity(g, w), 1.0);
  try {
    make_weight(g, {1.0, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSubmultiplicative);
    EXPECT_NE(std::string(e.what()).find("(1,1)"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([&] { make_weight(g, {0.5, 1.0}); }), ErrorKind::NotSubmultiplicative);
}

TEST(Character, ProductsInversesAndRejection)
{
  FiniteGroup g = cyclic_group(4);
  const cd i(0.0, 1.0);
  Character chi = make_character(g, {1.0, i, -1.0, -i});
  Character sq = character_product(chi, chi);
  Character inv = character_inverse(chi);
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_NEAR(std::abs(sq(s) - std::pow(i, 2 * int(s))), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inv(s) * chi(s) - 1.0), 0.0, 1e-15);
  }
  EXPECT_EQ(kind_of([&] { make_character(g, {1.0, i, 1.0, -i}); }), ErrorKind::NotMultiplicative);
  EXPECT_EQ(kind_of([&] { make_character(g, {2.0, 1.0, 1.0, 1.0}); }), ErrorKind::NotMultiplicative);
  Character m = modular_character(g);
  for (std::size_t s = 0; s < 4; ++s)
    EXPECT_EQ(m(s), cd(1.0));
}
