#include "xprod/actions.hpp"

#include "xprod/error.hpp"

#include <array>

namespace xprod {

namespace {

using enum PiSide;
using enum Shift;

constexpr Twist kId = Twist::None;
constexpr Twist kA = Twist::Alpha;
constexpr Twist kAi = Twist::AlphaInverse;
constexpr CovarianceLaw kLawA = CovarianceLaw::Alpha;
constexpr CovarianceLaw kLawAi = CovarianceLaw::AlphaInverse;
constexpr CovarianceLaw kComm = CovarianceLaw::Commuting;

// rows of the covariant catalogue, in order
const std::array<ActionLine, 16> kCovariantLines = {{
    {Left, kId, kA, RInvS, Flavor::MM, kLawA},    // 1
    {Left, kId, kA, SR, Flavor::MM, kLawA},       // 2
    {Left, kA, kId, SR, Flavor::MM, kLawA},       // 3
    {Left, kAi, kId, RInvS, Flavor::MM, kLawA},   // 4
    {Left, kId, kAi, SRInv, Flavor::MA, kLawAi},  // 5
    {Left, kId, kAi, RS, Flavor::MA, kLawAi},     // 6
    {Left, kAi, kId, RS, Flavor::MA, kLawAi},     // 7
    {Left, kA, kId, SRInv, Flavor::MA, kLawAi},   // 8
    {Right, kId, kA, RInvS, Flavor::AM, kLawA},   // 9
    {Right, kId, kA, SR, Flavor::AM, kLawA},      // 10
    {Right, kA, kId, SR, Flavor::AM, kLawA},      // 11
    {Right, kAi, kId, RInvS, Flavor::AM, kLawA},  // 12
    {Right, kId, kAi, SRInv, Flavor::AA, kLawAi}, // 13
    {Right, kId, kAi, RS, Flavor::AA, kLawAi},    // 14
    {Right, kAi, kId, RS, Flavor::AA, kLawAi},    // 15
    {Right, kA, kId, SRInv, Flavor::AA, kLawAi},  // 16
}};

const std::array<ActionLine, 8> kCommutingLines = {{
    {Left, kA, kA, RInvS, Flavor::MM, kComm},    // 1
    {Left, kAi, kA, SR, Flavor::MM, kComm},      // 2
    {Left, kAi, kAi, SRInv, Flavor::MA, kComm},  // 3
    {Left, kA, kAi, RS, Flavor::MA, kComm},      // 4
    {Right, kA, kA, RInvS, Flavor::AM, kComm},   // 5
    {Right, kAi, kA, SR, Flavor::AM, kComm},     // 6
    {Right, kAi, kAi, SRInv, Flavor::AA, kComm}, // 7
    {Right, kA, kAi, RS, Flavor::AA, kComm},     // 8
}};

const Mat& twist(const DynamicalSystem& sys, Twist t, std::size_t g, const Mat& id)
{
  switch (t) {
  case Twist::None: return id;
  case Twist::Alpha: return sys.alpha(g);
  case Twist::AlphaInverse: return sys.alpha(sys.group().inv(g));
  }
  return id;
}

std::size_t shifted(const FiniteGroup& G, Shift sh, std::size_t r, std::size_t s)
{
  switch (sh) {
  case RInvS: return G.mul(G.inv(r), s);
  case SR: return G.mul(s, r);
  case SRInv: return G.mul(s, G.inv(r));
  case RS: return G.mul(r, s);
  }
  return s;
}

} // namespace

const ActionLine& covariant_line(int line)
{
  if (line < 1 || line > 16)
    throw Error(ErrorKind::InvalidConfig, "covariant catalogue has lines 1..16");
  return kCovariantLines[line - 1];
}

const ActionLine& commuting_line(int line)
{
  if (line < 1 || line > 8)
    throw Error(ErrorKind::InvalidConfig, "commuting catalogue has lines 1..8");
  return kCommutingLines[line - 1];
}

TableAction build_action(const DynamicalSystem& sys, const ActionLine& spec, const Character& chi,
                         const std::string& label)
{
  const FiniteGroup& G = sys.group();
  const NormedAlgebra& A = sys.algebra();
  const std::size_t n = G.order(), d = A.dim(), m = n * d;
  const Mat id = Mat::Identity(d, d);

  std::vector<Mat> pi(d, Mat::Zero(m, m));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < n; ++s) {
      Vec a = twist(sys, spec.pi_twist, s, id).col(i);
      pi[i].block(s * d, s * d, d, d) = spec.side == Left ? A.left_regular(a) : A.right_regular(a);
    }

  std::vector<Mat> u(n, Mat::Zero(m, m));
  for (std::size_t r = 0; r < n; ++r) {
    const Mat& beta = twist(sys, spec.u_twist, r, id);
    for (std::size_t s = 0; s < n; ++s)
      u[r].block(s * d, shifted(G, spec.shift, r, s) * d, d, d) = chi(r) * beta;
  }

  TableAction out;
  out.empirical = classify_flavor(sys, pi, u);
  bool pm = pi_multiplicative(spec.flavor), um = u_multiplicative(spec.flavor);
  bool pi_ok = pm ? out.empirical.pi_mult : out.empirical.pi_anti;
  bool u_ok = um ? out.empirical.u_mult : out.empirical.u_anti;
  Flavor used = spec.flavor;
  if (!pi_ok || !u_ok) {
    out.flavor_matches = false;
    bool epm = pi_ok ? pm : out.empirical.pi_mult;
    bool eum = u_ok ? um : out.empirical.u_mult;
    used = epm ? (eum ? Flavor::MM : Flavor::MA) : (eum ? Flavor::AM : Flavor::AA);
    out.discrepancy = label + ": printed " + to_string(spec.flavor) + ", observed " + to_string(used);
  }
  std::vector<double> w(n, 1.0);
  out.pair = make_pair(sys, SpaceNorm::blocks(A, w), std::move(pi), std::move(u), used, spec.law, label);
  return out;
}

TableAction covariant_action(const DynamicalSystem& sys, int line, const Character& chi)
{
  return build_action(sys, covariant_line(line), chi, "covariant line " + std::to_string(line));
}

TableAction commuting_action(const DynamicalSystem& sys, int line, const Character& chi)
{
  return build_action(sys, commuting_line(line), chi, "commuting line " + std::to_string(line));
}

} // namespace xprod
