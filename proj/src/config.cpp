#include "xprod/config.hpp"

#include "xprod/actions.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace xprod {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); }

std::vector<Mat> matrices_from_json(const json& j)
{
  if (!j.is_array())
    bad("expected an array of matrices");
  std::vector<Mat> out;
  for (const auto& m : j)
    out.push_back(matrix_from_json(m));
  return out;
}

FiniteGroup group_from_json(const json& j)
{
  if (j.is_string())
    return group_by_name(j.get<std::string>());
  if (j.is_object() && j.contains("table"))
    return make_group(j.at("table").get<std::vector<std::vector<std::size_t>>>(), j.value("name", "custom"));
  bad("group must be a name or {\"table\": ...}");
}

NormTag tag_from_string(const std::string& s)
{
  if (s == "sup")
    return NormTag::Sup;
  if (s == "one")
    return NormTag::One;
  if (s == "operator")
    return NormTag::Operator;
  bad("unknown norm '" + s + "'");
}

// {"dim": d, "norm": "sup", "entries": [[i, j, k, re, im], ...]}
NormedAlgebra algebra_from_json(const json& j)
{
  if (j.is_string())
    return algebra_by_name(j.get<std::string>());
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    bad("algebra must be a name or {\"dim\", \"entries\", \"norm\"}");
  std::size_t d = j.at("dim").get<std::size_t>();
  std::vector<cd> c(d * d * d, cd(0.0));
  for (const auto& e : j.at("entries")) {
    if (!e.is_array() || e.size() < 4)
      bad("structure entry must be [i, j, k, re(, im)]");
    std::size_t i = e[0].get<std::size_t>(), k1 = e[1].get<std::size_t>(), k2 = e[2].get<std::size_t>();
    if (i >= d || k1 >= d || k2 >= d)
      throw Error(ErrorKind::DimensionMismatch, "structure index out of range");
    c[(i * d + k1) * d + k2] = cd(e[3].get<double>(), e.size() > 4 ? e[4].get<double>() : 0.0);
  }
  NormTag tag = tag_from_string(j.value("norm", "sup"));
  std::optional<std::size_t> n;
  if (j.contains("op_n"))
    n = j.at("op_n").get<std::size_t>();
  return make_algebra(Structure(d, std::move(c)), tag, j.value("name", "custom"), n);
}

DynamicalSystem system_from_json(const NormedAlgebra& a, const FiniteGroup& g, const json& j)
{
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "trivial"))
    return trivial_action(a, g);
  if (j.is_object()) {
    if (j.contains("permutation"))
      return coordinate_permutation(a, g, j.at("permutation").get<std::vector<std::vector<std::size_t>>>());
    if (j.contains("conjugation"))
      return inner_conjugation(a, g, matrices_from_json(j.at("conjugation")));
    if (j.contains("matrices"))
      return make_system(a, g, matrices_from_json(j.at("matrices")), "custom");
  }
  bad("action must be \"trivial\" or one of {permutation, conjugation, matrices}");
}

PNorm pnorm_from_string(const std::string& s)
{
  if (s == "l1")
    return PNorm::One;
  if (s == "l2")
    return PNorm::Two;
  if (s == "linf")
    return PNorm::Inf;
  bad("unknown space '" + s + "'");
}

CovariantPair class_member_from_json(const DynamicalSystem& sys, const Weight& w,
                                     const std::vector<Character>& chars, const json& j)
{
  std::size_t k = j.value("character", std::size_t(0));
  if (k >= chars.size())
    bad("character index out of range");
  if (j.value("induced", false))
    return induced_pair(sys, w);
  if (j.contains("covariant_line"))
    return covariant_action(sys, j.at("covariant_line").get<int>(), chars[k]).pair;
  if (j.contains("pi") && j.contains("u")) {
    auto pi = matrices_from_json(j.at("pi"));
    auto u = matrices_from_json(j.at("u"));
    if (pi.empty())
      throw Error(ErrorKind::DimensionMismatch, "pair has no pi images");
    std::size_t m = std::size_t(pi[0].rows());
    return make_pair(sys, SpaceNorm::lp(m, pnorm_from_string(j.value("space", "l2"))), std::move(pi), std::move(u),
                     flavor_from_string(j.value("flavor", "(m,m)")), std::nullopt, j.value("label", "pair"));
  }
  bad("class member must be {induced}, {covariant_line, character} or {pi, u, space, flavor}");
}

} // namespace

std::uint64_t default_seed()
{
  if (const char* s = std::getenv(kSeedEnv)) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, std::string(kSeedEnv) + " is not an integer");
    }
  }
  return kDefaultSeed;
}

const std::vector<std::string>& suite_names()
{
  static const std::vector<std::string> names = {"core", "beurling", "correspondence", "anti",
                                                 "tensor", "actions", "all"};
  return names;
}

cd complex_from_json(const json& j)
{
  if (j.is_number())
    return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  bad("expected a number or [re, im], got " + j.dump());
}

json complex_to_json(cd z) { return json::array({z.real(), z.imag()}); }

Mat matrix_from_json(const json& j)
{
  if (!j.is_array() || j.empty() || !j[0].is_array())
    bad("matrix must be a non-empty array of rows");
  std::size_t rows = j.size(), cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json matrix_to_json(const Mat& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(complex_to_json(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

AFunction afunction_from_json(const json& j, std::size_t order, std::size_t dim)
{
  if (!j.is_object())
    bad("function must be an object keyed by group element");
  AFunction f(order, dim);
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::size_t s = 0;
    try {
      s = std::stoul(it.key());
    } catch (const std::exception&) {
      bad("bad group element key '" + it.key() + "'");
    }
    if (s >= order)
      throw Error(ErrorKind::DimensionMismatch, "group element " + it.key() + " out of range");
    const json& v = it.value();
    if (!v.is_array() || v.size() != dim)
      throw Error(ErrorKind::DimensionMismatch, "value at " + it.key() + " must have " + std::to_string(dim) +
                                                    " coordinates");
    for (std::size_t i = 0; i < dim; ++i)
      f.at(s)(Eigen::Index(i)) = complex_from_json(v[i]);
  }
  return f;
}

json afunction_to_json(const AFunction& f)
{
  json out = json::object();
  for (std::size_t s = 0; s < f.order(); ++s) {
    json v = json::array();
    for (std::size_t i = 0; i < f.dim(); ++i)
      v.push_back(complex_to_json(f.at(s)(Eigen::Index(i))));
    out[std::to_string(s)] = v;
  }
  return out;
}

// Runs f, prefixing any error with the config location it came from.
template <class F>
auto located(const std::string& path, F&& f) -> decltype(f())
{
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.detail());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, path + ": " + e.what());
  }
}

Fixture fixture_from_json(const json& j)
{
  if (j.is_string())
    return builtin_fixture(j.get<std::string>());
  if (j.contains("fixture"))
    return builtin_fixture(j.at("fixture").get<std::string>());
  if (!j.contains("group") || !j.contains("algebra"))
    bad("a fixture needs \"group\" and \"algebra\" (or a built-in \"fixture\" id)");

  Fixture fx;
  fx.id = j.value("id", "custom");
  FiniteGroup g = located("group", [&] { return group_from_json(j.at("group")); });
  NormedAlgebra a = located("algebra", [&] { return algebra_from_json(j.at("algebra")); });
  fx.sys = located("action", [&] { return system_from_json(a, g, j.contains("action") ? j.at("action") : json()); });
  fx.w = located("weight", [&] {
    return j.contains("weight") ? make_weight(g, j.at("weight").get<std::vector<double>>()) : unit_weight(g);
  });

  fx.characters.push_back(trivial_character(g));
  if (j.contains("characters")) {
    std::size_t i = 0;
    for (const auto& c : j.at("characters")) {
      fx.characters.push_back(located("characters[" + std::to_string(i++) + "]", [&] {
        std::vector<cd> v;
        for (const auto& z : c)
          v.push_back(complex_from_json(z));
        return make_character(g, v);
      }));
    }
  }

  if (j.contains("classes")) {
    std::size_t i = 0;
    for (const auto& m : j.at("classes"))
      fx.r.push_back(located("classes[" + std::to_string(i++) + "]",
                             [&] { return class_member_from_json(fx.sys, fx.w, fx.characters, m); }));
  } else {
    fx.r = default_class(fx.sys, fx.w);
  }
  fx.notes = j.value("notes", "");
  return fx;
}

Config config_from_json(const json& j)
{
  Config cfg;
  cfg.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : default_seed();
  cfg.suite = j.value("suite", "all");
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    bad("unknown suite '" + cfg.suite + "'");
  if (j.contains("tolerances")) {
    const json& t = j.at("tolerances");
    cfg.tol.equality = t.value("equality", cfg.tol.equality);
    cfg.tol.inequality = t.value("inequality", cfg.tol.inequality);
    cfg.tol.tight = t.value("tight", cfg.tol.tight);
  }
  if (j.contains("fixtures")) {
    std::size_t i = 0;
    for (const auto& f : j.at("fixtures")) {
      std::string path = "fixtures[" + std::to_string(i++) + "]";
      if (f.is_object() && f.contains("id"))
        path += " (" + f.at("id").get<std::string>() + ")";
      cfg.fixtures.push_back(located(path, [&] { return fixture_from_json(f); }));
    }
  } else if (j.contains("fixture") || j.contains("group")) {
    cfg.fixtures.push_back(fixture_from_json(j));
  } else {
    for (const auto& id : builtin_fixture_ids())
      cfg.fixtures.push_back(builtin_fixture(id));
  }
  return cfg;
}

json load_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    bad("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad("'" + path + "': " + e.what());
  }
}

Config load_config(const std::string& path) { return config_from_json(load_json(path)); }

} // namespace xprod
