#include "xprod/config.hpp"
#include "xprod/convolution.hpp"
#include "xprod/correspondence.hpp"
#include "xprod/error.hpp"
#include "xprod/fixtures.hpp"
#include "xprod/report.hpp"
#include "xprod/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace xprod;
using nlohmann::json;

namespace {

// "builtin" selects the five built-in fixtures
Config read_config(const std::string& path)
{
  if (path == "builtin")
    return config_from_json(json::object());
  return load_config(path);
}

// inline JSON or a path to a JSON file
json read_function(const std::string& arg)
{
  if (!arg.empty() && arg.front() == '{')
    return json::parse(arg);
  return load_json(arg);
}

json describe(const Fixture& fx)
{
  const auto& a = fx.sys.algebra();
  json ids = json::array();
  if (a.identity())
    ids.push_back("two-sided");
  else {
    if (a.left_identity())
      ids.push_back("left");
    if (a.right_identity())
      ids.push_back("right");
  }
  json cls = json::array();
  for (const auto& p : fx.r)
    cls.push_back({{"label", p.label}, {"space", p.space.describe()}, {"dim", p.space_dim()}});
  return {{"id", fx.id},
          {"group", fx.sys.group().name()},
          {"order", fx.sys.order()},
          {"algebra", a.name()},
          {"norm", to_string(a.norm_tag())},
          {"dim", a.dim()},
          {"identities", ids},
          {"c_alpha", {fx.sys.c_alpha().lower, fx.sys.c_alpha().upper}},
          {"isometric", fx.sys.isometric()},
          {"weight", fx.w.values},
          {"characters", fx.characters.size()},
          {"class", cls}};
}

void emit(const Report& r, const std::string& format, bool timings, const std::string& out)
{
  std::string text = format == "text" ? to_text(r, timings) : to_json(r, timings).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    std::ofstream(out) << text;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Crossed products of Banach algebras over finite groups"};
  app.require_subcommand(1);

  std::string config, f_arg, g_arg, suite, format = "json", out, input;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol, tight, slack;
  bool timings = false;

  auto* validate = app.add_subcommand("validate", "Parse a config and print the validated fixtures");
  validate->add_option("config", config, "JSON config, or 'builtin'")->required();

  auto* convolve = app.add_subcommand("convolve", "Twisted convolution f * g on the first fixture");
  convolve->add_option("config", config, "JSON config, or 'builtin'")->required();
  convolve->add_option("-f", f_arg, "function as inline JSON or a file")->required();
  convolve->add_option("-g", g_arg, "function as inline JSON or a file")->required();

  auto* crossed = app.add_subcommand("build-crossed", "Kernel and quotient of the supremum seminorm");
  crossed->add_option("config", config, "JSON config, or 'builtin'")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("config", config, "JSON config, or 'builtin'")->required();
  verify->add_option("--suite", suite, "core|beurling|correspondence|anti|tensor|actions|all");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--tol", tol, "relative tolerance for equalities");
  verify->add_option("--tol-tight", tight, "tolerance for entrywise identities and roundtrips");
  verify->add_option("--slack", slack, "rounding allowance for inequalities");
  verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "write the report here");
  verify->add_flag("--timings", timings, "include per-check elapsed seconds");

  auto* report = app.add_subcommand("report", "Render a report (runs the built-in suite without --input)");
  report->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
  report->add_option("--input", input, "a JSON report written by verify");
  report->add_option("--seed", seed, "random seed");
  report->add_flag("--timings", timings, "include per-check elapsed seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      Config cfg = read_config(config);
      json fx = json::array();
      for (const auto& f : cfg.fixtures)
        fx.push_back(describe(f));
      std::cout << json{{"suite", cfg.suite}, {"seed", cfg.seed}, {"fixtures", fx}}.dump(2) << "\n";
      return 0;
    }
    if (*convolve) {
      Config cfg = read_config(config);
      const auto& sys = cfg.fixtures.front().sys;
      AFunction f = afunction_from_json(read_function(f_arg), sys.order(), sys.dim());
      AFunction g = afunction_from_json(read_function(g_arg), sys.order(), sys.dim());
      std::cout << afunction_to_json(twisted_convolve(sys, f, g)).dump() << "\n";
      return 0;
    }
    if (*crossed) {
      Config cfg = read_config(config);
      json out_j = json::array();
      for (const auto& fx : cfg.fixtures) {
        CrossedProduct cp = build_crossed_product(fx.sys, fx.r);
        ClassNorms cn = class_norms(fx.sys, fx.r);
        json nu = json::array();
        for (const auto& b : cn.nu_r)
          nu.push_back({b.lower, b.upper});
        out_j.push_back({{"fixture", fx.id},
                         {"coefficient_dim", fx.sys.order() * fx.sys.dim()},
                         {"kernel_dim", cp.kernel().cols()},
                         {"quotient_dim", cp.quotient_dim()},
                         {"unital", cp.unit().has_value()},
                         {"c_r", {cn.c_r.lower, cn.c_r.upper}},
                         {"nu_r", nu}});
      }
      std::cout << out_j.dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      Config cfg = read_config(config);
      if (!suite.empty())
        cfg.suite = suite;
      if (seed)
        cfg.seed = *seed;
      if (tol)
        cfg.tol.equality = *tol;
      if (tight)
        cfg.tol.tight = *tight;
      if (slack)
        cfg.tol.inequality = *slack;
      Report r = run_suite(cfg);
      emit(r, format, timings, out);
      return r.passed() ? 0 : 1;
    }
    if (*report) {
      Report r;
      if (!input.empty()) {
        r = report_from_json(load_json(input));
      } else {
        Config cfg = config_from_json(json::object());
        r = run_suite(cfg.fixtures, "all", seed.value_or(cfg.seed), cfg.tol);
      }
      emit(r, format, timings, "");
      return r.passed() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
