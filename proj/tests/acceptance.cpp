#include "xprod/config.hpp"
#include "xprod/fixtures.hpp"
#include "xprod/suite.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>

using namespace xprod;

namespace {

struct Criterion {
  int id;
  std::string title;
  // (check id, fixture) that must run and pass; a skip here counts as a failure
  std::vector<std::pair<std::string, std::string>> required;
};

std::vector<std::pair<std::string, std::string>> on(const std::string& check, std::initializer_list<const char*> fx)
{
  std::vector<std::pair<std::string, std::string>> out;
  for (const char* f : fx)
    out.emplace_back(check, f);
  return out;
}

template <class... Ts>
std::vector<std::pair<std::string, std::string>> join(Ts... parts)
{
  std::vector<std::pair<std::string, std::string>> out;
  (out.insert(out.end(), parts.begin(), parts.end()), ...);
  return out;
}

} // namespace

int main()
{
  const auto all = {"F1", "F2", "F3", "F4", "F5"};
  const auto unital = {"F1", "F2", "F3", "F5"};
  const std::vector<Criterion> criteria = {
      {1, "convolution associativity and C_alpha-submultiplicativity", on("convolution-associativity", all)},
      {2, "isometric direct-sum realization for p in {1,2,inf}", on("direct-sum-realization", {"F2", "F3"})},
      {3, "left regular identity and embedding sandwich", on("left-regular-embedding", unital)},
      {4, "inequality chain (F3 non-isometric) and equality regime (F2)", on("inequality-chain", {"F2", "F3"})},
      {5, "general and Beurling correspondence roundtrips and bounds",
       join(on("beurling-correspondence", unital), on("crossed-correspondence", unital),
              on("scalar-classical", {"F1"}))},
      {6, "anti-isomorphism, anti-correspondence and bimodule roundtrips",
       join(on("anti-isomorphism", all), on("anti-correspondence", all), on("bimodule-correspondence", unital))},
      {7, "action catalogue, conjugation equivalences and companion derivations",
       join(on("action-catalogue", all), on("action-equivalences", all), on("companion-derivations", all))},
      {8, "tensor decomposition, uniqueness, norm bound and bimodule encoding",
       join(on("tensor-n-fold", unital), on("tensor-uniqueness", unital), on("tensor-norm-bound", all),
              on("bimodule-encoding", unital))},
      {9, "kernel oracle: SVD nullspace vs brute-force enumeration", on("kernel-oracle", all)},
  };

  std::vector<Fixture> fixtures;
  for (const auto& id : builtin_fixture_ids())
    fixtures.push_back(builtin_fixture(id));

  auto t0 = std::chrono::steady_clock::now();
  Report r = run_suite(fixtures, "all", kDefaultSeed);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::map<std::pair<std::string, std::string>, const CheckRecord*> by_key;
  for (const auto& c : r.checks)
    by_key[{c.check_id, c.fixture_id}] = &c;

  bool ok = true;
  for (const auto& crit : criteria) {
    bool pass = true;
    double worst = 0.0;
    std::size_t n = 0;
    std::string why;
    for (const auto& c : r.checks) {
      if (c.criterion != crit.id)
        continue;
      ++n;
      worst = std::max(worst, c.max_error);
      if (c.status == Status::Fail) {
        pass = false;
        why += " " + c.check_id + "/" + c.fixture_id + " failed: " + c.detail + ";";
      }
    }
    for (const auto& key : crit.required) {
      auto it = by_key.find(key);
      if (it == by_key.end() || it->second->status != Status::Pass) {
        pass = false;
        why += " " + key.first + "/" + key.second + " did not pass;";
      }
    }
    ok = ok && pass;
    std::printf("%s criterion %d: %s (%zu checks, max error %.2e)%s\n", pass ? "PASS" : "FAIL", crit.id,
                crit.title.c_str(), n, worst, why.c_str());
  }

  bool fast = secs < 60.0;
  ok = ok && fast;
  std::printf("%s runtime: full suite in %.2f s (limit 60 s); %zu pass, %zu fail, %zu skipped\n",
              fast ? "PASS" : "FAIL", secs, r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Skipped));
  return ok ? 0 : 1;
}
