// Acceptance runner: one PASS/FAIL line per criterion, with runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "noohi/cli.hpp"
#include "noohi/homs.hpp"
#include "noohi/json_io.hpp"
#include "noohi/oracle.hpp"
#include "noohi/pi1.hpp"
#include "noohi/scheme.hpp"
#include "noohi/tietze.hpp"
#include "noohi/vk.hpp"

using namespace noohi;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

Json run_cli_json(const std::vector<std::string>& args, int& code) {
  std::vector<std::string> argv{"noohi"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  code = run_cli(argv, out, err);
  return out.str().empty() ? Json() : parse_json(out.str());
}

Outcome nodal_curve() {
  Outcome o;
  const std::string path = fixtures::corpus_path("nodal");
  int code = 0;
  const Json present = run_cli_json({"present", path, "--route", "closed", "--degrees", "2,3,4"}, code);
  if (code != kExitOk) o.fail("present exited with " + std::to_string(code));
  const Json& expr = present["expression"];
  if (expr["kind"] != "free" || expr["rank"] != 1) o.fail("expression is not a free group of rank 1: " + expr.dump());
  if (present["presentation"]["generators"].size() != 1 || !present["presentation"]["relators"].empty()) {
    o.fail("presentation is not one generator without relators");
  }
  for (int d = 2; d <= 4; ++d) {
    if (present["counts"][std::to_string(d)] != factorial(d)) o.fail("count at d=" + std::to_string(d) + " is not d!");
  }
  const Json verify = run_cli_json({"verify", path, "--route", "closed", "--degree-max", "3"}, code);
  if (code != kExitOk || verify["status"] != "pass") o.fail("verify at D=3 did not pass");
  if (o.passed) o.detail = "FreeGroup(1), counts 2 6 24, verify D=3 pass";
  return o;
}

std::uint64_t ipow(std::uint64_t base, long e) {
  std::uint64_t r = 1;
  for (long k = 0; k < e; ++k) r *= base;
  return r;
}

Outcome rank_formula() {
  Outcome o;
  std::vector<std::pair<std::string, SchemeConfig>> configs;
  for (const auto& name : fixtures::corpus_names()) configs.emplace_back(name, fixtures::load_corpus(name));
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 25; ++k) configs.emplace_back("random#" + std::to_string(k), fixtures::random_trivial_config(rng, 4, 4, 7));
  std::size_t product_checks = 0;
  for (const auto& [name, cfg] : configs) {
    require_valid(cfg);
    const long rank = free_rank(cfg);
    if (rank != cycle_rank(cfg)) o.fail(name + ": free rank differs from the cycle rank");
    if (!cfg.zero_dimensional_singularities()) continue;
    const Pi1Result r = pi1_devissage(cfg);
    for (int d = 2; d <= 3; ++d) {
      std::uint64_t expected = ipow(factorial(d), rank);
      for (const auto& c : cfg.components) expected *= count_homs(c.group.presentation(), d);
      if (count_homs(r.presentation, d) != expected) o.fail(name + ": product formula fails at d=" + std::to_string(d));
      ++product_checks;
    }
  }
  if (o.passed) o.detail = std::to_string(configs.size()) + " configs, " + std::to_string(product_checks) + " product checks";
  return o;
}

Outcome master_identity() {
  Outcome o;
  std::size_t nontrivial = 0;
  std::size_t checks = 0;
  for (const auto& name : fixtures::corpus_names()) {
    const SchemeConfig cfg = fixtures::load_corpus(name);
    bool c2_singular = false;
    bool nontrivial_maps = false;
    for (const auto& z : cfg.singulars) c2_singular = c2_singular || z.group.describe() == "C2";
    for (const auto& b : cfg.branches) {
      for (const auto& [g, w] : b.phi.images()) nontrivial_maps = nontrivial_maps || !w.empty();
    }
    if (c2_singular && nontrivial_maps) ++nontrivial;
    const Pi1Result r = compute_pi1(cfg, Route::automatic);
    for (int d = 2; d <= 3; ++d) {
      const OracleReport rep = compare(cfg, d, r);
      const Rational lhs = rep.groupoid_cardinality * Rational(static_cast<std::int64_t>(factorial(d)));
      if (!rep.passed || lhs != Rational(static_cast<std::int64_t>(rep.presentation_count))) {
        o.fail(name + ": identity fails at d=" + std::to_string(d));
      }
      ++checks;
    }
  }
  if (nontrivial < 2) o.fail("fewer than two corpus configs with a C2 singular group and non-trivial branch maps");
  if (o.passed) {
    o.detail = std::to_string(checks) + " exact checks, " + std::to_string(nontrivial) + " configs with C2 singular groups";
  }
  return o;
}

Outcome vk_forms() {
  Outcome o;
  const std::vector<int> degrees{2, 3};
  std::size_t cases = 0;
  for (const auto& pi : fixtures::small_groups()) {
    for (const auto& pi_prime : fixtures::small_groups()) {
      for (const auto& leg : fixtures::small_groups()) {
        for (int s = 1; s <= 3; ++s) {
          const EquivalenceReport rep = verify_vk_forms(fixtures::grid_vk_data(pi, pi_prime, leg, s), degrees);
          const std::string label = pi.describe() + "," + pi_prime.describe() + "," + leg.describe() + ",s=" + std::to_string(s);
          if (rep.counts.size() != 4) o.fail(label + ": not all four forms were counted");
          if (!rep.counts_agree()) o.fail(label + ": hom counts differ");
          if (!rep.maps_checked) o.fail(label + ": the (i)/(ii) maps were not verified");
          ++cases;
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(cases) + " grid cases, forms i-iv agree at d=2,3, maps verified";
  return o;
}

Outcome devissage_orders() {
  Outcome o;
  std::size_t multi = 0;
  for (const auto& name : fixtures::corpus_names()) {
    const SchemeConfig cfg = fixtures::load_corpus(name);
    if (cfg.m() == 0) continue;
    const auto order = devissage_order(cfg);
    for (std::size_t k = 1; k <= order.size(); ++k) {
      const std::vector<std::string> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
      if (!incidence_connected(restrict_to_singulars(cfg, prefix).config)) {
        o.fail(name + ": prefix of length " + std::to_string(k) + " is disconnected");
      }
    }
    const auto orders = all_devissage_orders(cfg);
    if (orders.size() < 2) continue;
    ++multi;
    const Pi1Result a = pi1_devissage(cfg, {VKForm::i, true, orders.front()});
    const Pi1Result b = pi1_devissage(cfg, {VKForm::i, true, orders.back()});
    for (int d = 1; d <= 3; ++d) {
      if (count_homs(a.presentation, d) != count_homs(b.presentation, d)) {
        o.fail(name + ": two orders disagree at d=" + std::to_string(d));
      }
    }
  }
  if (multi == 0) o.fail("no corpus config admits two orders");
  if (o.passed) o.detail = "all prefixes connected, " + std::to_string(multi) + " configs compared under two orders";
  return o;
}

Outcome rank_additivity() {
  Outcome o;
  std::vector<std::pair<std::string, SchemeConfig>> configs;
  for (const auto& name : fixtures::corpus_names()) configs.emplace_back(name, fixtures::load_corpus(name));
  std::mt19937_64 rng(77);
  for (int k = 0; k < 25; ++k) configs.emplace_back("random#" + std::to_string(k), fixtures::random_trivial_config(rng, 4, 4, 7));
  std::size_t splits = 0;
  for (const auto& [name, cfg] : configs) {
    if (cfg.m() == 0) continue;
    // Each split acts on the complement left by the previous one.
    SchemeConfig current = cfg;
    for (const auto& step : plan_devissage(cfg).splits) {
      const long lhs = free_rank(current);
      const long rhs = free_rank(step.t.config) + free_rank(step.complement.config) +
                       static_cast<long>(step.intersection.d()) - 1;
      if (lhs != rhs) o.fail(name + ": split at " + step.anchor + " is not additive");
      if (step.rank_whole != lhs || !step.additive) o.fail(name + ": plan arithmetic disagrees at " + step.anchor);
      current = step.complement.config;
      ++splits;
    }
  }
  if (o.passed) o.detail = std::to_string(splits) + " splits additive";
  return o;
}

Outcome tietze_soundness() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t shrunk = 0;
  for (int k = 0; k < 100; ++k) {
    const Presentation p = fixtures::random_presentation(rng, 4, 4, 6);
    const Presentation q = tietze_simplify(p);
    if (q.generators().size() < p.generators().size()) ++shrunk;
    for (int d = 1; d <= 4; ++d) {
      if (count_homs(p, d) != count_homs(q, d)) o.fail("presentation #" + std::to_string(k) + " changes at d=" + std::to_string(d));
    }
  }
  if (o.passed) o.detail = "100 presentations, " + std::to_string(shrunk) + " lost generators, counts kept at d<=4";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"nodal curve: closed form, counts d!, verify D=3", 1.0, nodal_curve},
      {"free rank formula and product of counts", 60.0, rank_formula},
      {"cover oracle identity on the corpus", 300.0, master_identity},
      {"four VK forms agree on the small-group grid", 120.0, vk_forms},
      {"devissage prefixes connected and order independent", 60.0, devissage_orders},
      {"rank additivity across splits", 60.0, rank_additivity},
      {"simplification preserves hom counts", 120.0, tietze_soundness},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && seconds > c.limit_seconds) o.fail("runtime above " + std::to_string(c.limit_seconds) + " s");
    if (!o.passed) ++failures;
    std::printf("%s [%d] %s (%.3f s): %s\n", o.passed ? "PASS" : "FAIL", index, c.name.c_str(), seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
