// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "demorgan/cli.hpp"
#include "demorgan/duality.hpp"
#include "demorgan/generator.hpp"
#include "oracles.hpp"

using namespace demorgan;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const std::vector<CorpusEntry>& shared_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    CorpusSpec spec;
    spec.max_dual_points = 5;
    spec.max_algebra_size = 64;
    spec.random_count = 20;
    spec.seed = 2024;
    return corpus(spec);
  }();
  return entries;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Perfectness, decomposability and the dual-space condition on every dual
// space with at most max_points points.
Outcome theorem_equivalence(std::size_t max_points, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0, disagreements = 0, perfect = 0;
  for (const auto& x : enumerate_dual_spaces(max_points)) {
    const auto m = algebra_of(x);
    const bool cond1 = is_perfect_extension(m).perfect;
    const bool cond2 = decompose(m).ok();
    const bool cond3 = condition3_holds(x).holds;
    ++instances;
    perfect += cond1 ? 1 : 0;
    if (cond1 != cond3 || cond2 != cond3) ++disagreements;
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = disagreements == 0 && elapsed < budget_seconds;
  std::ostringstream s;
  s << instances << " dual spaces, " << perfect << " perfect, " << disagreements
    << " disagreements, " << elapsed << "s (budget " << budget_seconds << "s)";
  o.detail = s.str();
  return o;
}

Outcome ac1() { return theorem_equivalence(4, 120.0); }

Outcome ac2() {
  const std::vector<DeMorganAlgebra> factors{m1(), k3(), b2()};
  const auto m = product(factors);
  Outcome o;
  auto r = decompose(m);
  if (!r.ok()) return {false, "decomposition failed"};
  const auto& d = *r.decomposition;
  const bool counts = d.counts == std::array<std::size_t, 3>{1, 1, 1};
  const std::vector<Index> mapping(d.product_index.begin(), d.product_index.end());
  const bool iso = is_isomorphism(d.algebra, product(d.factors()), mapping);
  auto p = is_perfect_extension(m);
  bool singletons = true;
  for (const auto& f : p.report.fibers) singletons = singletons && f.extensions.size() == 1;
  const auto con_m = p.report.algebra_congruences.size();
  const auto con_b = p.report.skeleton_congruences.size();
  // Product congruences of simple factors: the product of the factor counts.
  std::size_t brute = 1;
  for (const auto& f : factors) brute *= brute_force_congruences(f).size();
  o.pass = counts && iso && p.perfect && singletons && con_m == 8 && con_b == 8 && brute == 8;
  std::ostringstream s;
  s << "counts (" << d.counts[0] << "," << d.counts[1] << "," << d.counts[2]
    << "), isomorphism " << (iso ? "verified" : "rejected") << ", |Con M| = " << con_m
    << " (factor brute force " << brute << "), |Con B(M)| = " << con_b;
  o.detail = s.str();
  return o;
}

Outcome ac3() {
  const auto m = c4();
  auto p = is_perfect_extension(m);
  std::size_t delta_fiber = 0;
  for (const auto& f : p.report.fibers) {
    if (f.skeleton_congruence.is_identity()) delta_fiber = f.extensions.size();
  }
  const auto dual = dual_space(m);
  auto c = condition3_holds(dual.space);
  if (c.holds || !c.violation) return {false, "condition (3) unexpectedly holds on the C4 dual"};
  auto [alpha, beta] = congruence_witnesses_from_violation(m, dual, c.violation->first,
                                                           c.violation->second);
  const auto sk = skeleton(m);
  const auto con = all_congruences(m);
  const bool witnesses = alpha != beta && restrict(alpha, sk) == restrict(beta, sk) &&
                         con.contains(alpha) && con.contains(beta) && is_compatible(m, alpha) &&
                         is_compatible(m, beta);
  Outcome o;
  o.pass = !p.perfect && delta_fiber == 3 && witnesses;
  std::ostringstream s;
  s << "Delta fiber size " << delta_fiber << ", witness (" << c.violation->first << ","
    << c.violation->second << "), alpha/beta " << (witnesses ? "distinct with equal restriction"
                                                             : "invalid");
  o.detail = s.str();
  return o;
}

Outcome ac4() {
  std::size_t checked = 0, mismatches = 0;
  for (const auto& e : shared_corpus()) {
    if (e.algebra.size() > 6) continue;
    ++checked;
    if (all_congruences(e.algebra) != brute_force_congruences(e.algebra)) ++mismatches;
  }
  const auto b = all_congruences(b2()).size(), k = all_congruences(k3()).size(),
             m = all_congruences(m1()).size(), c = all_congruences(c4()).size();
  Outcome o;
  o.pass = mismatches == 0 && checked > 0 && b == 2 && k == 2 && m == 2 && c == 4;
  std::ostringstream s;
  s << checked << " algebras, " << mismatches << " mismatches; |Con| B2=" << b << " K3=" << k
    << " M1=" << m << " C4=" << c;
  o.detail = s.str();
  return o;
}

Outcome ac5() {
  std::size_t algebras = 0, spaces = 0, hom_checked = 0, failures = 0;
  for (const auto& e : shared_corpus()) {
    const auto& m = e.algebra;
    if (m.size() > 16) continue;
    ++algebras;
    if (!find_isomorphism(algebra_of(dual_space(m).space), m)) ++failures;
    if (m.size() <= 8) {
      ++hom_checked;
      if (!find_isomorphism(dual_space(m).space, oracle::hom_dual_space(m))) ++failures;
    }
  }
  for (const auto& x : enumerate_dual_spaces(4)) {
    ++spaces;
    if (!find_isomorphism(dual_space(algebra_of(x)).space, x)) ++failures;
  }
  Outcome o;
  o.pass = failures == 0;
  std::ostringstream s;
  s << algebras << " algebras round-tripped, " << spaces << " dual spaces round-tripped, "
    << hom_checked << " compared with the hom-set dual, " << failures << " failures";
  o.detail = s.str();
  return o;
}

Outcome ac6() {
  std::size_t algebras = 0, skeleton_congruences = 0, exceptions = 0;
  for (const auto& e : shared_corpus()) {
    auto r = extension_report(e.algebra);
    ++algebras;
    for (const auto& f : r.fibers) {
      ++skeleton_congruences;
      if (f.extensions.empty()) ++exceptions;
    }
  }
  Outcome o;
  o.pass = exceptions == 0;
  std::ostringstream s;
  s << algebras << " algebras, " << skeleton_congruences << " skeleton congruences, "
    << exceptions << " without an extension";
  o.detail = s.str();
  return o;
}

Outcome ac7() {
  std::size_t algebras = 0, congruences = 0, failures = 0;
  for (const auto& e : shared_corpus()) {
    if (e.algebra.size() > 16) continue;
    auto r = decompose(e.algebra);
    if (!r.ok()) continue;
    ++algebras;
    for (const auto& theta : all_congruences(e.algebra)) {
      ++congruences;
      if (!skeleton_determination_check(*r.decomposition, theta).holds) ++failures;
    }
  }
  Outcome o;
  o.pass = failures == 0 && algebras > 0;
  std::ostringstream s;
  s << algebras << " decomposable algebras, " << congruences << " congruences, " << failures
    << " failures";
  o.detail = s.str();
  return o;
}

Outcome ac8() {
  auto run = [](const std::string& jobs, int& code) {
    std::istringstream in;
    std::ostringstream out, err;
    code = cli::run({"verify-theorem", "--max-points", "4", "--jobs", jobs}, in, out, err);
    return out.str();
  };
  int code1 = -1, code8 = -1;
  const auto one = run("1", code1);
  const auto eight = run("8", code8);
  Outcome o;
  o.pass = one == eight && code1 == 0 && code8 == 0;
  std::ostringstream s;
  s << one.size() << " bytes, " << (one == eight ? "identical" : "different") << ", exit codes "
    << code1 << "/" << code8;
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 theorem equivalence, <= 4 points", ac1},
      {"AC2 M1 x K3 x B2 decomposition and perfectness", ac2},
      {"AC3 C4 negative certificate", ac3},
      {"AC4 congruence oracle", ac4},
      {"AC5 duality round trip and hom-set dual", ac5},
      {"AC6 CEP surjectivity", ac6},
      {"AC7 skeleton determination", ac7},
      {"AC8 verify-theorem output independent of --jobs", ac8},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  const auto stretch = theorem_equivalence(5, 1800.0);
  std::printf("INFO  stretch theorem equivalence, <= 5 points: %s: %s\n",
              stretch.pass ? "agrees" : "FAILS", stretch.detail.c_str());
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
