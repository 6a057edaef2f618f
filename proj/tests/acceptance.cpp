// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kmforge/catalog.hpp"
#include "kmforge/suites.hpp"

using namespace kmforge;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<std::vector<SuiteResult>()> run;
  std::function<std::string()> extra;  // non-empty on failure beyond the suites
};

int failures = 0;

void report(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  std::string problem;
  try {
    results = c.run();
    if (c.extra) problem = c.extra();
  } catch (const std::exception& ex) {
    problem = std::string("exception: ") + ex.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::uint64_t checks = 0;
  for (const auto& r : results) {
    checks += r.instances;
    if (!r.passed() && problem.empty())
      problem = r.name + ": " + std::to_string(r.failure_count) + " failures, first: " +
                (r.failures.empty() ? "?" : r.failures.front());
    if (!r.complete() && problem.empty())
      problem = r.name + ": " + std::to_string(r.capped_count) + " instances over the cap, first: " +
                r.capped.front();
  }
  if (problem.empty() && secs > c.budget_seconds)
    problem = "over time budget of " + std::to_string(c.budget_seconds) + " s";

  const bool ok = problem.empty();
  if (!ok) ++failures;
  std::printf("%s %2d %s (%llu checks, %.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
              static_cast<unsigned long long>(checks), secs, ok ? "" : ": ", problem.c_str());
  for (const auto& r : results) {
    std::printf("        %s: %s\n", r.name.c_str(), r.bounds.c_str());
    for (const auto& f : r.findings) std::printf("        finding: %s\n", f.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  const Catalog c58 = catalog(5, 8);
  const Catalog c46 = catalog(4, 6);
  const Catalog c34 = catalog(3, 4);
  std::uint64_t counterexamples = 0, disagreements = 0;

  const std::vector<Criterion> criteria{
      {1, "axioms, residuation and identity schemas on catalog(5, 8), depth 3", 300,
       [&] { return std::vector{suite_axioms(c58, 3)}; }, {}},
      {2, "dense characterizations agree on catalog(5, 8)", 60,
       [&] { return std::vector{suite_dense_characterizations(c58)}; }, {}},
      {3, "Delta identity holds exactly at the least dense element, catalog(4, 6)", 60,
       [&] { return std::vector{suite_delta_identity(c46), suite_km_axioms(c46)}; }, {}},
      {4, "one-step enrichment on every (H, a) in catalog(4, 6)", 600,
       [&] { return std::vector{suite_one_step(c46)}; }, {}},
      {5, "3-chain at a = 0 matches the hand-derived tables", 1,
       [&] { return std::vector{suite_fixed_point()}; }, {}},
      {6, "free one-generator algebra and evaluation maps, catalog(3, 4)", 120,
       [&] { return std::vector{suite_free(c34), suite_extend(c34)}; }, {}},
      {7, "enrichments at a and b commute up to isomorphism, catalog(3, 4)", 300,
       [&] { return std::vector{suite_commute(c34)}; }, {}},
      {8, "variety witnesses and their compositions, catalog(4, 6)", 120,
       [&] { return std::vector{suite_witnesses(c46)}; }, {}},
      {9, "KM completion stabilizes in one round, catalog(4, 6)", 300,
       [&] { return std::vector{suite_completion(c46)}; }, {}},
      {10, "identities of depth <= 3 survive enrichment, catalog(3, 4)", 600,
       [&] { return std::vector{suite_variety(c34, 3)}; }, {}},
      {11, "symbolic chain: sampled one-step checks at depth 2 and the n0 = 2 remark", 60,
       [&] { return std::vector{suite_omega(2)}; }, {}},
      {12, "duality round trips; open statement and delta[H_a] comparison, catalog(4, 6)", 600,
       [&] {
         return std::vector{suite_duality(c46, 5),
                            suite_stone_findings(c46, 3, &counterexamples, &disagreements)};
       },
       [&]() -> std::string {
         if (counterexamples || disagreements)
           return std::to_string(counterexamples) + " counterexamples, " +
                  std::to_string(disagreements) + " disagreements";
         return "";
       }},
  };

  for (const auto& c : criteria) report(c);
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
