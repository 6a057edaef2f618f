#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmforge/catalog.hpp"
#include "kmforge/subalgebra.hpp"

namespace kmforge {

/// Outcome of one exhaustive property sweep. Failures are broken
/// assertions; findings are recorded observations that are not contracts.
struct SuiteResult {
  std::string name;
  std::string bounds;  // human-readable sweep bounds
  std::uint64_t instances = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  // first few
  std::vector<std::string> findings;
  std::uint64_t capped_count = 0;     // instances skipped at the closure cap
  std::vector<std::string> capped;    // first few
  double seconds = 0;

  bool passed() const { return failure_count == 0; }
  bool complete() const { return capped_count == 0; }
  void check(bool ok, const std::string& what);
  void skip(const std::string& what);
};

using Catalog = std::vector<CatalogEntry>;

/// Table validation, residuation, and the schemas eqlemma, eqD (all triples)
/// plus maintool and congruence (2 variables, depth <= depth).
SuiteResult suite_axioms(const Catalog& cat, std::size_t depth);
/// Filter invariants of generated filters, quotients by {top}, closure of
/// generated subalgebras.
SuiteResult suite_structures(const Catalog& cat);
/// Monotonicity of eval (depth <= 2), print/parse round trip, f = f.
SuiteResult suite_terms(const Catalog& cat, std::size_t depth);
/// The three dense characterizations agree on every (H, a, d).
SuiteResult suite_dense_characterizations(const Catalog& cat);
/// Dense filters, the KM table, and the user-table direction.
SuiteResult suite_km_axioms(const Catalog& cat);
/// check_delta_identity(H, a, a') iff a' = Δ(a).
SuiteResult suite_delta_identity(const Catalog& cat);
/// push_filter keeps minima along onto maps; Δ commutes with f under the
/// transfer hypothesis. Algebras with at most `max_size` elements.
SuiteResult suite_homomorphisms(const Catalog& cat, std::size_t max_size = 4);
/// one_step on every (H, a), all theorem parts, and the collapse
/// H[Δ(a)] ≅ H with [ι] -> Δ(a).
SuiteResult suite_one_step(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// The 3-chain at a = 0 against the hand-derived tables.
SuiteResult suite_fixed_point();
/// free_one_generator: 4 elements on the 2-chain, provenance agreement, and
/// evaluation homomorphisms on every catalog algebra.
SuiteResult suite_free(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// extend_hom after the embedding is f, on every (H, a) with f = identity.
SuiteResult suite_extend(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// commute_iso on every (H, a, b).
SuiteResult suite_commute(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// witness_for_onestep diagonals on `cat`; composed witnesses on algebras
/// with at most 3 elements.
SuiteResult suite_witnesses(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// km_completion stabilizes in one round and matches km_from_heyting.
SuiteResult suite_completion(const Catalog& cat, std::size_t cap = kDefaultClosureCap);
/// Identities in 2 variables, depth <= depth, valid in H stay valid in H[Δ(a)].
SuiteResult suite_variety(const Catalog& cat, std::size_t depth,
                          std::size_t cap = kDefaultClosureCap);
/// Symbolic chain: verify_onestep_omega(depth), the remark at n0 = 2,
/// pointwise soundness and the quotient congruence on the sample.
SuiteResult suite_omega(std::size_t depth);
/// Duality, σ(a)+ = σ(Δ(a)), round trips on posets with at most
/// `poset_max` points.
SuiteResult suite_duality(const Catalog& cat, std::size_t poset_max);
/// Open statement sweep and comparison with δ[H_a]; outcomes are findings.
/// `counterexamples` and `disagreements` receive their totals.
SuiteResult suite_stone_findings(const Catalog& cat, std::size_t depth,
                                 std::uint64_t* counterexamples = nullptr,
                                 std::uint64_t* disagreements = nullptr,
                                 std::size_t cap = kDefaultClosureCap);

/// Every suite above over one catalog, in a fixed order.
std::vector<SuiteResult> run_all_suites(const Catalog& cat, std::size_t depth,
                                        std::size_t poset_max, std::size_t cap = kDefaultClosureCap);

}  // namespace kmforge
