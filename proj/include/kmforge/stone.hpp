#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmforge/filter.hpp"
#include "kmforge/homomorphism.hpp"
#include "kmforge/poset.hpp"
#include "kmforge/subalgebra.hpp"

namespace kmforge {

/// Prime filters under inclusion.
struct Spectrum {
  std::vector<Filter> primes;
  std::vector<Elem> generators;  // least element of each prime
  FinitePoset poset;             // p <= q iff p is a subset of q
  std::size_t size() const { return primes.size(); }
};

/// Every filter of a finite algebra is principal, so the candidates are the
/// up-sets of single elements; each is kept when proper and prime.
/// Throws Degenerate on the one-element algebra.
Spectrum spectrum(const Algebra& h);

/// h -> {p : h in p}, into the up-sets of the spectrum. Throws ContractError
/// unless it is an isomorphism.
struct StoneMap {
  Spectrum spec;
  UpsetAlgebra upsets;
  Homomorphism sigma;  // H -> upsets.algebra
  std::uint64_t mask(Elem h) const { return upsets.upsets[sigma(h)]; }
};
StoneMap sigma(const Algebra& h);

/// σ(a) together with the maximal primes outside it, as an up-set mask.
std::uint64_t sigma_plus(const StoneMap& s, Elem a);

struct DeltaSubalgebra {
  Subalgebra<Elem> sub;    // inside the up-set algebra
  Homomorphism embedding;  // H -> sub.algebra
  Elem plus = 0;           // σ(a)+ in sub.algebra
};

/// Subalgebra of the up-sets generated by σ(H) and σ(a)+.
DeltaSubalgebra delta_subalgebra(const StoneMap& s, Elem a, std::size_t cap = kDefaultClosureCap);

struct Comparison {
  std::size_t enriched_size = 0, delta_size = 0;
  bool plus_is_sigma_delta = false;  // σ(a)+ = σ(Δ(a))
  bool well_defined = false;
  bool homomorphism = false;
  bool injective = false;
  bool surjective = false;
  std::string detail;
  bool isomorphic() const { return well_defined && homomorphism && injective && surjective; }
};

/// Tries H[Δ(a)] -> δ[H_a] fixing H along σ and sending [ι] to σ(a)+.
Comparison compare_with_onestep(const Algebra& h, Elem a, std::size_t cap = kDefaultClosureCap);

struct OpenStatementReport {
  std::size_t depth = 0, nvars = 0;
  std::uint64_t formulas = 0;        // formulas covered (saturating)
  std::uint64_t term_functions = 0;  // distinct functions on the up-set algebra
  std::uint64_t instances = 0;       // (function, parameters) pairs
  std::uint64_t triggered = 0;       // instances where φ(σ(a)+, ...) is not everything
  std::vector<std::string> counterexamples;  // first few
  std::uint64_t counterexample_count = 0;
  bool held() const { return counterexample_count == 0; }
};

/// Whenever φ(σ(a)+, σ(h)...) misses some prime, looks for d with
/// σ(a)+ ⊆ σ(d) and φ(σ(d), σ(h)...) also missing one. Parameters range
/// over H; p0 is the distinguished variable.
OpenStatementReport open_statement_check(const Algebra& h, Elem a, std::size_t depth,
                                         std::size_t nvars = 2);

}  // namespace kmforge
