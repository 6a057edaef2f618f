#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kmforge/algebra.hpp"
#include "kmforge/homomorphism.hpp"
#include "kmforge/one_step.hpp"

namespace kmforge {

/// Certificate that hom: source -> target lies in the variety generated by
/// the source with its constants: a subalgebra S of source^I containing the
/// diagonal, and an onto projection q: S -> target.
struct Witness {
  Algebra source;
  Algebra target;
  Homomorphism hom;
  std::vector<std::size_t> index_dims;  // I as a formal product; tuples flattened first-dim fastest
  std::function<bool(const std::vector<Elem>&)> member;
  std::function<Elem(const std::vector<Elem>&)> project;  // meaningful on members only
  /// Generators of S with their required images under q.
  std::vector<std::pair<std::vector<Elem>, Elem>> generators;
  /// Members of S when S was materialised; empty for composed witnesses.
  std::vector<std::vector<Elem>> elements;

  std::size_t index_size() const;
  std::vector<Elem> diagonal(Elem x) const { return std::vector<Elem>(index_size(), x); }
};

/// Empty when every diagonal tuple is a member and projects onto hom(x).
std::string diagonal_violation(const Witness& w);

/// Empty when every generator is a member and projects to its listed image.
std::string generator_violation(const Witness& w);

struct PowerCheck {
  bool exhaustive = false;  // false when source^I exceeded the limit
  std::size_t members = 0;
  std::string violation;
};

/// Enumerates source^I (when at most `limit` tuples) and checks S is a
/// subalgebra and q a surjective homomorphism onto the target.
PowerCheck check_power(const Witness& w, std::size_t limit = 1u << 20);

/// I = {*}, S = source, q = f. Requires f onto the target.
Witness witness_for_surjection(const Algebra& source, const Algebra& target, const Homomorphism& f);

inline Witness trivial_witness(const Algebra& a) {
  return witness_for_surjection(a, a, Homomorphism::identity(a.size()));
}

/// I = D_a, S = H[ι], q = π; witnesses the embedding H -> H[Δ(a)].
Witness witness_for_onestep(const OneStepResult& step);

/// Witness for g after f: index I x J, S the J-tuples of members of the first
/// witness whose images lie in the second, projection r(q^J(u)).
Witness compose_witnesses(const Witness& first, const Witness& second);

}  // namespace kmforge
