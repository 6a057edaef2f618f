#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmforge/algebra.hpp"
#include "kmforge/filter.hpp"
#include "kmforge/homomorphism.hpp"

namespace kmforge {

/// d is dense over a: a <= d and d -> a = a.
inline bool is_dense_over(const Algebra& h, Elem a, Elem d) {
  return h.leq(a, d) && h.impl(d, a) == a;
}

/// The filter of elements dense over a.
Filter dense_over(const Algebra& h, Elem a);

/// Three equivalent descriptions of "d is dense over a". They must agree.
struct DenseCharacterizations {
  bool dense = false;           // a <= d and d -> a = a
  bool below = false;           // d -> a <= d
  bool of_join_form = false;    // d = h | (h -> a) for some h
  std::optional<Elem> witness;  // least such h, when it exists
  bool agree() const { return dense == below && below == of_join_form; }
};

DenseCharacterizations dense_characterizations(const Algebra& h, Elem a, Elem d);

/// Least element dense over a (exists in every finite algebra).
Elem delta_min(const Algebra& h, Elem a);

/// A Heyting algebra with a Δ table.
struct KMAlgebra {
  Algebra base;
  std::vector<Elem> delta;
};

/// Empty when the table satisfies x <= Δx, Δx -> x = x and
/// Δx <= y | (y -> x) for all x, y; otherwise the first failure.
std::string km_axiom_violation(const Algebra& h, const std::vector<Elem>& delta);

/// Δ := delta_min, axioms verified before returning (AxiomViolation).
KMAlgebra km_from_heyting(const Algebra& h);

/// Accepts a user-supplied Δ table, checks the KM identities (AxiomViolation)
/// and that it coincides with delta_min everywhere (ContractError), so the
/// identities force Δa to be the least dense element.
KMAlgebra km_from_table(const Algebra& h, std::vector<Elem> delta);

/// (a -> h) & ((h -> a) -> a) = a' -> h for every h.
bool check_delta_identity(const Algebra& h, Elem a, Elem a_prime);

/// Filter of the codomain generated by f(F).
Filter push_filter(const Algebra& src, const Algebra& dst, const Homomorphism& f, const Filter& F);

/// Hypothesis for Δ to commute with f at a: every d' dense over f(a) in dst
/// lies above f(d) for some d dense over a in src.
bool delta_transfer_hypothesis(const Algebra& src, const Algebra& dst, const Homomorphism& f,
                               Elem a);

}  // namespace kmforge
