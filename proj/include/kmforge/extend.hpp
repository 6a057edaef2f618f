#pragma once

#include "kmforge/homomorphism.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/witness.hpp"

namespace kmforge {

/// Extends f: H -> target (certified by `w`) to H[Δ(a)] -> target sending
/// [ι] to target_delta: the class of φ(ι, h...) goes to φ(target_delta, f(h)...).
/// Throws DeltaMismatch unless target_delta is the least element dense over
/// f(a), NotWellDefined when classes or operations are not respected.
Homomorphism extend_hom(const OneStepResult& step, const Algebra& target, const Homomorphism& f,
                        const Witness& w, Elem target_delta);

struct CommuteIso {
  OneStepResult first_a, then_b;  // H[Δ(a)], then H[Δ(a)][Δ(b)]
  OneStepResult first_b, then_a;  // H[Δ(b)], then H[Δ(b)][Δ(a)]
  Homomorphism forward;           // H[Δ(a)][Δ(b)] -> H[Δ(b)][Δ(a)]
  Homomorphism backward;
};

/// Both double enrichments and the isomorphism between them, built from two
/// extensions in each direction. Throws ContractError unless the composites
/// are identities, H is fixed and the Δ-elements correspond.
CommuteIso commute_iso(const Algebra& h, Elem a, Elem b, std::size_t cap = kDefaultClosureCap);

}  // namespace kmforge
