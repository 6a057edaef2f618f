#pragma once

#include "kmforge/density.hpp"
#include "kmforge/homomorphism.hpp"
#include "kmforge/subalgebra.hpp"

namespace kmforge {

struct Completion {
  KMAlgebra km;
  Homomorphism embedding;  // H -> km.base
  std::size_t rounds = 0;  // rounds until a round changed nothing
  std::size_t steps = 0;   // one-step enrichments performed
};

/// Repeats rounds of one-step enrichments over every element (ascending
/// index) until a round preserves Δ for every element. Checks the result
/// against km_from_heyting through the embedding and the KM identities.
/// Throws RoundCapExceeded after `round_cap` unstable rounds.
Completion km_completion(const Algebra& h, std::size_t round_cap = 8,
                         std::size_t cap = kDefaultClosureCap);

}  // namespace kmforge
