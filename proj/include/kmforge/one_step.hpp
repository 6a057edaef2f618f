#pragma once

#include "kmforge/enriched.hpp"
#include "kmforge/filter.hpp"
#include "kmforge/homomorphism.hpp"

namespace kmforge {

/// H[ι] modulo the filter F_a, with the maps around it.
struct OneStepResult {
  EnrichedAlgebra enriched;
  Filter fa;
  Quotient quotient;       // quotient.algebra is the enriched algebra H[Δ(a)]
  Homomorphism pi;         // H[ι] -> quotient
  Homomorphism embedding;  // H -> quotient
  Elem delta_class = 0;    // class of ι

  const Algebra& base() const { return enriched.base; }
  const Algebra& algebra() const { return quotient.algebra; }
  Elem anchor() const { return *enriched.anchor; }
};

/// Builds H[Δ(a)] and checks, before returning, the three theorem parts
/// ("a", "b", "c") plus "partool", "findone" and "iota-remark". Failures
/// throw TheoremViolation naming the part.
OneStepResult one_step(const Algebra& h, Elem a, std::size_t cap = kDefaultClosureCap);

}  // namespace kmforge
