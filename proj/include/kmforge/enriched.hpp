#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmforge/algebra.hpp"
#include "kmforge/filter.hpp"
#include "kmforge/homomorphism.hpp"
#include "kmforge/subalgebra.hpp"

namespace kmforge {

using MapSubalgebra = Subalgebra<std::vector<Elem>, MapHash>;

/// A subalgebra of H^D generated by the constant maps and one extra map.
/// Provenance variables: p0 is the extra generator, p{1+h} the constant h.
struct EnrichedAlgebra {
  Algebra base;
  std::optional<Elem> anchor;  // empty for the free algebra (D = H)
  std::vector<Elem> domain;    // the index points, ascending
  MapSubalgebra sub;
  Elem generator = 0;          // element index of the extra map
  std::vector<Elem> diagonal;  // base element -> index of its constant map

  const Algebra& algebra() const { return sub.algebra; }
  std::size_t size() const { return sub.elements.size(); }
  const std::vector<Elem>& map(Elem e) const { return sub.elements[e]; }
  /// Position of a base element inside `domain`.
  std::size_t slot(Elem d) const;
  /// Value of element e at the domain point d.
  Elem at(Elem e, Elem d) const { return map(e)[slot(d)]; }
};

/// Provenance variable for the constant map with value h.
inline std::size_t constant_var(Elem h) { return 1 + static_cast<std::size_t>(h); }

/// H[ι] inside H^{D_a}, ι the inclusion of the dense elements.
EnrichedAlgebra build_iota_algebra(const Algebra& h, Elem a, std::size_t cap = kDefaultClosureCap);

/// H[i] inside H^H, i the identity map.
EnrichedAlgebra free_one_generator(const Algebra& h, std::size_t cap = kDefaultClosureCap);

/// Elements landing pointwise in D_a.
std::vector<bool> dense_in_iota(const EnrichedAlgebra& e);

/// The filter generated by ι -> δ for dense δ, computed from all dense δ and
/// from constant dense δ only. Throws GeneratorMismatch if the two differ or
/// the full generating set is not meet-closed.
Filter build_fa(const EnrichedAlgebra& e);

/// Empty when every element's map equals its provenance evaluated pointwise.
std::string provenance_violation(const EnrichedAlgebra& e);

/// Evaluation at a domain point, as a map of element indices into the base.
Homomorphism evaluation_at(const EnrichedAlgebra& e, Elem point);

}  // namespace kmforge
