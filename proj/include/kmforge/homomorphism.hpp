#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmforge/algebra.hpp"

namespace kmforge {

/// A map between two algebras; which algebras is up to the holder.
struct Homomorphism {
  std::vector<Elem> map;

  Elem operator()(Elem x) const { return map[x]; }
  bool operator==(const Homomorphism&) const = default;

  static Homomorphism identity(std::size_t n);
  Homomorphism then(const Homomorphism& g) const;  // g after *this
  bool injective() const;
  bool surjective(std::size_t target_size) const;
};

/// Empty when `f` preserves bot, top, meet, join and impl on every pair.
std::string homomorphism_violation(const Algebra& src, const Algebra& dst, const Homomorphism& f);

inline bool is_homomorphism(const Algebra& src, const Algebra& dst, const Homomorphism& f) {
  return homomorphism_violation(src, dst, f).empty();
}

/// Backtracking search for an isomorphism a -> b, honouring `pinned` pairs.
/// Candidates are pruned by (height, up-set size, down-set size, covers).
std::optional<Homomorphism> find_isomorphism(const Algebra& a, const Algebra& b,
                                             std::span<const std::pair<Elem, Elem>> pinned = {});

inline std::optional<Homomorphism> is_isomorphic(const Algebra& a, const Algebra& b) {
  return find_isomorphism(a, b);
}

/// Every homomorphism src -> dst, by exhaustive search with pruning.
void for_each_homomorphism(const Algebra& src, const Algebra& dst,
                           const std::function<void(const Homomorphism&)>& fn);

}  // namespace kmforge
