#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kmforge/algebra.hpp"

namespace kmforge {

struct FinitePoset {
  std::size_t points = 0;
  std::vector<std::uint8_t> leq;  // row-major points*points

  bool le(std::size_t x, std::size_t y) const { return leq[x * points + y] != 0; }
  bool valid() const;

  static FinitePoset antichain(std::size_t k);
  static FinitePoset chain(std::size_t k);
};

/// Point sets are bitmasks, so posets are limited to this many points.
inline constexpr std::size_t kMaxPosetPoints = 20;

/// Up(P): the Heyting algebra of up-sets of P, with the mask of each element.
struct UpsetAlgebra {
  FinitePoset poset;
  Algebra algebra;
  std::vector<std::uint64_t> upsets;  // element -> point mask
  std::unordered_map<std::uint64_t, Elem> index;

  Elem element_of(std::uint64_t mask) const;
  bool is_upset(std::uint64_t mask) const;
};

UpsetAlgebra upset_algebra(const FinitePoset& p);

inline Algebra from_poset(const FinitePoset& p) { return upset_algebra(p).algebra; }

/// Lexicographically least relation code over all relabellings; equal codes
/// iff the posets are isomorphic.
std::uint64_t poset_canonical_code(const FinitePoset& p);

std::optional<std::vector<std::size_t>> poset_isomorphism(const FinitePoset& a, const FinitePoset& b);

/// One representative per isomorphism class of posets on exactly k points,
/// ordered by canonical code.
std::vector<FinitePoset> posets_up_to_iso(std::size_t k);

}  // namespace kmforge
