#pragma once

#include <string>
#include <vector>

#include "kmforge/algebra.hpp"

namespace kmforge {

struct CatalogEntry {
  std::string label;  // e.g. "up(P4#7)" or "chain6"
  Algebra algebra;
};

/// Up-set algebras of all posets with 1..max_poset_points points (one per
/// isomorphism class) plus the chains with 2..max_chain elements, with
/// isomorphic duplicates removed. Ordered by size, poset algebras before
/// chains of the same size, then by poset point count and canonical code.
std::vector<CatalogEntry> catalog(std::size_t max_poset_points, std::size_t max_chain);

/// Same, keeping only algebras with at most `max_size` elements.
std::vector<CatalogEntry> catalog_up_to_size(std::size_t max_poset_points, std::size_t max_chain,
                                             std::size_t max_size);

}  // namespace kmforge
