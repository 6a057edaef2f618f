#include "kmforge/catalog.hpp"

#include <algorithm>
#include <tuple>

#include "kmforge/homomorphism.hpp"
#include "kmforge/poset.hpp"

namespace kmforge {

std::vector<CatalogEntry> catalog(std::size_t max_poset_points, std::size_t max_chain) {
  struct Candidate {
    std::tuple<std::size_t, int, std::size_t, std::size_t> key;
    CatalogEntry entry;
  };
  std::vector<Candidate> cands;
  for (std::size_t k = 1; k <= max_poset_points; ++k) {
    auto posets = posets_up_to_iso(k);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      Algebra a = from_poset(posets[i]);
      std::size_t size = a.size();
      cands.push_back({{size, 0, k, i},
                       {"up(P" + std::to_string(k) + "#" + std::to_string(i) + ")", std::move(a)}});
    }
  }
  for (std::size_t n = 2; n <= max_chain; ++n)
    cands.push_back({{n, 1, 0, 0}, {"chain" + std::to_string(n), chain(n)}});
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
  std::vector<CatalogEntry> out;
  for (auto& c : cands) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const CatalogEntry& e) {
      return e.algebra.size() == c.entry.algebra.size() &&
             is_isomorphic(e.algebra, c.entry.algebra).has_value();
    });
    if (!dup) out.push_back(std::move(c.entry));
  }
  return out;
}

std::vector<CatalogEntry> catalog_up_to_size(std::size_t max_poset_points, std::size_t max_chain,
                                             std::size_t max_size) {
  auto all = catalog(max_poset_points, max_chain);
  std::erase_if(all, [&](const CatalogEntry& e) { return e.algebra.size() > max_size; });
  return all;
}

}  // namespace kmforge
