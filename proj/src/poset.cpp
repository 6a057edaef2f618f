#include "kmforge/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kmforge/errors.hpp"

namespace kmforge {

bool FinitePoset::valid() const {
  if (leq.size() != points * points) return false;
  for (std::size_t x = 0; x < points; ++x) {
    if (!le(x, x)) return false;
    for (std::size_t y = 0; y < points; ++y) {
      if (x != y && le(x, y) && le(y, x)) return false;
      for (std::size_t z = 0; z < points; ++z)
        if (le(x, y) && le(y, z) && !le(x, z)) return false;
    }
  }
  return true;
}

FinitePoset FinitePoset::antichain(std::size_t k) {
  FinitePoset p{k, std::vector<std::uint8_t>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i) p.leq[i * k + i] = 1;
  return p;
}

FinitePoset FinitePoset::chain(std::size_t k) {
  FinitePoset p{k, std::vector<std::uint8_t>(k * k, 0)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) p.leq[i * k + j] = 1;
  return p;
}

bool UpsetAlgebra::is_upset(std::uint64_t mask) const {
  for (std::size_t x = 0; x < poset.points; ++x) {
    if (!(mask >> x & 1)) continue;
    for (std::size_t y = 0; y < poset.points; ++y)
      if (poset.le(x, y) && !(mask >> y & 1)) return false;
  }
  return true;
}

Elem UpsetAlgebra::element_of(std::uint64_t mask) const {
  auto it = index.find(mask);
  if (it == index.end()) throw ContractError("point set is not an up-set");
  return it->second;
}

UpsetAlgebra upset_algebra(const FinitePoset& p) {
  if (!p.valid()) throw ValidationError("poset order is not a partial order");
  if (p.points > kMaxPosetPoints) throw InputError("poset too large");
  const std::size_t k = p.points;
  UpsetAlgebra u;
  u.poset = p;
  std::vector<std::uint64_t> up(k, 0), down(k, 0);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (p.le(x, y)) up[x] |= std::uint64_t{1} << y;
      if (p.le(y, x)) down[x] |= std::uint64_t{1} << y;
    }
  const std::uint64_t full = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (std::uint64_t m = 0; m <= full; ++m) {
    bool closed = true;
    for (std::size_t x = 0; x < k && closed; ++x)
      if ((m >> x & 1) && (up[x] & ~m)) closed = false;
    if (closed) u.upsets.push_back(m);
  }
  // Order the elements by cardinality, then by mask, so bot comes first.
  std::stable_sort(u.upsets.begin(), u.upsets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t n = u.upsets.size();
  for (Elem i = 0; i < n; ++i) u.index.emplace(u.upsets[i], i);

  auto downclosure = [&](std::uint64_t s) {
    std::uint64_t d = 0;
    for (std::size_t x = 0; x < k; ++x)
      if (s >> x & 1) d |= down[x];
    return d;
  };

  std::vector<std::string> names(n);
  for (Elem i = 0; i < n; ++i) {
    std::string s = "{";
    bool first = true;
    for (std::size_t x = 0; x < k; ++x)
      if (u.upsets[i] >> x & 1) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
      }
    names[i] = s + "}";
  }
  std::vector<Elem> meet(n * n), join(n * n), impl(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::uint64_t x = u.upsets[a], y = u.upsets[b];
      meet[a * n + b] = u.index.at(x & y);
      join[a * n + b] = u.index.at(x | y);
      // U -> V is the complement of the down-closure of U \ V.
      impl[a * n + b] = u.index.at(full & ~downclosure(x & ~y));
    }
  u.algebra = Algebra::from_trusted(std::move(names), std::move(meet), std::move(join),
                                    std::move(impl), u.index.at(0), u.index.at(full));
  return u;
}

namespace {

std::uint64_t relation_code(const FinitePoset& p, const std::vector<std::size_t>& perm) {
  // perm maps new label -> old point
  std::uint64_t code = 0;
  const std::size_t k = p.points;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      code <<= 1;
      if (p.le(perm[i], perm[j])) code |= 1;
    }
  return code;
}

}  // namespace

std::uint64_t poset_canonical_code(const FinitePoset& p) {
  if (p.points > 8) throw InputError("canonical code limited to 8 points");
  std::vector<std::size_t> perm(p.points);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = relation_code(p, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, relation_code(p, perm));
  return best;
}

std::optional<std::vector<std::size_t>> poset_isomorphism(const FinitePoset& a,
                                                          const FinitePoset& b) {
  if (a.points != b.points) return std::nullopt;
  const std::size_t k = a.points;
  std::vector<std::size_t> map(k, 0);
  std::vector<bool> used(k, false);
  auto rec = [&](auto& self, std::size_t x) -> bool {
    if (x == k) return true;
    for (std::size_t y = 0; y < k; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::size_t z = 0; z < x && ok; ++z)
        ok = a.le(x, z) == b.le(y, map[z]) && a.le(z, x) == b.le(map[z], y);
      if (!ok || a.le(x, x) != b.le(y, y)) continue;
      used[y] = true;
      map[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

std::vector<FinitePoset> posets_up_to_iso(std::size_t k) {
  // Every poset has a linear extension, so it suffices to consider strict
  // relations contained in the natural order i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 28) throw InputError("poset enumeration limited to 8 points");
  std::map<std::uint64_t, FinitePoset> classes;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs.size()); ++s) {
    FinitePoset p = FinitePoset::antichain(k);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (s >> b & 1) p.leq[pairs[b].first * k + pairs[b].second] = 1;
    if (!p.valid()) continue;
    classes.emplace(poset_canonical_code(p), p);
  }
  std::vector<FinitePoset> out;
  for (auto& [code, p] : classes) out.push_back(p);
  return out;
}

}  // namespace kmforge
