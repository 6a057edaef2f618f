#include "kmforge/homomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace kmforge {

Homomorphism Homomorphism::identity(std::size_t n) {
  Homomorphism h;
  h.map.resize(n);
  std::iota(h.map.begin(), h.map.end(), Elem{0});
  return h;
}

Homomorphism Homomorphism::then(const Homomorphism& g) const {
  Homomorphism c;
  c.map.reserve(map.size());
  for (Elem x : map) c.map.push_back(g.map[x]);
  return c;
}

bool Homomorphism::injective() const {
  std::vector<Elem> s = map;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool Homomorphism::surjective(std::size_t target_size) const {
  std::vector<bool> hit(target_size, false);
  for (Elem x : map)
    if (x < target_size) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::string homomorphism_violation(const Algebra& src, const Algebra& dst, const Homomorphism& f) {
  if (f.map.size() != src.size()) return "map has wrong length";
  for (Elem x : f.map)
    if (x >= dst.size()) return "map leaves the target";
  if (f(src.bot()) != dst.bot()) return "bot not preserved";
  if (f(src.top()) != dst.top()) return "top not preserved";
  for (Elem x = 0; x < src.size(); ++x)
    for (Elem y = 0; y < src.size(); ++y) {
      if (f(src.meet(x, y)) != dst.meet(f(x), f(y)))
        return "meet not preserved at (" + src.name(x) + "," + src.name(y) + ")";
      if (f(src.join(x, y)) != dst.join(f(x), f(y)))
        return "join not preserved at (" + src.name(x) + "," + src.name(y) + ")";
      if (f(src.impl(x, y)) != dst.impl(f(x), f(y)))
        return "impl not preserved at (" + src.name(x) + "," + src.name(y) + ")";
    }
  return {};
}

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(const Algebra& h) {
  const std::size_t n = h.size();
  std::vector<std::size_t> height = h.heights();
  std::vector<Signature> sig(n, Signature{});
  for (Elem x = 0; x < n; ++x) sig[x][0] = height[x];
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (h.leq(x, y)) {
        ++sig[x][1];  // up-set size
        ++sig[y][2];  // down-set size
      }
  for (auto [lo, hi] : h.covers()) {
    ++sig[lo][3];
    ++sig[hi][4];
  }
  return sig;
}

}  // namespace

std::optional<Homomorphism> find_isomorphism(const Algebra& a, const Algebra& b,
                                             std::span<const std::pair<Elem, Elem>> pinned) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto sa = signatures(a), sb = signatures(b);
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }
  std::vector<Elem> forced(n, kNoElem);
  for (auto [x, y] : pinned) {
    if (x >= n || y >= n || sa[x] != sb[y]) return std::nullopt;
    if (forced[x] != kNoElem && forced[x] != y) return std::nullopt;
    forced[x] = y;
  }
  // Assign elements in order of height so comparabilities prune early;
  // pinned elements go first.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    bool fx = forced[x] != kNoElem, fy = forced[y] != kNoElem;
    if (fx != fy) return fx;
    return sa[x] < sa[y];
  });
  std::vector<Elem> map(n, kNoElem);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, Elem x, Elem y) {
    for (std::size_t i = 0; i < depth; ++i) {
      Elem z = order[i];
      if (a.leq(x, z) != b.leq(y, map[z]) || a.leq(z, x) != b.leq(map[z], y)) return false;
    }
    return true;
  };
  auto rec = [&](auto& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    Elem x = order[depth];
    auto attempt = [&](Elem y) {
      if (used[y] || sa[x] != sb[y] || !consistent(depth, x, y)) return false;
      used[y] = true;
      map[x] = y;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      map[x] = kNoElem;
      return false;
    };
    if (forced[x] != kNoElem) return attempt(forced[x]);
    for (Elem y = 0; y < n; ++y)
      if (attempt(y)) return true;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  Homomorphism h{map};
  // An order isomorphism of Heyting algebras preserves every operation;
  // confirm on the tables anyway.
  if (!is_homomorphism(a, b, h)) return std::nullopt;
  return h;
}

void for_each_homomorphism(const Algebra& src, const Algebra& dst,
                           const std::function<void(const Homomorphism&)>& fn) {
  const std::size_t n = src.size(), m = dst.size();
  std::vector<Elem> map(n, kNoElem);
  map[src.bot()] = dst.bot();
  map[src.top()] = dst.top();
  if (src.bot() == src.top() && dst.bot() != dst.top()) return;
  auto rec = [&](auto& self, Elem x) -> void {
    if (x == n) {
      Homomorphism h{map};
      if (is_homomorphism(src, dst, h)) fn(h);
      return;
    }
    if (x == src.bot() || x == src.top()) return self(self, x + 1);
    for (Elem y = 0; y < m; ++y) {
      map[x] = y;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z) {
        if (map[z] == kNoElem) continue;
        Elem mz = src.meet(x, z), jz = src.join(x, z);
        if (map[mz] != kNoElem && map[mz] != dst.meet(y, map[z])) ok = false;
        if (map[jz] != kNoElem && map[jz] != dst.join(y, map[z])) ok = false;
      }
      if (ok) self(self, x + 1);
    }
    map[x] = kNoElem;
  };
  rec(rec, 0);
}

}  // namespace kmforge
