#include "kmforge/filter.hpp"

#include <algorithm>

namespace kmforge {

std::size_t Filter::size() const { return std::count(members.begin(), members.end(), true); }

std::vector<Elem> Filter::elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < members.size(); ++x)
    if (members[x]) out.push_back(x);
  return out;
}

Filter Filter::from_members(const Algebra& h, std::vector<bool> members) {
  Filter f;
  f.members = std::move(members);
  for (Elem x = 0; x < h.size(); ++x) {
    if (!f.members[x]) continue;
    bool minimal = true;
    for (Elem y = 0; y < h.size() && minimal; ++y)
      if (f.members[y] && h.lt(y, x)) minimal = false;
    if (minimal) f.basis.push_back(x);
  }
  return f;
}

std::string filter_violation(const Algebra& h, const Filter& f) {
  if (f.members.size() != h.size()) return "member set has wrong size";
  if (!f.members[h.top()]) return "top is missing";
  for (Elem x = 0; x < h.size(); ++x) {
    if (!f.members[x]) continue;
    for (Elem y = 0; y < h.size(); ++y) {
      if (h.leq(x, y) && !f.members[y])
        return "not up-closed at " + h.name(x) + " <= " + h.name(y);
      if (f.members[y] && !f.members[h.meet(x, y)])
        return "not meet-closed at " + h.name(x) + ", " + h.name(y);
    }
  }
  return {};
}

Filter principal_filter(const Algebra& h, Elem x) {
  Filter f;
  f.members.assign(h.size(), false);
  for (Elem y = 0; y < h.size(); ++y) f.members[y] = h.leq(x, y);
  f.basis = {x};
  return f;
}

Filter filter_generated(const Algebra& h, std::span<const Elem> gens) {
  Elem m = h.top();
  for (Elem g : gens) m = h.meet(m, g);
  return principal_filter(h, m);
}

Quotient quotient_by_filter(const Algebra& h, const Filter& f) {
  const std::size_t n = h.size();
  Quotient q;
  q.projection.assign(n, kNoElem);
  std::vector<Elem> rep;
  for (Elem x = 0; x < n; ++x) {
    for (Elem c = 0; c < rep.size(); ++c)
      if (f.contains(h.biimpl(rep[c], x))) {
        q.projection[x] = c;
        break;
      }
    if (q.projection[x] == kNoElem) {
      q.projection[x] = static_cast<Elem>(rep.size());
      rep.push_back(x);
    }
  }
  const std::size_t k = rep.size();
  q.classes.resize(k);
  for (Elem x = 0; x < n; ++x) q.classes[q.projection[x]].push_back(x);
  std::vector<std::string> names(k);
  for (Elem c = 0; c < k; ++c) names[c] = "[" + h.name(rep[c]) + "]";
  std::vector<Elem> meet(k * k), join(k * k), impl(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      meet[a * k + b] = q.projection[h.meet(rep[a], rep[b])];
      join[a * k + b] = q.projection[h.join(rep[a], rep[b])];
      impl[a * k + b] = q.projection[h.impl(rep[a], rep[b])];
    }
  q.algebra = Algebra::from_trusted(std::move(names), std::move(meet), std::move(join),
                                    std::move(impl), q.projection[h.bot()], q.projection[h.top()]);
  return q;
}

}  // namespace kmforge
