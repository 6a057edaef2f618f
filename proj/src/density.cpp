#include "kmforge/density.hpp"

#include "kmforge/errors.hpp"

namespace kmforge {

Filter dense_over(const Algebra& h, Elem a) {
  std::vector<bool> members(h.size());
  for (Elem d = 0; d < h.size(); ++d) members[d] = is_dense_over(h, a, d);
  return Filter::from_members(h, std::move(members));
}

DenseCharacterizations dense_characterizations(const Algebra& h, Elem a, Elem d) {
  DenseCharacterizations c;
  c.dense = is_dense_over(h, a, d);
  c.below = h.leq(h.impl(d, a), d);
  for (Elem x = 0; x < h.size(); ++x)
    if (h.join(x, h.impl(x, a)) == d) {
      c.of_join_form = true;
      c.witness = x;
      break;
    }
  return c;
}

Elem delta_min(const Algebra& h, Elem a) {
  Elem m = h.top();
  for (Elem d = 0; d < h.size(); ++d)
    if (is_dense_over(h, a, d)) m = h.meet(m, d);
  if (!is_dense_over(h, a, m)) throw ContractError("meet of dense elements is not dense");
  return m;
}

std::string km_axiom_violation(const Algebra& h, const std::vector<Elem>& delta) {
  if (delta.size() != h.size()) return "delta table has wrong length";
  for (Elem x = 0; x < h.size(); ++x) {
    if (delta[x] >= h.size()) return "delta leaves the algebra at " + h.name(x);
    if (!h.leq(x, delta[x])) return "x <= Dx fails at x=" + h.name(x);
    if (h.impl(delta[x], x) != x) return "Dx -> x = x fails at x=" + h.name(x);
    for (Elem y = 0; y < h.size(); ++y)
      if (!h.leq(delta[x], h.join(y, h.impl(y, x))))
        return "Dx <= y | (y -> x) fails at x=" + h.name(x) + ", y=" + h.name(y);
  }
  return {};
}

KMAlgebra km_from_heyting(const Algebra& h) {
  KMAlgebra k{h, std::vector<Elem>(h.size())};
  for (Elem a = 0; a < h.size(); ++a) k.delta[a] = delta_min(h, a);
  if (auto v = km_axiom_violation(h, k.delta); !v.empty()) throw AxiomViolation(v);
  return k;
}

KMAlgebra km_from_table(const Algebra& h, std::vector<Elem> delta) {
  if (auto v = km_axiom_violation(h, delta); !v.empty()) throw AxiomViolation(v);
  for (Elem a = 0; a < h.size(); ++a)
    if (delta[a] != delta_min(h, a))
      throw ContractError("KM table is not the least dense element at " + h.name(a));
  return {h, std::move(delta)};
}

bool check_delta_identity(const Algebra& h, Elem a, Elem a_prime) {
  for (Elem x = 0; x < h.size(); ++x) {
    Elem lhs = h.meet(h.impl(a, x), h.impl(h.impl(x, a), a));
    if (lhs != h.impl(a_prime, x)) return false;
  }
  return true;
}

Filter push_filter(const Algebra& src, const Algebra& dst, const Homomorphism& f, const Filter& F) {
  std::vector<Elem> image;
  for (Elem x = 0; x < src.size(); ++x)
    if (F.contains(x)) image.push_back(f(x));
  return filter_generated(dst, image);
}

bool delta_transfer_hypothesis(const Algebra& src, const Algebra& dst, const Homomorphism& f,
                               Elem a) {
  Elem fa = f(a);
  for (Elem dp = 0; dp < dst.size(); ++dp) {
    if (!is_dense_over(dst, fa, dp)) continue;
    bool covered = false;
    for (Elem d = 0; d < src.size() && !covered; ++d)
      covered = is_dense_over(src, a, d) && dst.leq(f(d), dp);
    if (!covered) return false;
  }
  return true;
}

}  // namespace kmforge
