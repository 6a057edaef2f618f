#include "kmforge/one_step.hpp"

#include <tuple>

#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"

namespace kmforge {

namespace {

void check_dense_identification(const EnrichedAlgebra& e) {
  auto pointwise = dense_in_iota(e);
  Filter intrinsic = dense_over(e.algebra(), e.diagonal[*e.anchor]);
  if (pointwise != intrinsic.members)
    throw TheoremViolation("dense", "pointwise density differs from density in H[iota]");
}

// h & x = h & y  implies  h & η(x) = h & η(y), for every η.
void check_partool(const EnrichedAlgebra& e) {
  const Algebra& h = e.base;
  std::vector<std::tuple<Elem, std::size_t, std::size_t>> premises;
  for (std::size_t i = 0; i < e.domain.size(); ++i)
    for (std::size_t j = i + 1; j < e.domain.size(); ++j)
      for (Elem c = 0; c < h.size(); ++c)
        if (h.meet(c, e.domain[i]) == h.meet(c, e.domain[j])) premises.emplace_back(c, i, j);
  for (Elem x = 0; x < e.size(); ++x) {
    const auto& m = e.map(x);
    for (auto [c, i, j] : premises)
      if (h.meet(c, m[i]) != h.meet(c, m[j]))
        throw TheoremViolation("partool", "fails for " + e.algebra().name(x) + " at h=" + h.name(c));
  }
}

// δ(1) <= δ(δ(1)) for dense δ.
void check_findone(const EnrichedAlgebra& e, const std::vector<bool>& dense) {
  const Algebra& h = e.base;
  for (Elem x = 0; x < e.size(); ++x) {
    if (!dense[x]) continue;
    Elem at_top = e.at(x, h.top());
    if (!h.leq(at_top, e.at(x, at_top)))
      throw TheoremViolation("findone", "fails for " + e.algebra().name(x));
  }
}

// ι -> η = ι -> (constant η(1)).
void check_iota_remark(const EnrichedAlgebra& e) {
  const Algebra& alg = e.algebra();
  for (Elem x = 0; x < e.size(); ++x) {
    Elem c = e.diagonal[e.at(x, e.base.top())];
    if (alg.impl(e.generator, x) != alg.impl(e.generator, c))
      throw TheoremViolation("iota-remark", "fails for " + alg.name(x));
  }
}

}  // namespace

OneStepResult one_step(const Algebra& h, Elem a, std::size_t cap) {
  if (a >= h.size()) throw DomainError("anchor outside the algebra");
  OneStepResult r;
  r.enriched = build_iota_algebra(h, a, cap);
  const EnrichedAlgebra& e = r.enriched;
  const Algebra& alg = e.algebra();

  if (a == h.top()) {
    // D_top = {top}: H[ι] is the diagonal and F_top = {top}.
    r.fa = principal_filter(alg, alg.top());
    r.quotient.algebra = alg;
    r.quotient.projection = Homomorphism::identity(alg.size()).map;
    for (Elem x = 0; x < alg.size(); ++x) r.quotient.classes.push_back({x});
  } else {
    r.fa = build_fa(e);
    r.quotient = quotient_by_filter(alg, r.fa);
  }
  r.pi.map = r.quotient.projection;
  r.embedding.map.resize(h.size());
  for (Elem x = 0; x < h.size(); ++x) r.embedding.map[x] = r.pi(e.diagonal[x]);
  r.delta_class = r.pi(e.generator);

  const Algebra& q = r.quotient.algebra;
  check_dense_identification(e);

  // (a) [ι] is the least element dense over [a].
  if (dense_over(q, r.embedding(a)).least() != r.delta_class)
    throw TheoremViolation("a", "[iota] is not the least element dense over [a]");

  // (b) H -> H[Δ(a)] is one-to-one; equivalently only top falls into F_a.
  if (!r.embedding.injective()) throw TheoremViolation("b", "embedding is not injective");
  for (Elem x = 0; x < h.size(); ++x)
    if (r.fa.contains(e.diagonal[x]) != (x == h.top()))
      throw TheoremViolation("b", "constant " + h.name(x) + " misplaced relative to F_a");
  if (auto v = homomorphism_violation(h, q, r.embedding); !v.empty())
    throw TheoremViolation("b", "embedding is not a homomorphism: " + v);

  // (c) Δ_H(b) stays the least dense element over b.
  for (Elem b = 0; b < h.size(); ++b)
    if (dense_over(q, r.embedding(b)).least() != r.embedding(delta_min(h, b)))
      throw TheoremViolation("c", "Delta of " + h.name(b) + " is not preserved");

  check_partool(e);
  check_findone(e, dense_in_iota(e));
  check_iota_remark(e);
  return r;
}

}  // namespace kmforge
