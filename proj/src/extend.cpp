#include "kmforge/extend.hpp"

#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"

namespace kmforge {

Homomorphism extend_hom(const OneStepResult& step, const Algebra& target, const Homomorphism& f,
                        const Witness& w, Elem target_delta) {
  const Algebra& h = step.base();
  if (f.map.size() != h.size()) throw ArityMismatch("map does not cover the base algebra");
  if (!(w.hom == f) || !(w.target == target))
    throw ContractError("witness certifies a different homomorphism");
  if (auto v = diagonal_violation(w); !v.empty()) throw ContractError("invalid witness: " + v);
  if (target_delta != delta_min(target, f(step.anchor())))
    throw DeltaMismatch("target element is not the least element dense over f(a)");

  const EnrichedAlgebra& e = step.enriched;
  std::vector<Elem> gens(1 + h.size());
  gens[0] = target_delta;
  for (Elem c = 0; c < h.size(); ++c) gens[constant_var(c)] = f(c);
  auto values = replay_steps(AlgebraOracle{target}, std::span<const DerivationStep>(e.sub.steps),
                             std::span<const Elem>(gens));

  const Quotient& q = step.quotient;
  Homomorphism g;
  g.map.resize(q.classes.size());
  for (Elem c = 0; c < q.classes.size(); ++c) {
    g.map[c] = values[q.classes[c].front()];
    for (Elem x : q.classes[c])
      if (values[x] != g.map[c])
        throw NotWellDefined("class " + q.algebra.name(c) + " has members with different images");
  }
  if (auto v = homomorphism_violation(q.algebra, target, g); !v.empty())
    throw NotWellDefined("extension is not a homomorphism: " + v);
  for (Elem x = 0; x < h.size(); ++x)
    if (g(step.embedding(x)) != f(x)) throw NotWellDefined("extension does not restrict to f");
  if (g(step.delta_class) != target_delta) throw NotWellDefined("[iota] is not sent to the target");
  return g;
}

namespace {

struct Tower {
  OneStepResult first, second;
  Homomorphism embedding;  // H -> top of the tower
  Witness witness;
};

Tower build_tower(const Algebra& h, Elem x, Elem y, std::size_t cap) {
  OneStepResult first = one_step(h, x, cap);
  OneStepResult second = one_step(first.algebra(), first.embedding(y), cap);
  Homomorphism emb = first.embedding.then(second.embedding);
  Witness w = compose_witnesses(witness_for_onestep(first), witness_for_onestep(second));
  return {std::move(first), std::move(second), std::move(emb), std::move(w)};
}

// Extends H -> other.top first along x, then along y.
Homomorphism transfer(const Tower& from, const Tower& other, Elem x, Elem y) {
  const Algebra& dst = other.second.algebra();
  Elem dx = delta_min(dst, other.embedding(x));
  Homomorphism g1 = extend_hom(from.first, dst, other.embedding, other.witness, dx);
  Elem dy = delta_min(dst, g1(from.first.embedding(y)));
  Witness w1 = witness_for_surjection(from.first.algebra(), dst, g1);
  return extend_hom(from.second, dst, g1, w1, dy);
}

}  // namespace

CommuteIso commute_iso(const Algebra& h, Elem a, Elem b, std::size_t cap) {
  Tower ab = build_tower(h, a, b, cap);
  Tower ba = build_tower(h, b, a, cap);
  Homomorphism fwd = transfer(ab, ba, a, b);
  Homomorphism bwd = transfer(ba, ab, b, a);

  const std::size_t n = ab.second.algebra().size();
  if (fwd.then(bwd) != Homomorphism::identity(n) ||
      bwd.then(fwd) != Homomorphism::identity(ba.second.algebra().size()))
    throw ContractError("commuting extensions are not mutually inverse");
  for (Elem x = 0; x < h.size(); ++x)
    if (fwd(ab.embedding(x)) != ba.embedding(x)) throw ContractError("isomorphism moves H");
  const Elem delta_a_ab = ab.second.embedding(ab.first.delta_class);
  const Elem delta_a_ba = ba.second.delta_class;
  const Elem delta_b_ab = ab.second.delta_class;
  const Elem delta_b_ba = ba.second.embedding(ba.first.delta_class);
  if (fwd(delta_a_ab) != delta_a_ba || fwd(delta_b_ab) != delta_b_ba)
    throw ContractError("isomorphism does not match the Delta elements");
  return {std::move(ab.first), std::move(ab.second), std::move(ba.first), std::move(ba.second),
          std::move(fwd), std::move(bwd)};
}

}  // namespace kmforge
