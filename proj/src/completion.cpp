#include "kmforge/completion.hpp"

#include "kmforge/errors.hpp"
#include "kmforge/one_step.hpp"

namespace kmforge {

Completion km_completion(const Algebra& h, std::size_t round_cap, std::size_t cap) {
  Completion out;
  Algebra current = h;
  out.embedding = Homomorphism::identity(h.size());

  for (;;) {
    if (out.rounds == round_cap) throw RoundCapExceeded(round_cap);
    ++out.rounds;
    const Algebra start = current;
    Homomorphism round = Homomorphism::identity(start.size());
    for (Elem c = 0; c < start.size(); ++c) {
      OneStepResult step = one_step(current, round(c), cap);
      round = round.then(step.embedding);
      current = step.algebra();
      ++out.steps;
    }
    out.embedding = out.embedding.then(round);
    bool stable = true;
    for (Elem c = 0; c < start.size() && stable; ++c)
      stable = round(delta_min(start, c)) == delta_min(current, round(c));
    if (stable) break;
  }

  out.km = km_from_heyting(current);
  if (auto v = km_axiom_violation(out.km.base, out.km.delta); !v.empty()) throw AxiomViolation(v);
  if (!out.embedding.injective() || !out.embedding.surjective(current.size()))
    throw ContractError("finite completion is not isomorphic to the input");
  KMAlgebra direct = km_from_heyting(h);
  for (Elem x = 0; x < h.size(); ++x)
    if (out.embedding(direct.delta[x]) != out.km.delta[out.embedding(x)])
      throw ContractError("completion disagrees with the direct Delta table at " + h.name(x));
  return out;
}

}  // namespace kmforge
