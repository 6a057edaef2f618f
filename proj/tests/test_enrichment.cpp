#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/completion.hpp"
#include "kmforge/density.hpp"
#include "kmforge/enriched.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/extend.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/suites.hpp"
#include "kmforge/witness.hpp"

using namespace kmforge;
using testing::boolean4;
using testing::el;

namespace {

std::vector<std::string> names_of(const Algebra& h, const std::vector<bool>& in) {
  std::vector<std::string> out;
  for (Elem x = 0; x < h.size(); ++x)
    if (in[x]) out.push_back(h.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("H[iota] over the 3-chain at 0") {
  Algebra h = chain(3);
  EnrichedAlgebra e = build_iota_algebra(h, 0);
  const Algebra& a = e.algebra();
  CHECK(e.size() == 5);
  CHECK(a.name(e.generator) == "(m,1)");
  std::vector<std::string> all = a.names();
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<std::string>{"(0,0)", "(1,1)", "(1,m)", "(m,1)", "(m,m)"});
  // (1,m) is ι -> m.
  CHECK(a.impl(e.generator, e.diagonal[el(h, "m")]) == el(a, "(1,m)"));
  CHECK(provenance_violation(e).empty());

  auto dense = dense_in_iota(e);
  CHECK(names_of(a, dense) == std::vector<std::string>{"(1,1)", "(1,m)", "(m,1)", "(m,m)"});
  CHECK(dense[e.generator]);
  CHECK_FALSE(dense[e.diagonal[0]]);

  Filter fa = build_fa(e);
  REQUIRE(fa.basis.size() == 1);
  CHECK(a.name(fa.basis.front()) == "(1,m)");
  CHECK(names_of(a, fa.members) == std::vector<std::string>{"(1,1)", "(1,m)"});
}

TEST_CASE("degenerate index sets") {
  for (Algebra h : {chain(2), boolean4()}) {
    EnrichedAlgebra e = build_iota_algebra(h, h.bot());
    CHECK(e.domain.size() == 1);
    CHECK(is_isomorphic(e.algebra(), h));
    CHECK(e.generator == e.diagonal[h.top()]);
    Filter fa = build_fa(e);
    CHECK(fa.elements() == std::vector<Elem>{e.algebra().top()});
  }
  Algebra h = chain(3);
  EnrichedAlgebra top = build_iota_algebra(h, h.top());
  CHECK(build_fa(top).elements() == std::vector<Elem>{top.algebra().top()});
}

TEST_CASE("one step") {
  Algebra h = chain(3);
  OneStepResult s = one_step(h, 0);
  CHECK(s.quotient.classes.size() == 3);
  CHECK(s.delta_class == s.embedding(el(h, "m")));
  CHECK(s.delta_class == s.pi(s.enriched.generator));
  CHECK(s.embedding.injective());
  CHECK(is_homomorphism(h, s.algebra(), s.embedding));

  OneStepResult two = one_step(chain(2), 0);
  CHECK(two.algebra().size() == 2);
  CHECK(two.delta_class == two.embedding(1));

  for (const auto& e : catalog(3, 4)) {
    const Algebra& g = e.algebra;
    OneStepResult t = one_step(g, g.top());
    CHECK(t.algebra().size() == g.size());
    CHECK(t.delta_class == t.algebra().top());
  }
  CHECK_THROWS_AS(one_step(catalog(4, 4).back().algebra, 0, 2), CapExceeded);
}

TEST_CASE("free one-generator algebra") {
  EnrichedAlgebra f = free_one_generator(chain(2));
  CHECK(f.size() == 4);
  std::vector<std::string> names = f.algebra().names();
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"(0,0)", "(0,1)", "(1,0)", "(1,1)"});
  CHECK(f.algebra().name(f.generator) == "(0,1)");
  CHECK(f.algebra().impl(f.generator, f.diagonal[0]) == el(f.algebra(), "(1,0)"));

  CHECK(free_one_generator(trivial_algebra()).size() == 1);

  Algebra h = chain(3);
  EnrichedAlgebra g = free_one_generator(h);
  CHECK(provenance_violation(g).empty());
  const Algebra& a = g.algebra();
  const Elem m = g.diagonal[el(h, "m")];
  const Elem i_m = a.impl(g.generator, m);
  CHECK(a.impl(i_m, m) != i_m);
  // Closed under the operations, so the listed elements exist.
  for (Elem c : g.diagonal) CHECK(c < a.size());
}

TEST_CASE("extensions") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  OneStepResult s = one_step(h, 0);

  Homomorphism self = extend_hom(s, s.algebra(), s.embedding, witness_for_onestep(s), s.delta_class);
  CHECK(self == Homomorphism::identity(s.algebra().size()));

  Homomorphism id = Homomorphism::identity(3);
  Homomorphism g = extend_hom(s, h, id, trivial_witness(h), m);
  CHECK(g(s.delta_class) == m);
  CHECK(s.embedding.then(g) == id);
  CHECK(is_homomorphism(s.algebra(), h, g));
  CHECK_THROWS_AS(extend_hom(s, h, id, trivial_witness(h), h.top()), DeltaMismatch);

  Algebra b = boolean4();
  OneStepResult sb = one_step(b, b.bot());
  Homomorphism gb = extend_hom(sb, b, Homomorphism::identity(4), trivial_witness(b), b.top());
  CHECK(sb.embedding.then(gb) == Homomorphism::identity(4));
}

TEST_CASE("enrichments commute") {
  Algebra h = chain(3);
  CommuteIso c = commute_iso(h, 0, el(h, "m"));
  CHECK(c.then_b.algebra().size() == 3);
  CHECK(c.then_a.algebra().size() == 3);
  CHECK(c.forward.then(c.backward) == Homomorphism::identity(3));

  CommuteIso same = commute_iso(h, 0, 0);
  CHECK(same.forward.injective());
  CommuteIso two = commute_iso(chain(2), 0, 0);
  CHECK(two.forward == Homomorphism::identity(2));
}

TEST_CASE("witnesses") {
  Algebra h = chain(3);
  OneStepResult s = one_step(h, 0);
  Witness w = witness_for_onestep(s);
  CHECK(w.index_size() == 2);
  CHECK(w.elements.size() == 5);
  CHECK(diagonal_violation(w).empty());
  CHECK(generator_violation(w).empty());
  PowerCheck pc = check_power(w);
  CHECK(pc.exhaustive);
  CHECK(pc.members == 5);
  CHECK(pc.violation.empty());

  OneStepResult top = one_step(h, h.top());
  Witness wt = witness_for_onestep(top);
  CHECK(wt.index_size() == 1);
  CHECK(diagonal_violation(wt).empty());

  Witness trivial = compose_witnesses(trivial_witness(h), trivial_witness(h));
  CHECK(trivial.index_size() == 1);
  CHECK(trivial.hom == Homomorphism::identity(3));
  CHECK(diagonal_violation(trivial).empty());

  Algebra two = chain(2);
  OneStepResult s2 = one_step(two, 0);
  Witness w2 = witness_for_onestep(s2);
  CHECK(w2.index_size() == 1);
  Witness same = compose_witnesses(w2, trivial_witness(s2.algebra()));
  CHECK(same.hom == s2.embedding);
  CHECK(diagonal_violation(same).empty());

  OneStepResult s3 = one_step(s2.algebra(), s2.embedding(0));
  Witness both = compose_witnesses(w2, witness_for_onestep(s3));
  CHECK(both.hom == s2.embedding.then(s3.embedding));
  CHECK(diagonal_violation(both).empty());
  CHECK(generator_violation(both).empty());
  CHECK(check_power(both).violation.empty());

  // Composition after the 3-chain step.
  Witness w3 = compose_witnesses(w, witness_for_onestep(one_step(s.algebra(), s.embedding(0))));
  CHECK(diagonal_violation(w3).empty());
  CHECK(generator_violation(w3).empty());
}

TEST_CASE("KM completion") {
  Algebra h = chain(3);
  Completion c = km_completion(h);
  CHECK(c.rounds == 1);
  CHECK(c.km.base.size() == 3);
  KMAlgebra k = km_from_heyting(h);
  for (Elem x = 0; x < 3; ++x) CHECK(c.km.delta[c.embedding(x)] == c.embedding(k.delta[x]));

  Completion b = km_completion(boolean4());
  for (Elem x = 0; x < 4; ++x) CHECK(b.km.delta[x] == b.km.base.top());

  Completion t = km_completion(trivial_algebra());
  CHECK(t.km.base.size() == 1);
}

TEST_CASE("enrichment invariants over catalog(3, 5)") {
  auto cat = catalog(3, 5);
  for (auto r : {suite_one_step(cat), suite_fixed_point(), suite_free(cat), suite_extend(cat),
                 suite_commute(cat), suite_witnesses(cat), suite_completion(cat),
                 suite_variety(cat, 2)}) {
    CHECK_MESSAGE(r.passed(), r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.instances > 0);
  }
}
