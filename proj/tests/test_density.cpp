#include <doctest.h>

#include "helpers.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/suites.hpp"

using namespace kmforge;
using testing::boolean4;
using testing::el;

TEST_CASE("dense elements") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  CHECK(dense_over(h, 0).elements() == std::vector<Elem>{m, h.top()});
  Algebra b = boolean4();
  CHECK(dense_over(b, b.bot()).elements() == std::vector<Elem>{b.top()});
  for (const auto& e : catalog(3, 4))
    CHECK(dense_over(e.algebra, e.algebra.top()).elements() == std::vector<Elem>{e.algebra.top()});
}

TEST_CASE("dense characterizations") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  auto c = dense_characterizations(h, 0, m);
  CHECK(c.dense);
  CHECK(c.below);
  CHECK(c.of_join_form);
  CHECK(c.witness == m);
  auto n = dense_characterizations(h, 0, 0);
  CHECK_FALSE(n.dense);
  CHECK_FALSE(n.below);
  CHECK_FALSE(n.of_join_form);
  auto t = dense_characterizations(h, h.top(), h.top());
  CHECK(t.agree());
  CHECK(t.dense);
  // Every h works when a = 1; the least one is reported.
  CHECK(t.witness == h.bot());
}

TEST_CASE("least dense elements") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  CHECK(delta_min(h, 0) == m);
  CHECK(delta_min(h, m) == h.top());
  CHECK(delta_min(h, h.top()) == h.top());
  Algebra b = boolean4();
  for (Elem a = 0; a < 4; ++a) CHECK(delta_min(b, a) == b.top());
  Algebra two = chain(2);
  CHECK(delta_min(two, 0) == 1);
  CHECK(delta_min(two, 1) == 1);
}

TEST_CASE("KM tables") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  KMAlgebra k = km_from_heyting(h);
  CHECK(k.delta == std::vector<Elem>{m, h.top(), h.top()});
  CHECK(h.join(m, h.impl(m, 0)) == m);
  CHECK(km_from_heyting(boolean4()).delta == std::vector<Elem>(4, boolean4().top()));
  KMAlgebra t = km_from_heyting(trivial_algebra());
  CHECK(t.delta == std::vector<Elem>{0});

  SUBCASE("user tables") {
    CHECK(km_from_table(h, k.delta).delta == k.delta);
    // Δ0 = 1 is dense but not least: the third identity fails at y = m.
    std::vector<Elem> raised{h.top(), h.top(), h.top()};
    CHECK_FALSE(km_axiom_violation(h, raised).empty());
    CHECK_THROWS_AS(km_from_table(h, raised), AxiomViolation);
    // Δ0 = 0 is not dense.
    std::vector<Elem> low{0, h.top(), h.top()};
    CHECK_THROWS_AS(km_from_table(h, low), AxiomViolation);
  }
}

TEST_CASE("the Delta identity") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  CHECK(check_delta_identity(h, 0, m));
  CHECK_FALSE(check_delta_identity(h, 0, h.top()));
  CHECK(check_delta_identity(h, h.top(), h.top()));
}

TEST_CASE("pushing filters") {
  Algebra h = chain(3), two = chain(2);
  const Elem m = el(h, "m");
  Filter f = principal_filter(h, m);
  Homomorphism id = Homomorphism::identity(3);
  CHECK(push_filter(h, h, id, f) == f);
  CHECK(push_filter(h, h, id, f).least() == m);

  Homomorphism collapse{{0, 1, 1}};
  REQUIRE(is_homomorphism(h, two, collapse));
  Filter pushed = push_filter(h, two, collapse, f);
  CHECK(pushed.elements() == std::vector<Elem>{1});
  CHECK(pushed.least() == collapse(m));
  CHECK(push_filter(h, two, collapse, principal_filter(h, h.top())).elements() ==
        std::vector<Elem>{1});
}

TEST_CASE("density invariants over catalog(4, 6)") {
  auto cat = catalog(4, 6);
  for (auto r : {suite_dense_characterizations(cat), suite_km_axioms(cat), suite_delta_identity(cat),
                 suite_homomorphisms(cat)}) {
    CHECK_MESSAGE(r.passed(), r.name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.instances > 0);
  }
}
