#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/suites.hpp"
#include "kmforge/terms.hpp"

using namespace kmforge;
using testing::boolean4;
using testing::el;

TEST_CASE("parsing") {
  const Formula p = Formula::var(0);
  CHECK(parse("p -> p") == Formula::impl(p, p));
  CHECK_THROWS_AS(parse("((p->q)->p)->p)"), ParseError);
  CHECK(parse("~p") == Formula::impl(p, Formula::bot()));
  CHECK(parse("p0 <-> p1") == Formula::biimpl(p, Formula::var(1)));
  CHECK(parse("p -> q -> r") == parse("p -> (q -> r)"));
  CHECK(parse("p & q | r") == parse("(p & q) | r"));
}

TEST_CASE("evaluation") {
  Algebra h = chain(3);
  const Elem m = el(h, "m");
  for (Elem x = 0; x < h.size(); ++x) {
    Elem v[] = {x};
    CHECK(eval(h, parse("p -> p"), v) == h.top());
  }
  Elem peirce_at[] = {m, 0};
  CHECK(eval(h, parse("((p->q)->p)->p"), peirce_at) == m);
  // Identifiers numbered by first appearance: x, h, a.
  Elem lemma_at[] = {m, 0, 0};
  CHECK(eval(h, parse("x->((h->a)->h)"), lemma_at) == 0);
  Elem short_valuation[] = {m};
  CHECK_THROWS_AS(eval(h, parse("p0 & p1"), short_valuation), MissingVariable);
}

TEST_CASE("term enumeration") {
  auto zero = enumerate_terms(1, 0);
  REQUIRE(zero.size() == 3);
  CHECK(zero[0] == Formula::var(0));
  CHECK(zero[1] == Formula::bot());
  CHECK(zero[2] == Formula::top());

  // Two depth-0 closed terms, then 3 connectives over 2 x 2 ordered pairs.
  auto closed = enumerate_terms(0, 1);
  CHECK(closed.size() == 2 + 12);
  CHECK(count_terms(0, 1) == 14);

  auto two = enumerate_terms(2, 1);
  CHECK(std::find(two.begin(), two.end(), Formula::impl(Formula::var(0), Formula::var(1))) !=
        two.end());
  CHECK(two.size() == count_terms(2, 1));
  for (std::size_t i = 0; i < two.size(); ++i)
    for (std::size_t j = i + 1; j < two.size(); ++j) CHECK(two[i] != two[j]);
}

TEST_CASE("identities") {
  for (const auto& e : catalog(3, 5)) CHECK(holds_identity(e.algebra, parse("p & q"), parse("q & p")).holds);
  Algebra h = chain(3);
  auto lem = holds_identity(h, parse("p | ~p"), parse("1"));
  CHECK_FALSE(lem.holds);
  CHECK(lem.counterexample == std::vector<Elem>{el(h, "m")});
  CHECK(holds_identity(boolean4(), parse("p | ~p"), parse("1")).holds);
  CHECK_THROWS_AS(holds_identity(h, parse("p0 & p1"), parse("p0"), 1), ArityMismatch);
}

TEST_CASE("schemas") {
  auto eq = check_schema(Schema::Eqlemma, chain(3), {});
  CHECK(eq.passed());
  CHECK(eq.instances == 27);
  auto eqd = check_schema(Schema::EqD, boolean4(), {});
  CHECK(eqd.passed());
  CHECK(eqd.instances == 64);
  auto main = check_schema(Schema::Maintool, chain(2), {2, 2});
  CHECK(main.passed());
  CHECK(main.formulas == count_terms(2, 2));
  CHECK(schema_from_string("congruence") == Schema::Congruence);
  CHECK_FALSE(schema_from_string("nope"));
}

TEST_CASE("term invariants over catalog(3, 5)") {
  auto cat = catalog(3, 5);
  auto t = suite_terms(cat, 2);
  CHECK_MESSAGE(t.passed(), (t.failures.empty() ? "" : t.failures.front()));
  auto a = suite_axioms(cat, 2);
  CHECK_MESSAGE(a.passed(), (a.failures.empty() ? "" : a.failures.front()));
}
