#include <doctest.h>

#include "helpers.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/stone.hpp"
#include "kmforge/suites.hpp"

using namespace kmforge;
using testing::boolean4;
using testing::el;

TEST_CASE("spectra") {
  Algebra h = chain(3);
  Spectrum s = spectrum(h);
  REQUIRE(s.size() == 2);
  CHECK(poset_isomorphism(s.poset, FinitePoset::chain(2)));
  // ↑1 ⊂ ↑m
  std::vector<Elem> gens = s.generators;
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<Elem>{el(h, "m"), h.top()});

  Spectrum two = spectrum(chain(2));
  REQUIRE(two.size() == 1);
  CHECK(two.primes[0].elements() == std::vector<Elem>{1});

  Spectrum b = spectrum(boolean4());
  CHECK(b.size() == 2);
  CHECK(poset_isomorphism(b.poset, FinitePoset::antichain(2)));

  CHECK_THROWS_AS(spectrum(trivial_algebra()), Degenerate);
}

TEST_CASE("the Stone map") {
  Algebra h = chain(3);
  StoneMap s = sigma(h);
  const Elem m = el(h, "m");
  CHECK(__builtin_popcountll(s.mask(m)) == 1);
  CHECK(s.mask(h.top()) == 0b11);
  CHECK(s.mask(h.bot()) == 0);

  CHECK(sigma_plus(s, 0) == s.mask(m));
  CHECK(sigma_plus(s, h.top()) == s.mask(h.top()));

  Algebra b = boolean4();
  StoneMap sb = sigma(b);
  CHECK(sigma_plus(sb, b.bot()) == sb.mask(b.top()));
}

TEST_CASE("the subalgebra generated with sigma(a)+") {
  Algebra h = chain(3);
  StoneMap s = sigma(h);
  CHECK(delta_subalgebra(s, 0).sub.elements.size() == 3);
  CHECK(delta_subalgebra(s, h.top()).sub.elements.size() == 3);
  Algebra b = boolean4();
  CHECK(delta_subalgebra(sigma(b), b.bot()).sub.elements.size() == 4);
}

TEST_CASE("comparison with the enrichment") {
  Algebra h = chain(3);
  Comparison c = compare_with_onestep(h, 0);
  CHECK(c.isomorphic());
  CHECK(c.plus_is_sigma_delta);
  CHECK(c.enriched_size == 3);
  for (const auto& e : catalog(3, 5)) {
    CHECK(compare_with_onestep(e.algebra, e.algebra.top()).isomorphic());
  }
}

TEST_CASE("open statement") {
  Algebra h = chain(3);
  auto r = open_statement_check(h, 0, 2);
  CHECK(r.held());
  CHECK(r.instances > 0);
  CHECK(r.triggered > 0);
  auto top = open_statement_check(h, h.top(), 2);
  CHECK(top.held());
}

TEST_CASE("duality invariants") {
  auto cat = catalog(3, 5);
  auto d = suite_duality(cat, 4);
  CHECK_MESSAGE(d.passed(), (d.failures.empty() ? "" : d.failures.front()));
  std::uint64_t cx = 9, dis = 9;
  auto f = suite_stone_findings(cat, 2, &cx, &dis);
  CHECK(f.passed());
  CHECK(cx == 0);
  CHECK(dis == 0);
  CHECK(f.findings.size() >= 2);
}
