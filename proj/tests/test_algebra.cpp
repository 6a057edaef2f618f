#include <doctest.h>

#include "helpers.hpp"
#include "kmforge/catalog.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/filter.hpp"
#include "kmforge/homomorphism.hpp"
#include "kmforge/subalgebra.hpp"
#include "kmforge/suites.hpp"

using namespace kmforge;
using testing::boolean4;
using testing::el;

TEST_CASE("up-set algebras of small posets") {
  CHECK(from_poset(FinitePoset::chain(1)).size() == 2);
  CHECK(is_isomorphic(from_poset(FinitePoset::chain(1)), chain(2)));

  Algebra b = boolean4();
  CHECK(b.size() == 4);
  Elem x = el(b, "{0}"), y = el(b, "{1}");
  CHECK(b.meet(x, y) == b.bot());
  CHECK(b.join(x, y) == b.top());
  CHECK(b.neg(x) == y);

  CHECK(is_isomorphic(from_poset(FinitePoset::chain(2)), chain(3)));
}

TEST_CASE("validate") {
  CHECK(validate(chain(3).tables()).ok());

  SUBCASE("altered implication breaks residuation at (m, m, 0)") {
    CandidateTables t = chain(3).tables();
    const Elem m = 1;
    t.impl[m * 3 + 0] = m;
    auto rep = validate(t);
    REQUIRE(rep.failed("residuation"));
    bool found = false;
    for (const auto& f : rep.failures)
      if (f.group == "residuation") found = f.evidence == std::vector<Elem>{m, m, 0};
    CHECK(found);
  }

  SUBCASE("M3 is not distributive") {
    CandidateTables t;
    t.n = 5;
    t.names = {"0", "x", "y", "z", "1"};
    t.leq.assign(25, 0);
    for (std::size_t i = 0; i < 5; ++i) {
      t.leq[i * 5 + i] = 1;
      t.leq[0 * 5 + i] = 1;
      t.leq[i * 5 + 4] = 1;
    }
    complete_from_order(t);
    auto rep = validate(t);
    CHECK(rep.failed("distributivity"));
    CHECK_THROWS_AS(Algebra::from_tables(t), ValidationError);
  }
}

TEST_CASE("generated subalgebras") {
  Algebra h = chain(3);
  AlgebraOracle ops{h};
  auto namer = [&](Elem v) { return h.name(v); };
  std::vector<Elem> all{0, 1, 2};
  auto s = generated_subalgebra(ops, std::span<const Elem>(all), 16, namer);
  CHECK(s.elements.size() == 3);
  CHECK_THROWS_AS(generated_subalgebra(ops, std::span<const Elem>(all), 2, namer), CapExceeded);

  SUBCASE("diagonal plus the inclusion of {m, 1}") {
    PowerOracle power{h, 2};
    const Elem z = 0, m = 1, one = 2;
    std::vector<std::vector<Elem>> gens{{m, one}, {z, z}, {m, m}, {one, one}};
    auto sub = generated_subalgebra(power, std::span<const std::vector<Elem>>(gens), 64,
                                    [&](const std::vector<Elem>& v) { return map_name(h, v); });
    CHECK(sub.elements.size() == 5);
    CHECK(sub.find({one, m}).has_value());
    // Brute force: the five pairs are closed, the other four are unreachable.
    for (const auto& u : sub.elements)
      for (const auto& w : sub.elements) {
        CHECK(sub.find(power.meet(u, w)));
        CHECK(sub.find(power.join(u, w)));
        CHECK(sub.find(power.impl(u, w)));
      }
    // Provenance replays to the same maps.
    auto replayed = replay_steps(power, std::span<const DerivationStep>(sub.steps),
                                 std::span<const std::vector<Elem>>(gens));
    CHECK(replayed == sub.elements);
  }
}

TEST_CASE("filters and quotients") {
  Algebra h = chain(3);
  const Elem m = el(h, "m"), one = h.top();
  Elem g1[] = {one};
  CHECK(filter_generated(h, g1).elements() == std::vector<Elem>{one});
  Elem g2[] = {m};
  CHECK(filter_generated(h, g2).elements() == std::vector<Elem>{m, one});

  Algebra b = boolean4();
  Elem g3[] = {el(b, "{0}"), el(b, "{1}")};
  Filter whole = filter_generated(b, g3);
  CHECK(whole.size() == 4);
  CHECK(whole.contains(b.bot()));

  Quotient q1 = quotient_by_filter(h, principal_filter(h, one));
  CHECK(q1.algebra.size() == 3);
  CHECK(Homomorphism{q1.projection}.injective());
  CHECK(quotient_by_filter(h, principal_filter(h, h.bot())).algebra.size() == 1);

  Quotient q = quotient_by_filter(h, principal_filter(h, m));
  CHECK(q.algebra.size() == 2);
  CHECK(q.projection[m] == q.projection[one]);
  CHECK(q.projection[h.bot()] != q.projection[m]);
}

TEST_CASE("isomorphism search") {
  auto id = is_isomorphic(chain(3), chain(3));
  REQUIRE(id);
  CHECK(*id == Homomorphism::identity(3));
  CHECK_FALSE(is_isomorphic(chain(3), boolean4()));

  CandidateTables t;
  t.n = 4;
  t.names = {"0", "a", "b", "1"};
  t.leq = {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  complete_from_order(t);
  CHECK(is_isomorphic(Algebra::from_tables(t), boolean4()));
}

TEST_CASE("catalog") {
  CHECK(catalog(1, 2).size() == 1);
  auto c = catalog(2, 3);
  REQUIRE(c.size() == 3);
  CHECK(c[0].algebra.size() == 2);
  CHECK(c[1].algebra.size() == 3);
  CHECK(c[2].algebra.size() == 4);
  CHECK(is_isomorphic(c[2].algebra, boolean4()));
  CHECK(catalog(0, 1).empty());
  // No two entries are isomorphic.
  auto big = catalog(4, 6);
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j)
      CHECK_FALSE(is_isomorphic(big[i].algebra, big[j].algebra));
}

TEST_CASE("structure invariants over catalog(4, 6)") {
  auto r = suite_structures(catalog(4, 6));
  CHECK_MESSAGE(r.passed(), (r.failures.empty() ? "" : r.failures.front()));
  CHECK(r.instances > 0);
}
