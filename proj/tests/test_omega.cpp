#include <doctest.h>

#include "kmforge/errors.hpp"
#include "kmforge/omega.hpp"
#include "kmforge/omega_verify.hpp"
#include "kmforge/suites.hpp"

using namespace kmforge::omega;
using kmforge::DomainError;

namespace {

OmegaElement inv(std::uint64_t n) { return OmegaElement::inverse(n); }

}  // namespace

TEST_CASE("chain operations") {
  CHECK(impl(inv(3), inv(5)) == inv(5));
  CHECK(impl(inv(5), inv(3)) == OmegaElement::one());
  CHECK(meet(inv(2), OmegaElement::zero()) == OmegaElement::zero());
  CHECK(impl(inv(2), OmegaElement::zero()) == OmegaElement::zero());
  CHECK(OmegaElement::parse("1/7") == inv(7));
  CHECK(OmegaElement::parse("0").is_zero());
  CHECK(inv(7).to_string() == "1/7");
  CHECK_THROWS_AS(OmegaElement::parse("2/3"), kmforge::InputError);
  // Residuation on a finite window, 0 included.
  std::vector<OmegaElement> pts{OmegaElement::zero(), OmegaElement::one()};
  for (std::uint64_t n = 2; n <= 8; ++n) pts.push_back(inv(n));
  for (auto x : pts)
    for (auto y : pts)
      for (auto z : pts) CHECK(leq(meet(x, y), z) == leq(x, impl(y, z)));
}

TEST_CASE("piecewise maps") {
  const PiecewiseMap iota = PiecewiseMap::iota();
  PiecewiseMap expected = PiecewiseMap::from_pieces(
      {Piece{1, false, 3, 0}, Piece{3, false, 1, 0}});
  CHECK(pw_impl(iota, PiecewiseMap::constant(inv(3))) == expected);
  CHECK(expected.apply(2) == inv(3));
  CHECK(expected.apply(3) == OmegaElement::one());

  for (std::int64_t n0 = 1; n0 <= 6; ++n0) {
    PiecewiseMap d0 = PiecewiseMap::shift(n0);
    CHECK(pw_impl(iota, d0) == d0);
    CHECK(pw_leq(d0, PiecewiseMap::constant(inv(static_cast<std::uint64_t>(n0)))));
  }
  CHECK(pw_meet(expected, expected) == expected);
  CHECK_THROWS_AS(PiecewiseMap::shift(-1), DomainError);

  // Non-canonical input normalises to the canonical form.
  PiecewiseMap split = PiecewiseMap::from_pieces({Piece{1, false, 4, 0}, Piece{5, false, 4, 0}});
  CHECK(split == PiecewiseMap::constant(inv(4)));
  CHECK(split.pieces().size() == 1);
  PiecewiseMap shifted = PiecewiseMap::from_pieces({Piece{1, false, 1, 0}, Piece{2, true, 0, 0}});
  CHECK(shifted == iota);
}

TEST_CASE("density and the filter F_0") {
  CHECK(dense_over_zero(inv(7)));
  CHECK_FALSE(dense_over_zero(OmegaElement::zero()));
  CHECK(dense_over_zero(PiecewiseMap::iota()));
  CHECK_FALSE(dense_over_zero(
      PiecewiseMap::from_pieces({Piece{1, false, 2, 0}, Piece{4, false, kInf, 0}})));

  CHECK(f0_member(PiecewiseMap::constant(OmegaElement::one())) == 1u);
  CHECK_FALSE(f0_member(PiecewiseMap::iota()));
  CHECK(f0_member(pw_impl(PiecewiseMap::iota(), PiecewiseMap::constant(inv(3)))) == 3u);
}

TEST_CASE("quotient relation") {
  const PiecewiseMap iota = PiecewiseMap::iota();
  CHECK(quotient_equiv(iota, iota));
  CHECK_FALSE(quotient_equiv(PiecewiseMap::constant(inv(2)), PiecewiseMap::constant(inv(3))));
  PiecewiseMap bumped = PiecewiseMap::from_pieces({Piece{1, false, 2, 0}, Piece{2, true, 0, 0}});
  CHECK(bumped != iota);
  CHECK(quotient_equiv(iota, bumped));
  CHECK_FALSE(quotient_equiv(PiecewiseMap::constant(OmegaElement::one()),
                             PiecewiseMap::constant(inv(2))));
}

TEST_CASE("sampled one-step checks") {
  OmegaReport r = verify_onestep_omega(2);
  CHECK(r.passed());
  REQUIRE(r.groups.size() == 5);
  for (const auto& g : r.groups) CHECK(g.instances > 0);
  CHECK(r.formulas > r.distinct_maps);
  // m = 4: 1/5 is dense and strictly below.
  CHECK(dense_over_zero(inv(5)));
  CHECK(leq(inv(5), inv(4)));
}

TEST_CASE("admitting a foreign dense generator") {
  RemarkReport two = remark_counterexample(2);
  CHECK(two.impl_fixed);
  CHECK(two.below_constant);
  CHECK(two.collapsed_low == inv(2));
  CHECK(two.collapsed_high == OmegaElement::one());
  CHECK_FALSE(two.injective);

  RemarkReport one = remark_counterexample(1);
  CHECK(one.collapsed_low == OmegaElement::one());
  CHECK(one.collapsed_high == OmegaElement::one());

  RemarkReport five = remark_counterexample(5);
  CHECK(five.collapsed_low == inv(5));
  CHECK(five.collapsed_high == OmegaElement::one());
}

TEST_CASE("omega invariants") {
  auto r = kmforge::suite_omega(2);
  CHECK_MESSAGE(r.passed(), (r.failures.empty() ? "" : r.failures.front()));
}
