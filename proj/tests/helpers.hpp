#pragma once

#include <doctest.h>

#include <string>

#include "kmforge/algebra.hpp"
#include "kmforge/poset.hpp"

namespace testing {

inline kmforge::Elem el(const kmforge::Algebra& h, const std::string& name) {
  auto e = h.find(name);
  REQUIRE_MESSAGE(e.has_value(), "no element " << name);
  return *e;
}

inline kmforge::Algebra boolean4() { return kmforge::from_poset(kmforge::FinitePoset::antichain(2)); }

}  // namespace testing
