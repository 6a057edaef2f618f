#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmforge/algebra.hpp"

namespace kmforge {

/// A filter of a finite algebra: member set plus its minimal elements.
/// In a finite algebra the basis of a genuine filter is a single element.
struct Filter {
  std::vector<bool> members;
  std::vector<Elem> basis;

  bool contains(Elem x) const { return members[x]; }
  std::size_t size() const;
  std::vector<Elem> elements() const;
  std::optional<Elem> least() const {
    return basis.size() == 1 ? std::optional<Elem>(basis.front()) : std::nullopt;
  }
  bool operator==(const Filter& o) const { return members == o.members; }

  /// Wraps a member set, computing minimal elements. Does not check closure.
  static Filter from_members(const Algebra& h, std::vector<bool> members);
};

/// Empty string when `f` contains top, is up-closed and meet-closed;
/// otherwise a description of the first violation.
std::string filter_violation(const Algebra& h, const Filter& f);

/// Smallest filter containing `gens`.
Filter filter_generated(const Algebra& h, std::span<const Elem> gens);

/// Principal filter of x.
Filter principal_filter(const Algebra& h, Elem x);

struct Quotient {
  Algebra algebra;
  std::vector<Elem> projection;             // source element -> class
  std::vector<std::vector<Elem>> classes;   // class -> members, ascending
};

/// H/F under x ~ y iff (x <-> y) in F. Class order follows the least member.
Quotient quotient_by_filter(const Algebra& h, const Filter& f);

}  // namespace kmforge
