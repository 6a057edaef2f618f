#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace kmforge {

/// Dense element index into an algebra's operation tables.
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

/// Raw, untrusted operation tables. `leq` is row-major n*n; the binary
/// operations are row-major n*n as well, `kNoElem` marking an undefined entry.
struct CandidateTables {
  std::size_t n = 0;
  std::vector<std::string> names;
  std::vector<std::uint8_t> leq;
  std::vector<Elem> meet, join, impl;
  Elem bot = kNoElem, top = kNoElem;
};

/// Fills meet, join, impl, bot and top from the order table alone. Entries
/// that do not exist (no glb, no lub) stay `kNoElem`; impl(x,y) is the join of
/// {z : z /\ x <= y}, which is the residual exactly when the lattice is
/// distributive.
void complete_from_order(CandidateTables& t);

struct ValidationFailure {
  std::string group;  // order | bounds | lattice | distributivity | residuation
  std::string message;
  std::vector<Elem> evidence;  // first failing tuple
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool ok() const { return failures.empty(); }
  bool failed(const std::string& group) const;
  std::string to_string(const CandidateTables& t) const;
};

/// Checks every axiom group and records the first failing tuple of each.
ValidationReport validate(const CandidateTables& t);

/// A finite Heyting algebra held as operation tables. Immutable once built.
class Algebra {
 public:
  Algebra() = default;

  /// Validates the tables; throws ValidationError carrying the report.
  static Algebra from_tables(const CandidateTables& t);

  /// Builds from an order table, recomputing every operation, then validates.
  static Algebra from_order(std::vector<std::string> names, std::vector<std::uint8_t> leq);

  /// Skips the cubic validation. Only for tables produced by constructions
  /// that preserve the Heyting axioms (subalgebras of powers, filter quotients).
  static Algebra from_trusted(std::vector<std::string> names, std::vector<Elem> meet,
                              std::vector<Elem> join, std::vector<Elem> impl, Elem bot, Elem top);

  std::size_t size() const { return n_; }
  Elem bot() const { return bot_; }
  Elem top() const { return top_; }
  bool degenerate() const { return n_ == 1; }

  Elem meet(Elem x, Elem y) const { return meet_[x * n_ + y]; }
  Elem join(Elem x, Elem y) const { return join_[x * n_ + y]; }
  Elem impl(Elem x, Elem y) const { return impl_[x * n_ + y]; }
  Elem neg(Elem x) const { return impl(x, bot_); }
  Elem biimpl(Elem x, Elem y) const { return meet(impl(x, y), impl(y, x)); }
  bool leq(Elem x, Elem y) const { return meet(x, y) == x; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }

  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(const std::string& name) const;
  /// Looks up by name, falling back to a decimal index.
  Elem parse_element(const std::string& text) const;

  CandidateTables tables() const;
  /// Pairs (x,y) with x covered by y.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Longest chain length from bot to x.
  std::vector<std::size_t> heights() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.n_ == b.n_ && a.meet_ == b.meet_ && a.join_ == b.join_ && a.impl_ == b.impl_ &&
           a.bot_ == b.bot_ && a.top_ == b.top_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Elem> meet_, join_, impl_;
  Elem bot_ = 0, top_ = 0;
};

/// The n-element chain 0 < ... < 1. Names: "0","1" for n = 2, "0","m","1" for
/// n = 3, otherwise "0","c1",...,"c{n-2}","1".
Algebra chain(std::size_t n);

/// The one-element algebra (0 = 1).
Algebra trivial_algebra();

}  // namespace kmforge
