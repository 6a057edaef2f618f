#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmforge/algebra.hpp"
#include "kmforge/formula.hpp"

namespace kmforge {

[[noreturn]] void throw_missing_variable(std::size_t var);

/// Evaluates `f` in `h` with p_i := valuation[i]. Throws MissingVariable.
Elem eval(const Algebra& h, const Formula& f, std::span<const Elem> valuation);

/// Evaluation over any carrier with meet/join/impl/bot/top members; used for
/// power algebras and the symbolic chain.
template <class Ops, class V = typename Ops::value_type>
V eval_with(const Ops& ops, const Formula& f, std::span<const V> valuation) {
  return f.fold(
      [&](Op op, std::size_t var) -> V {
        switch (op) {
          case Op::Bot:
            return ops.bot();
          case Op::Top:
            return ops.top();
          default:
            if (var >= valuation.size()) throw_missing_variable(var);
            return valuation[var];
        }
      },
      [&](Op op, const V& l, const V& r) -> V {
        switch (op) {
          case Op::Meet:
            return ops.meet(l, r);
          case Op::Join:
            return ops.join(l, r);
          default:
            return ops.impl(l, r);
        }
      });
}

/// Streams every formula over `nvars` variables and the constants with
/// depth <= max_depth, once each, ordered by (depth, size, connective,
/// left-subterm rank, right-subterm rank). Depth 0 is p0..p{n-1}, 0, 1.
/// Return false from `fn` to stop early.
void for_each_term(std::size_t nvars, std::size_t max_depth,
                   const std::function<bool(const Formula&)>& fn);

std::vector<Formula> enumerate_terms(std::size_t nvars, std::size_t max_depth);

/// Number of formulas for_each_term would produce (saturating).
std::uint64_t count_terms(std::size_t nvars, std::size_t max_depth);

/// A term function h^nvars -> h realised by some enumerated formula. Tables
/// are indexed with p0 as the most significant digit.
struct TermFunction {
  std::vector<Elem> table;
  Formula representative;
  std::uint64_t multiplicity = 0;  // formulas within the bound realising it (saturating)
};

/// All distinct term functions of formulas within (nvars, max_depth). Checking
/// a property of term functions on this list is equivalent to checking it on
/// every enumerated formula.
std::vector<TermFunction> term_functions(const Algebra& h, std::size_t nvars, std::size_t max_depth);

/// Index of a valuation into a term-function table.
std::size_t valuation_index(std::size_t n, std::span<const Elem> valuation);

struct IdentityResult {
  bool holds = true;
  std::vector<Elem> counterexample;  // first failing valuation, p0 slowest
};

/// Exhaustive check of lhs = rhs over all valuations of max(arities)
/// variables. With `arity` given, formulas needing more variables raise
/// ArityMismatch.
IdentityResult holds_identity(const Algebra& h, const Formula& lhs, const Formula& rhs,
                              std::optional<std::size_t> arity = std::nullopt);

enum class Schema { Maintool, Eqlemma, EqD, Congruence };

std::optional<Schema> schema_from_string(const std::string& s);
std::string to_string(Schema s);

struct SchemaBounds {
  std::size_t depth = 2;
  std::size_t nvars = 2;
};

struct SchemaReport {
  std::string schema;
  std::string algebra;
  SchemaBounds bound;
  std::uint64_t instances = 0;
  std::uint64_t formulas = 0;        // formulas covered (schemas over phi only)
  std::uint64_t term_functions = 0;  // distinct term functions checked
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

SchemaReport check_schema(Schema schema, const Algebra& h, SchemaBounds bounds,
                          const std::string& algebra_label = "");

/// Same as above, reusing a term-function list computed for (h, bounds).
SchemaReport check_schema(Schema schema, const Algebra& h, SchemaBounds bounds,
                          std::span<const TermFunction> functions,
                          const std::string& algebra_label = "");

}  // namespace kmforge
