#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace kmforge {

enum class Op : std::uint8_t { Var, Bot, Top, Meet, Join, Impl };

/// Immutable IPC term over (Var, 0, 1, &, |, ->). Subterms are shared, so
/// copies are cheap.
class Formula {
 public:
  Formula();  // Bot

  static Formula var(std::size_t index);
  static Formula bot();
  static Formula top();
  static Formula meet(Formula l, Formula r);
  static Formula join(Formula l, Formula r);
  static Formula impl(Formula l, Formula r);
  static Formula binary(Op op, Formula l, Formula r);
  // Sugar, expanded on construction.
  static Formula neg(Formula x) { return impl(std::move(x), bot()); }
  static Formula biimpl(const Formula& l, const Formula& r) { return meet(impl(l, r), impl(r, l)); }

  Op op() const { return node_->op; }
  std::size_t var_index() const { return node_->var; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  bool is_binary() const { return op() >= Op::Meet; }

  /// Tree size, saturating; provenance terms share subterms and can be
  /// exponentially larger as trees than as DAGs.
  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }
  /// One more than the largest variable index; 0 for closed terms.
  std::size_t arity() const { return node_->arity; }

  /// Fully parenthesised ASCII form, e.g. "((p0 -> p1) & 1)". Re-parses to
  /// the same tree.
  std::string to_string() const;
  /// Same, with variable i printed as names[i] where available.
  std::string to_string(const std::vector<std::string>& names) const;

  /// Bottom-up evaluation. `leaf(op, var_index)` handles Var/Bot/Top and
  /// `binary(op, l, r)` the connectives. Shared subterms are evaluated once.
  template <class Leaf, class Binary>
  auto fold(Leaf&& leaf, Binary&& binary) const {
    using V = decltype(leaf(Op::Bot, std::size_t{0}));
    std::unordered_map<const Node*, V> memo;
    const bool use_memo = size() > 64;
    auto rec = [&](auto& self, const Node* n) -> V {
      if (n->op < Op::Meet) return leaf(n->op, n->var);
      if (use_memo) {
        if (auto it = memo.find(n); it != memo.end()) return it->second;
      }
      V l = self(self, n->lhs.get());
      V r = self(self, n->rhs.get());
      V v = binary(n->op, l, r);
      if (use_memo) memo.emplace(n, v);
      return v;
    };
    return rec(rec, node_.get());
  }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    Op op;
    std::size_t var = 0;
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t size = 1, depth = 0, arity = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Formula plus the source names of its variables (index -> name).
struct ParsedFormula {
  Formula formula;
  std::vector<std::string> var_names;
};

/// Grammar: identifiers (p0, p1, ... or any letter-led name), 0/⊥, 1/⊤, ~x,
/// &, |, ->, <->, parentheses. Precedence ~ > & > | > -> > <->; -> is
/// right-associative, the others left-associative. When every identifier
/// has the form p<digits> the digits give the index; otherwise indices are
/// assigned by first appearance.
ParsedFormula parse_formula(const std::string& text);

inline Formula parse(const std::string& text) { return parse_formula(text).formula; }

}  // namespace kmforge
