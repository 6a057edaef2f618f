#include "kmforge/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "kmforge/errors.hpp"

namespace kmforge {

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  return a > kMax - b ? kMax : a + b;
}

}  // namespace

Formula::Formula() : Formula(bot()) {}

Formula Formula::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->op = Op::Var;
  n->var = index;
  n->arity = index + 1;
  return Formula(std::move(n));
}

Formula Formula::bot() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::Bot;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::top() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->op = Op::Top;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::binary(Op op, Formula l, Formula r) {
  if (op < Op::Meet) throw ContractError("binary() needs a connective");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = sat_add(sat_add(l.size(), r.size()), 1);
  n->depth = std::max(l.depth(), r.depth()) + 1;
  n->arity = std::max(l.arity(), r.arity());
  n->lhs = std::move(l.node_);
  n->rhs = std::move(r.node_);
  return Formula(std::move(n));
}

Formula Formula::meet(Formula l, Formula r) { return binary(Op::Meet, std::move(l), std::move(r)); }
Formula Formula::join(Formula l, Formula r) { return binary(Op::Join, std::move(l), std::move(r)); }
Formula Formula::impl(Formula l, Formula r) { return binary(Op::Impl, std::move(l), std::move(r)); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case Op::Var:
      return a.var_index() == b.var_index();
    case Op::Bot:
    case Op::Top:
      return true;
    default:
      return a.size() == b.size() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::string Formula::to_string() const { return to_string({}); }

std::string Formula::to_string(const std::vector<std::string>& names) const {
  std::string out;
  auto rec = [&](auto& self, const Formula& f) -> void {
    switch (f.op()) {
      case Op::Var:
        if (f.var_index() < names.size())
          out += names[f.var_index()];
        else
          out += "p" + std::to_string(f.var_index());
        return;
      case Op::Bot:
        out += "0";
        return;
      case Op::Top:
        out += "1";
        return;
      default:
        break;
    }
    out += "(";
    self(self, f.lhs());
    out += f.op() == Op::Meet ? " & " : f.op() == Op::Join ? " | " : " -> ";
    self(self, f.rhs());
    out += ")";
  };
  rec(rec, *this);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ParsedFormula run() {
    Formula f = biimpl();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
    ParsedFormula out;
    out.formula = assign_indices(f);
    out.var_names = names_;
    return out;
  }

 private:
  // Variables are parsed as placeholder indices into raw_names_ and renumbered
  // once all identifiers are known.
  Formula assign_indices(const Formula& f) {
    bool numbered = !raw_names_.empty() &&
                    std::all_of(raw_names_.begin(), raw_names_.end(), [](const std::string& n) {
                      return n.size() > 1 && n[0] == 'p' &&
                             std::all_of(n.begin() + 1, n.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
                    });
    std::vector<std::size_t> index(raw_names_.size());
    if (numbered) {
      std::size_t arity = 0;
      for (std::size_t i = 0; i < raw_names_.size(); ++i) {
        index[i] = std::stoul(raw_names_[i].substr(1));
        arity = std::max(arity, index[i] + 1);
      }
      names_.assign(arity, "");
      for (std::size_t i = 0; i < arity; ++i) names_[i] = "p" + std::to_string(i);
    } else {
      for (std::size_t i = 0; i < raw_names_.size(); ++i) index[i] = i;
      names_ = raw_names_;
    }
    auto rec = [&](auto& self, const Formula& g) -> Formula {
      if (g.op() == Op::Var) return Formula::var(index[g.var_index()]);
      if (!g.is_binary()) return g;
      return Formula::binary(g.op(), self(self, g.lhs()), self(self, g.rhs()));
    };
    return rec(rec, f);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula biimpl() {
    Formula l = impl();
    while (eat("<->")) l = Formula::biimpl(l, impl());
    return l;
  }

  Formula impl() {
    Formula l = disj();
    skip_ws();
    if (s_.compare(pos_, 3, "<->") != 0 && eat("->")) return Formula::impl(l, impl());
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (eat("|")) l = Formula::join(l, conj());
    return l;
  }

  Formula conj() {
    Formula l = unary();
    while (eat("&")) l = Formula::meet(l, unary());
    return l;
  }

  Formula unary() {
    if (eat("~")) return Formula::neg(unary());
    return atom();
  }

  Formula atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    std::size_t start = pos_;
    if (eat("(")) {
      Formula f = biimpl();
      if (!eat(")")) throw ParseError(pos_, "expected ')' to close '(' at " + std::to_string(start));
      return f;
    }
    if (eat("0") || eat("⊥")) return Formula::bot();
    if (eat("1") || eat("⊤")) return Formula::top();
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (std::isalpha(c) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(raw_names_.begin(), raw_names_.end(), name);
      std::size_t idx = static_cast<std::size_t>(it - raw_names_.begin());
      if (it == raw_names_.end()) raw_names_.push_back(name);
      return Formula::var(idx);
    }
    throw ParseError(pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::string> raw_names_;
  std::vector<std::string> names_;
};

}  // namespace

ParsedFormula parse_formula(const std::string& text) { return Parser(text).run(); }

}  // namespace kmforge
