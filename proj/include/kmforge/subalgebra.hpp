#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmforge/algebra.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/formula.hpp"

namespace kmforge {

inline constexpr std::size_t kDefaultClosureCap = 4096;

/// Operation oracle over the elements of a table algebra.
struct AlgebraOracle {
  using value_type = Elem;
  using hasher = std::hash<Elem>;
  const Algebra& h;

  Elem meet(Elem x, Elem y) const { return h.meet(x, y); }
  Elem join(Elem x, Elem y) const { return h.join(x, y); }
  Elem impl(Elem x, Elem y) const { return h.impl(x, y); }
  Elem bot() const { return h.bot(); }
  Elem top() const { return h.top(); }
};

struct MapHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t x = 1469598103934665603ull;
    for (Elem e : v) {
      x ^= e;
      x *= 1099511628211ull;
    }
    return static_cast<std::size_t>(x);
  }
};

/// Pointwise operations on maps D -> H, D given by its size. The power
/// algebra itself is never materialised.
struct PowerOracle {
  using value_type = std::vector<Elem>;
  using hasher = MapHash;
  const Algebra& h;
  std::size_t arity;

  value_type meet(const value_type& x, const value_type& y) const { return zip(x, y, &Algebra::meet); }
  value_type join(const value_type& x, const value_type& y) const { return zip(x, y, &Algebra::join); }
  value_type impl(const value_type& x, const value_type& y) const { return zip(x, y, &Algebra::impl); }
  value_type bot() const { return value_type(arity, h.bot()); }
  value_type top() const { return value_type(arity, h.top()); }
  value_type constant(Elem c) const { return value_type(arity, c); }
  bool leq(const value_type& x, const value_type& y) const {
    for (std::size_t i = 0; i < arity; ++i)
      if (!h.leq(x[i], y[i])) return false;
    return true;
  }

 private:
  value_type zip(const value_type& x, const value_type& y, Elem (Algebra::*op)(Elem, Elem) const) const {
    value_type out(arity);
    for (std::size_t i = 0; i < arity; ++i) out[i] = (h.*op)(x[i], y[i]);
    return out;
  }
};

/// How an element of a generated subalgebra was first produced.
struct DerivationStep {
  Op op = Op::Var;
  std::size_t lhs = 0;  // generator index for Op::Var, element index otherwise
  std::size_t rhs = 0;
};

template <class V, class Hash = std::hash<V>>
struct Subalgebra {
  std::vector<V> elements;
  std::vector<Formula> provenance;  // over p_i := generator i
  std::vector<DerivationStep> steps;
  Algebra algebra;                  // algebra element i is elements[i]
  std::unordered_map<V, Elem, Hash> index;

  std::optional<Elem> find(const V& v) const {
    auto it = index.find(v);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  Elem at(const V& v) const {
    auto e = find(v);
    if (!e) throw ContractError("value is not in the generated subalgebra");
    return *e;
  }
};

/// Worklist closure of `gens` together with bot and top under meet, join and
/// impl. Every element records the first formula (over the generators) that
/// produced it. Throws CapExceeded once more than `cap` elements appear.
template <class Oracle>
Subalgebra<typename Oracle::value_type, typename Oracle::hasher> generated_subalgebra(
    const Oracle& ops, std::span<const typename Oracle::value_type> gens, std::size_t cap,
    const std::function<std::string(const typename Oracle::value_type&)>& namer) {
  using V = typename Oracle::value_type;
  Subalgebra<V, typename Oracle::hasher> s;
  if (gens.size() > cap) throw CapExceeded(cap);

  auto insert = [&](V v, Formula f, DerivationStep step) -> Elem {
    auto [it, inserted] = s.index.try_emplace(std::move(v), static_cast<Elem>(s.elements.size()));
    if (inserted) {
      if (s.elements.size() >= cap) throw CapExceeded(cap);
      s.elements.push_back(it->first);
      s.provenance.push_back(std::move(f));
      s.steps.push_back(step);
    }
    return it->second;
  };
  for (std::size_t i = 0; i < gens.size(); ++i) insert(gens[i], Formula::var(i), {Op::Var, i, 0});
  insert(ops.bot(), Formula::bot(), {Op::Bot, 0, 0});
  insert(ops.top(), Formula::top(), {Op::Top, 0, 0});

  // Row i holds the results for pairs (i, j), j <= i.
  std::vector<std::vector<Elem>> meet_r, join_r, impl_ij, impl_ji;
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    meet_r.emplace_back(i + 1);
    join_r.emplace_back(i + 1);
    impl_ij.emplace_back(i + 1);
    impl_ji.emplace_back(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
      const V x = s.elements[i];
      const V y = s.elements[j];
      const Formula fx = s.provenance[i], fy = s.provenance[j];
      meet_r[i][j] = insert(ops.meet(x, y), Formula::meet(fx, fy), {Op::Meet, i, j});
      join_r[i][j] = insert(ops.join(x, y), Formula::join(fx, fy), {Op::Join, i, j});
      impl_ij[i][j] = insert(ops.impl(x, y), Formula::impl(fx, fy), {Op::Impl, i, j});
      impl_ji[i][j] = insert(ops.impl(y, x), Formula::impl(fy, fx), {Op::Impl, j, i});
    }
  }

  const std::size_t n = s.elements.size();
  std::vector<Elem> meet(n * n), join(n * n), impl(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      meet[i * n + j] = meet[j * n + i] = meet_r[i][j];
      join[i * n + j] = join[j * n + i] = join_r[i][j];
      impl[i * n + j] = impl_ij[i][j];
      impl[j * n + i] = impl_ji[i][j];
    }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = namer(s.elements[i]);
  s.algebra = Algebra::from_trusted(std::move(names), std::move(meet), std::move(join),
                                    std::move(impl), s.at(ops.bot()), s.at(ops.top()));
  return s;
}

/// Replays recorded derivation steps over another carrier with p_i := gens[i].
/// Same result as evaluating each provenance formula, in linear time.
template <class Ops, class V = typename Ops::value_type>
std::vector<V> replay_steps(const Ops& ops, std::span<const DerivationStep> steps,
                            std::span<const V> gens) {
  std::vector<V> out;
  out.reserve(steps.size());
  for (const auto& s : steps) {
    switch (s.op) {
      case Op::Var:
        if (s.lhs >= gens.size()) throw ContractError("replay: missing generator value");
        out.push_back(gens[s.lhs]);
        break;
      case Op::Bot: out.push_back(ops.bot()); break;
      case Op::Top: out.push_back(ops.top()); break;
      case Op::Meet: out.push_back(ops.meet(out[s.lhs], out[s.rhs])); break;
      case Op::Join: out.push_back(ops.join(out[s.lhs], out[s.rhs])); break;
      case Op::Impl: out.push_back(ops.impl(out[s.lhs], out[s.rhs])); break;
    }
  }
  return out;
}

/// Name of a map D -> H as "(h_1,...,h_k)".
inline std::string map_name(const Algebra& h, const std::vector<Elem>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += h.name(v[i]);
  }
  return s + ")";
}

}  // namespace kmforge
