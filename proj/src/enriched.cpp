#include "kmforge/enriched.hpp"

#include <algorithm>

#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/terms.hpp"

namespace kmforge {

std::size_t EnrichedAlgebra::slot(Elem d) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), d);
  if (it == domain.end() || *it != d) throw ContractError("point outside the index set");
  return static_cast<std::size_t>(it - domain.begin());
}

namespace {

EnrichedAlgebra enrich(const Algebra& h, std::optional<Elem> anchor, std::vector<Elem> domain,
                       std::size_t cap) {
  PowerOracle ops{h, domain.size()};
  std::vector<std::vector<Elem>> gens;
  gens.push_back(domain);  // the inclusion D -> H
  for (Elem c = 0; c < h.size(); ++c) gens.push_back(ops.constant(c));

  EnrichedAlgebra e{h, anchor, std::move(domain), {}, 0, {}};
  e.sub = generated_subalgebra(ops, std::span<const std::vector<Elem>>(gens), cap,
                               [&](const std::vector<Elem>& v) { return map_name(h, v); });
  e.generator = e.sub.at(gens[0]);
  e.diagonal.resize(h.size());
  for (Elem c = 0; c < h.size(); ++c) e.diagonal[c] = e.sub.at(gens[constant_var(c)]);
  return e;
}

}  // namespace

EnrichedAlgebra build_iota_algebra(const Algebra& h, Elem a, std::size_t cap) {
  return enrich(h, a, dense_over(h, a).elements(), cap);
}

EnrichedAlgebra free_one_generator(const Algebra& h, std::size_t cap) {
  std::vector<Elem> all(h.size());
  for (Elem x = 0; x < h.size(); ++x) all[x] = x;
  return enrich(h, std::nullopt, std::move(all), cap);
}

std::vector<bool> dense_in_iota(const EnrichedAlgebra& e) {
  const Elem a = e.anchor.value_or(e.base.top());
  std::vector<bool> out(e.size());
  for (Elem x = 0; x < e.size(); ++x)
    out[x] = std::all_of(e.map(x).begin(), e.map(x).end(),
                         [&](Elem v) { return is_dense_over(e.base, a, v); });
  return out;
}

Filter build_fa(const EnrichedAlgebra& e) {
  const Algebra& alg = e.algebra();
  const Elem iota = e.generator;
  auto dense = dense_in_iota(e);

  std::vector<Elem> full;
  std::vector<bool> in_full(e.size());
  for (Elem x = 0; x < e.size(); ++x)
    if (dense[x]) {
      Elem g = alg.impl(iota, x);
      if (!in_full[g]) full.push_back(g);
      in_full[g] = true;
    }
  for (Elem g : full)
    for (Elem k : full)
      if (!in_full[alg.meet(g, k)])
        throw GeneratorMismatch("generators iota -> delta are not closed under meet");

  std::vector<Elem> constant;
  for (Elem d : e.domain) constant.push_back(alg.impl(iota, e.diagonal[d]));

  Filter from_full = filter_generated(alg, full);
  Filter from_constants = filter_generated(alg, constant);
  if (!(from_full == from_constants))
    throw GeneratorMismatch("filter from constant generators differs from the full one");
  return from_constants;
}

std::string provenance_violation(const EnrichedAlgebra& e) {
  std::vector<Elem> val(1 + e.base.size());
  for (Elem c = 0; c < e.base.size(); ++c) val[constant_var(c)] = c;
  for (std::size_t k = 0; k < e.domain.size(); ++k) {
    val[0] = e.domain[k];
    for (Elem x = 0; x < e.size(); ++x)
      if (eval(e.base, e.sub.provenance[x], val) != e.map(x)[k])
        return "element " + e.algebra().name(x) + " disagrees with its provenance at point " +
               e.base.name(e.domain[k]);
  }
  return {};
}

Homomorphism evaluation_at(const EnrichedAlgebra& e, Elem point) {
  std::size_t k = e.slot(point);
  Homomorphism f;
  f.map.resize(e.size());
  for (Elem x = 0; x < e.size(); ++x) f.map[x] = e.map(x)[k];
  return f;
}

}  // namespace kmforge
