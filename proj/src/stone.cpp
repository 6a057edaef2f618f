#include "kmforge/stone.hpp"

#include "kmforge/density.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/terms.hpp"

namespace kmforge {

namespace {

bool is_prime(const Algebra& h, const Filter& f) {
  if (f.contains(h.bot())) return false;
  for (Elem x = 0; x < h.size(); ++x)
    for (Elem y = x; y < h.size(); ++y)
      if (f.contains(h.join(x, y)) && !f.contains(x) && !f.contains(y)) return false;
  return true;
}

}  // namespace

Spectrum spectrum(const Algebra& h) {
  if (h.degenerate()) throw Degenerate("the one-element algebra has no prime filters");
  Spectrum s;
  for (Elem x = 0; x < h.size(); ++x) {
    Filter f = principal_filter(h, x);
    if (is_prime(h, f)) {
      s.primes.push_back(std::move(f));
      s.generators.push_back(x);
    }
  }
  if (s.size() > kMaxPosetPoints) throw CapExceeded(kMaxPosetPoints);
  const std::size_t k = s.size();
  s.poset.points = k;
  s.poset.leq.assign(k * k, 0);
  // ↑x ⊆ ↑y iff y <= x.
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      s.poset.leq[p * k + q] = h.leq(s.generators[q], s.generators[p]);
  return s;
}

StoneMap sigma(const Algebra& h) {
  StoneMap m{spectrum(h), {}, {}};
  m.upsets = upset_algebra(m.spec.poset);
  m.sigma.map.resize(h.size());
  for (Elem x = 0; x < h.size(); ++x) {
    std::uint64_t mask = 0;
    for (std::size_t p = 0; p < m.spec.size(); ++p)
      if (m.spec.primes[p].contains(x)) mask |= std::uint64_t{1} << p;
    m.sigma.map[x] = m.upsets.element_of(mask);
  }
  if (auto v = homomorphism_violation(h, m.upsets.algebra, m.sigma); !v.empty())
    throw ContractError("sigma is not a homomorphism: " + v);
  if (!m.sigma.injective() || !m.sigma.surjective(m.upsets.algebra.size()))
    throw ContractError("sigma is not onto the up-sets");
  return m;
}

std::uint64_t sigma_plus(const StoneMap& s, Elem a) {
  const std::uint64_t inside = s.mask(a);
  const std::size_t k = s.spec.size();
  std::uint64_t plus = inside;
  for (std::size_t p = 0; p < k; ++p) {
    if (inside >> p & 1) continue;
    bool maximal = true;
    for (std::size_t q = 0; q < k && maximal; ++q)
      maximal = q == p || (inside >> q & 1) || !s.spec.poset.le(p, q);
    if (maximal) plus |= std::uint64_t{1} << p;
  }
  if (!s.upsets.is_upset(plus)) throw ContractError("sigma(a)+ is not an up-set");
  return plus;
}

DeltaSubalgebra delta_subalgebra(const StoneMap& s, Elem a, std::size_t cap) {
  const Algebra& up = s.upsets.algebra;
  std::vector<Elem> gens(s.sigma.map);
  const Elem plus = s.upsets.element_of(sigma_plus(s, a));
  gens.push_back(plus);
  DeltaSubalgebra d;
  d.sub = generated_subalgebra(AlgebraOracle{up}, std::span<const Elem>(gens), cap,
                               [&](Elem x) { return up.name(x); });
  d.embedding.map.resize(s.sigma.map.size());
  for (Elem x = 0; x < s.sigma.map.size(); ++x) d.embedding.map[x] = d.sub.at(s.sigma(x));
  d.plus = d.sub.at(plus);
  return d;
}

Comparison compare_with_onestep(const Algebra& h, Elem a, std::size_t cap) {
  Comparison c;
  OneStepResult step = one_step(h, a, cap);
  StoneMap s = sigma(h);
  DeltaSubalgebra d = delta_subalgebra(s, a, cap);
  const Algebra& target = d.sub.algebra;
  c.enriched_size = step.algebra().size();
  c.delta_size = target.size();
  c.plus_is_sigma_delta = d.sub.elements[d.plus] == s.sigma(delta_min(h, a));

  const EnrichedAlgebra& e = step.enriched;
  std::vector<Elem> gens(1 + h.size());
  gens[0] = d.plus;
  for (Elem x = 0; x < h.size(); ++x) gens[constant_var(x)] = d.embedding(x);
  auto values = replay_steps(AlgebraOracle{target}, std::span<const DerivationStep>(e.sub.steps),
                             std::span<const Elem>(gens));

  Homomorphism g;
  g.map.resize(step.quotient.classes.size());
  c.well_defined = true;
  for (Elem k = 0; k < g.map.size() && c.well_defined; ++k) {
    const auto& members = step.quotient.classes[k];
    g.map[k] = values[members.front()];
    for (Elem x : members)
      if (values[x] != g.map[k]) {
        c.well_defined = false;
        c.detail = "class " + step.algebra().name(k) + " is split";
        break;
      }
  }
  if (!c.well_defined) return c;
  c.detail = homomorphism_violation(step.algebra(), target, g);
  c.homomorphism = c.detail.empty();
  c.injective = g.injective();
  c.surjective = g.surjective(target.size());
  return c;
}

OpenStatementReport open_statement_check(const Algebra& h, Elem a, std::size_t depth,
                                         std::size_t nvars) {
  if (nvars < 1) throw ArityMismatch("the statement needs the distinguished variable");
  OpenStatementReport r;
  r.depth = depth;
  r.nvars = nvars;
  StoneMap s = sigma(h);
  const Algebra& up = s.upsets.algebra;
  const Elem plus = s.upsets.element_of(sigma_plus(s, a));
  const Elem all = up.top();

  std::vector<Elem> candidates;  // σ(d) with σ(a)+ ⊆ σ(d)
  for (Elem x = 0; x < h.size(); ++x)
    if (up.leq(plus, s.sigma(x))) candidates.push_back(s.sigma(x));

  auto functions = term_functions(up, nvars, depth);
  r.term_functions = functions.size();
  std::vector<Elem> val(nvars);
  for (const auto& tf : functions) {
    r.formulas = tf.multiplicity > UINT64_MAX - r.formulas ? UINT64_MAX : r.formulas + tf.multiplicity;
    // Parameters p1.. range over σ(H), odometer with p1 slowest.
    std::vector<Elem> params(nvars - 1, 0);
    for (;;) {
      ++r.instances;
      for (std::size_t i = 1; i < nvars; ++i) val[i] = s.sigma(params[i - 1]);
      val[0] = plus;
      if (tf.table[valuation_index(up.size(), val)] != all) {
        ++r.triggered;
        bool found = false;
        for (Elem cand : candidates) {
          val[0] = cand;
          if (tf.table[valuation_index(up.size(), val)] != all) {
            found = true;
            break;
          }
        }
        if (!found) {
          ++r.counterexample_count;
          if (r.counterexamples.size() < 8) {
            std::string w = tf.representative.to_string() + " with";
            for (std::size_t i = 1; i < nvars; ++i)
              w += " p" + std::to_string(i) + "=" + h.name(params[i - 1]);
            r.counterexamples.push_back(w);
          }
        }
      }
      std::size_t i = params.size();
      while (i > 0 && ++params[i - 1] == h.size()) params[--i] = 0;
      if (i == 0) break;
    }
  }
  return r;
}

}  // namespace kmforge
