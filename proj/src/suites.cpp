#include "kmforge/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <unordered_map>

#include "kmforge/completion.hpp"
#include "kmforge/density.hpp"
#include "kmforge/enriched.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/extend.hpp"
#include "kmforge/filter.hpp"
#include "kmforge/omega_verify.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/poset.hpp"
#include "kmforge/stone.hpp"
#include "kmforge/terms.hpp"
#include "kmforge/witness.hpp"

namespace kmforge {

void SuiteResult::check(bool ok, const std::string& what) {
  ++instances;
  if (ok) return;
  if (failures.size() < 10) failures.push_back(what);
  ++failure_count;
}

void SuiteResult::skip(const std::string& what) {
  if (capped.size() < 10) capped.push_back(what);
  ++capped_count;
}

namespace {

// Starts the clock on construction; stamps the elapsed time on finish().
class Timed {
 public:
  Timed(SuiteResult& r, std::string name, std::string bounds)
      : r_(r), start_(std::chrono::steady_clock::now()) {
    r_.name = std::move(name);
    r_.bounds = std::move(bounds);
  }
  SuiteResult finish() {
    r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return r_;
  }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::string catalog_bounds(const Catalog& cat) {
  std::size_t largest = 0;
  for (const auto& e : cat) largest = std::max(largest, e.algebra.size());
  return std::to_string(cat.size()) + " algebras, largest " + std::to_string(largest);
}

std::string at(const CatalogEntry& e, const std::string& what) { return e.label + ": " + what; }

std::string at(const CatalogEntry& e, Elem a, const std::string& what) {
  return e.label + " a=" + e.algebra.name(a) + ": " + what;
}

// Runs `body`, turning library exceptions into suite failures. Instances
// beyond the closure cap are recorded as skipped.
template <class F>
void guarded(SuiteResult& r, const std::string& where, F&& body) {
  try {
    body();
  } catch (const CapExceeded& ex) {
    r.skip(where + ": " + ex.what());
  } catch (const std::exception& ex) {
    r.check(false, where + ": " + ex.what());
  }
}

// Term functions of 2 variables evaluated in two algebras at once: the
// first n*n cells are the table on `a`, the rest the table on `b`. Same as
// the term functions of a x b restricted to what the variety check reads.
struct JointFunction {
  std::vector<Elem> table;
  Formula representative;
};

std::vector<JointFunction> joint_functions(const Algebra& a, const Algebra& b, std::size_t depth) {
  const std::size_t na = a.size() * a.size(), nb = b.size() * b.size();
  auto atom = [&](auto on_a, auto on_b) {
    std::vector<Elem> t(na + nb);
    for (std::size_t i = 0; i < na; ++i) t[i] = on_a(static_cast<Elem>(i / a.size()), static_cast<Elem>(i % a.size()));
    for (std::size_t i = 0; i < nb; ++i) t[na + i] = on_b(static_cast<Elem>(i / b.size()), static_cast<Elem>(i % b.size()));
    return t;
  };
  std::vector<JointFunction> level;
  std::unordered_map<std::vector<Elem>, std::size_t, MapHash> seen;
  auto add = [&](std::vector<JointFunction>& into, std::vector<Elem> t, Formula f) {
    if (seen.try_emplace(t, seen.size()).second) into.push_back({std::move(t), std::move(f)});
  };
  add(level, atom([](Elem x, Elem) { return x; }, [](Elem x, Elem) { return x; }), Formula::var(0));
  add(level, atom([](Elem, Elem y) { return y; }, [](Elem, Elem y) { return y; }), Formula::var(1));
  add(level, atom([&](Elem, Elem) { return a.bot(); }, [&](Elem, Elem) { return b.bot(); }), Formula::bot());
  add(level, atom([&](Elem, Elem) { return a.top(); }, [&](Elem, Elem) { return b.top(); }), Formula::top());
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<JointFunction> next = level;
    for (const auto& x : level)
      for (const auto& y : level)
        for (Op op : {Op::Meet, Op::Join, Op::Impl}) {
          std::vector<Elem> t(na + nb);
          auto apply = [op](const Algebra& h, Elem u, Elem v) {
            return op == Op::Meet ? h.meet(u, v) : op == Op::Join ? h.join(u, v) : h.impl(u, v);
          };
          for (std::size_t i = 0; i < na; ++i) t[i] = apply(a, x.table[i], y.table[i]);
          for (std::size_t i = na; i < na + nb; ++i) t[i] = apply(b, x.table[i], y.table[i]);
          if (!seen.count(t)) add(next, std::move(t), Formula::binary(op, x.representative, y.representative));
        }
    level = std::move(next);
  }
  return level;
}

}  // namespace

SuiteResult suite_axioms(const Catalog& cat, std::size_t depth) {
  SuiteResult r;
  Timed t(r, "axioms", catalog_bounds(cat) + "; phi over 2 variables, depth <= " + std::to_string(depth));
  const SchemaBounds bounds{depth, 2};
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    auto report = validate(h.tables());
    r.check(report.ok(), at(e, report.to_string(h.tables())));
    auto functions = term_functions(h, bounds.nvars, bounds.depth);
    for (Schema s : {Schema::Eqlemma, Schema::EqD, Schema::Maintool, Schema::Congruence}) {
      auto rep = check_schema(s, h, bounds, functions, e.label);
      r.check(rep.passed(), at(e, to_string(s) + ": " +
                                      (rep.violations.empty() ? "" : rep.violations.front())));
      r.instances += rep.instances;
    }
  }
  return t.finish();
}

SuiteResult suite_structures(const Catalog& cat) {
  SuiteResult r;
  Timed t(r, "structures", catalog_bounds(cat));
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem x = 0; x < h.size(); ++x)
      for (Elem y = x; y < h.size(); ++y) {
        Elem gens[] = {x, y};
        Filter f = filter_generated(h, gens);
        auto v = filter_violation(h, f);
        r.check(v.empty(), at(e, "generated filter: " + v));
        r.check(f.least() == h.meet(x, y), at(e, "generated filter has the wrong least element"));
      }
    Quotient q = quotient_by_filter(h, principal_filter(h, h.top()));
    r.check(is_isomorphic(q.algebra, h).has_value(), at(e, "H/{top} is not isomorphic to H"));

    AlgebraOracle ops{h};
    for (Elem x = 0; x < h.size(); ++x) {
      Elem gens[] = {x};
      auto sub = generated_subalgebra(ops, std::span<const Elem>(gens), kDefaultClosureCap,
                                      [&](Elem v) { return h.name(v); });
      bool closed = true;
      for (Elem i = 0; i < sub.elements.size(); ++i)
        for (Elem j = 0; j < sub.elements.size(); ++j) {
          Elem u = sub.elements[i], w = sub.elements[j];
          closed = closed && sub.find(h.meet(u, w)) == sub.algebra.meet(i, j) &&
                   sub.find(h.join(u, w)) == sub.algebra.join(i, j) &&
                   sub.find(h.impl(u, w)) == sub.algebra.impl(i, j);
        }
      r.check(closed, at(e, "subalgebra generated by " + h.name(x) + " is not closed"));
    }
  }
  return t.finish();
}

SuiteResult suite_terms(const Catalog& cat, std::size_t depth) {
  SuiteResult r;
  const std::size_t d = std::min<std::size_t>(depth, 2);
  Timed t(r, "terms", catalog_bounds(cat) + "; formulas over 2 variables, depth <= " +
                          std::to_string(d) + "; monotonicity on algebras of size <= 8");
  auto formulas = enumerate_terms(2, d);
  for (const auto& f : formulas) {
    bool same = false;
    try {
      same = parse(f.to_string()) == f;
    } catch (const InputError&) {
    }
    r.check(same, "print/parse round trip fails for " + f.to_string());
  }
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (const auto& f : enumerate_terms(2, std::min<std::size_t>(d, 1)))
      r.check(holds_identity(h, f, f).holds, at(e, "f = f fails for " + f.to_string()));
    if (h.size() > 8 || d == 0) continue;
    // Raising a subterm's value moves the result in the expected direction.
    auto parts = term_functions(h, 2, d - 1);
    const std::size_t cells = h.size() * h.size();
    bool ok = true;
    for (const auto& l : parts)
      for (const auto& rt : parts)
        for (std::size_t v = 0; v < cells && ok; ++v) {
          Elem x = l.table[v], y = rt.table[v];
          for (Elem up = 0; up < h.size() && ok; ++up) {
            if (h.leq(x, up)) {
              ok = h.leq(h.meet(x, y), h.meet(up, y)) && h.leq(h.join(x, y), h.join(up, y)) &&
                   h.leq(h.impl(up, y), h.impl(x, y));
            }
            if (ok && h.leq(y, up)) ok = h.leq(h.impl(x, y), h.impl(x, up));
          }
        }
    r.check(ok, at(e, "eval is not monotone"));
  }
  return t.finish();
}

SuiteResult suite_dense_characterizations(const Catalog& cat) {
  SuiteResult r;
  Timed t(r, "dense-characterizations", catalog_bounds(cat) + "; all (H, a, d)");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      for (Elem d = 0; d < h.size(); ++d) {
        auto c = dense_characterizations(h, a, d);
        bool witness_ok = !c.of_join_form ||
                          (c.witness && h.join(*c.witness, h.impl(*c.witness, a)) == d);
        r.check(c.agree() && witness_ok,
                at(e, a, "characterizations disagree at d=" + h.name(d)));
      }
  }
  return t.finish();
}

SuiteResult suite_km_axioms(const Catalog& cat) {
  SuiteResult r;
  Timed t(r, "km-axioms", catalog_bounds(cat));
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a) {
      Filter f = dense_over(h, a);
      r.check(filter_violation(h, f).empty(), at(e, a, "dense elements do not form a filter"));
      r.check(f.contains(h.top()) && f.contains(a) == (a == h.top()),
              at(e, a, "top/anchor membership in the dense filter"));
    }
    guarded(r, e.label, [&] {
      KMAlgebra k = km_from_heyting(h);
      r.check(true, "");
      KMAlgebra back = km_from_table(h, k.delta);
      r.check(back.delta == k.delta, at(e, "user table round trip"));
      // Raising Δa above the least dense element must break an identity.
      for (Elem a = 0; a < h.size(); ++a) {
        for (Elem d = 0; d < h.size(); ++d) {
          if (d == k.delta[a] || !is_dense_over(h, a, d)) continue;
          auto raised = k.delta;
          raised[a] = d;
          r.check(!km_axiom_violation(h, raised).empty(),
                  at(e, a, "non-least dense table accepted with " + h.name(d)));
        }
      }
    });
  }
  return t.finish();
}

SuiteResult suite_delta_identity(const Catalog& cat) {
  SuiteResult r;
  Timed t(r, "delta-identity", catalog_bounds(cat) + "; all (H, a, a')");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a) {
      Elem least = delta_min(h, a);
      for (Elem ap = 0; ap < h.size(); ++ap)
        r.check(check_delta_identity(h, a, ap) == (ap == least),
                at(e, a, "identity and least dense element disagree at a'=" + h.name(ap)));
    }
  }
  return t.finish();
}

SuiteResult suite_homomorphisms(const Catalog& cat, std::size_t max_size) {
  SuiteResult r;
  Timed t(r, "homomorphisms",
          "algebras of size <= " + std::to_string(max_size) + ", every homomorphism");
  std::vector<const CatalogEntry*> small;
  for (const auto& e : cat)
    if (e.algebra.size() <= max_size) small.push_back(&e);
  for (const auto* src : small)
    for (const auto* dst : small) {
      const Algebra& a = src->algebra;
      const Algebra& b = dst->algebra;
      const std::string where = src->label + " -> " + dst->label;
      for_each_homomorphism(a, b, [&](const Homomorphism& f) {
        if (f.surjective(b.size()))
          for (Elem x = 0; x < a.size(); ++x)
            r.check(push_filter(a, b, f, principal_filter(a, x)).least() == f(x),
                    where + ": pushed filter loses its least element " + a.name(x));
        for (Elem x = 0; x < a.size(); ++x)
          if (delta_transfer_hypothesis(a, b, f, x))
            r.check(f(delta_min(a, x)) == delta_min(b, f(x)),
                    where + ": Delta does not commute at " + a.name(x));
      });
    }
  return t.finish();
}

SuiteResult suite_one_step(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "one-step", catalog_bounds(cat) + "; every anchor");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      guarded(r, at(e, a, "one_step"), [&] {
        OneStepResult s = one_step(h, a, cap);
        std::pair<Elem, Elem> pin[] = {{s.embedding(a), a}};
        auto iso = find_isomorphism(s.algebra(), h, pin);
        r.check(iso.has_value(), at(e, a, "quotient is not isomorphic to H"));
        if (iso)
          r.check((*iso)(s.delta_class) == delta_min(h, a),
                  at(e, a, "isomorphism does not send [iota] to Delta(a)"));
      });
  }
  return t.finish();
}

SuiteResult suite_fixed_point() {
  SuiteResult r;
  Timed t(r, "fixed-point", "3-chain, a = 0");
  Algebra h = chain(3);
  guarded(r, "3-chain", [&] {
    OneStepResult s = one_step(h, 0);
    const Algebra& alg = s.enriched.algebra();
    r.check(s.enriched.size() == 5, "H[iota] should have 5 elements");
    r.check(s.fa.basis.size() == 1 && alg.name(s.fa.basis.front()) == "(1,m)",
            "filter basis should be {(1,m)}");
    std::vector<std::vector<std::string>> classes;
    for (const auto& c : s.quotient.classes) {
      std::vector<std::string> names;
      for (Elem x : c) names.push_back(alg.name(x));
      std::sort(names.begin(), names.end());
      classes.push_back(names);
    }
    std::sort(classes.begin(), classes.end());
    const std::vector<std::vector<std::string>> expected{
        {"(0,0)"}, {"(1,1)", "(1,m)"}, {"(m,1)", "(m,m)"}};
    r.check(classes == expected, "classes should be {(0,0)}, {(m,m),(m,1)}, {(1,1),(1,m)}");
    r.check(s.delta_class == s.embedding(*h.find("m")), "delta class should be the image of m");
    std::vector<std::string> dense;
    auto in = dense_in_iota(s.enriched);
    for (Elem x = 0; x < alg.size(); ++x)
      if (in[x]) dense.push_back(alg.name(x));
    std::sort(dense.begin(), dense.end());
    r.check(dense == std::vector<std::string>{"(1,1)", "(1,m)", "(m,1)", "(m,m)"},
            "dense elements of H[iota]");
  });
  return t.finish();
}

SuiteResult suite_free(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "free", catalog_bounds(cat) + "; evaluation at every point");
  guarded(r, "2-chain", [&] {
    EnrichedAlgebra f = free_one_generator(chain(2), cap);
    r.check(f.size() == 4, "free algebra over the 2-chain should have 4 elements");
  });
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    guarded(r, at(e, "free"), [&] {
      EnrichedAlgebra f = free_one_generator(h, cap);
      auto v = provenance_violation(f);
      r.check(v.empty(), at(e, v));
      for (Elem p = 0; p < h.size(); ++p) {
        Homomorphism ev = evaluation_at(f, p);
        r.check(homomorphism_violation(f.algebra(), h, ev).empty() && ev(f.generator) == p,
                at(e, "evaluation at " + h.name(p) + " is not a homomorphism sending i there"));
        for (Elem c = 0; c < h.size(); ++c)
          r.check(ev(f.diagonal[c]) == c, at(e, "evaluation moves a constant"));
      }
    });
  }
  return t.finish();
}

SuiteResult suite_extend(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "extend", catalog_bounds(cat) + "; f = identity and f = embedding");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      guarded(r, at(e, a, "extend"), [&] {
        OneStepResult s = one_step(h, a, cap);
        Homomorphism id = Homomorphism::identity(h.size());
        Homomorphism g = extend_hom(s, h, id, trivial_witness(h), delta_min(h, a));
        r.check(s.embedding.then(g) == id, at(e, a, "extension after embedding is not f"));

        Homomorphism self = extend_hom(s, s.algebra(), s.embedding, witness_for_onestep(s),
                                       s.delta_class);
        r.check(self == Homomorphism::identity(s.algebra().size()),
                at(e, a, "extending the embedding is not the identity"));

        if (delta_min(h, a) != h.top()) {
          bool rejected = false;
          try {
            extend_hom(s, h, id, trivial_witness(h), h.top());
          } catch (const DeltaMismatch&) {
            rejected = true;
          }
          r.check(rejected, at(e, a, "a wrong target Delta was accepted"));
        }
      });
  }
  return t.finish();
}

SuiteResult suite_commute(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "commute-iso", catalog_bounds(cat) + "; every (a, b)");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      for (Elem b = 0; b < h.size(); ++b)
        guarded(r, at(e, a, "b=" + h.name(b)), [&] {
          CommuteIso c = commute_iso(h, a, b, cap);
          r.check(c.forward.injective() && c.forward.surjective(c.then_a.algebra().size()),
                  at(e, a, "iso is not bijective"));
        });
  }
  return t.finish();
}

SuiteResult suite_witnesses(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "witnesses", catalog_bounds(cat) + "; compositions on algebras of size <= 3");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      guarded(r, at(e, a, "witness"), [&] {
        OneStepResult s = one_step(h, a, cap);
        Witness w = witness_for_onestep(s);
        r.check(diagonal_violation(w).empty(), at(e, a, "one-step witness diagonal"));
        r.check(generator_violation(w).empty(), at(e, a, "one-step witness generators"));
        if (h.size() > 3) return;

        Witness ident = compose_witnesses(trivial_witness(h), trivial_witness(h));
        r.check(diagonal_violation(ident).empty() && ident.index_size() == 1,
                at(e, "trivial composition"));
        Witness with_id = compose_witnesses(w, trivial_witness(s.algebra()));
        r.check(diagonal_violation(with_id).empty() && generator_violation(with_id).empty(),
                at(e, a, "composition with the identity"));
        for (Elem b = 0; b < h.size(); ++b) {
          OneStepResult s2 = one_step(s.algebra(), s.embedding(b), cap);
          Witness both = compose_witnesses(w, witness_for_onestep(s2));
          const std::string where = at(e, a, "b=" + h.name(b));
          r.check(diagonal_violation(both).empty(), where + ": composed diagonal");
          auto gv = generator_violation(both);
          r.check(gv.empty() && !both.generators.empty(), where + ": composed generators " + gv);
          PowerCheck pc = check_power(both);
          r.check(!pc.exhaustive || pc.violation.empty(), where + ": " + pc.violation);
        }
      });
  }
  return t.finish();
}

SuiteResult suite_completion(const Catalog& cat, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "completion", catalog_bounds(cat));
  for (const auto& e : cat)
    guarded(r, at(e, "completion"), [&] {
      Completion c = km_completion(e.algebra, 8, cap);
      r.check(c.rounds == 1, at(e, "took " + std::to_string(c.rounds) + " rounds"));
    });
  return t.finish();
}

SuiteResult suite_variety(const Catalog& cat, std::size_t depth, std::size_t cap) {
  SuiteResult r;
  Timed t(r, "variety", catalog_bounds(cat) + "; identities in 2 variables, depth <= " +
                            std::to_string(depth));
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      guarded(r, at(e, a, "variety"), [&] {
        OneStepResult s = one_step(h, a, cap);
        const Algebra& q = s.algebra();
        const std::size_t split = h.size() * h.size();
        // A 2-variable identity valid in H fails in the quotient iff two terms
        // share their H table but not their quotient table.
        std::unordered_map<std::vector<Elem>, std::vector<Elem>, MapHash> seen;
        for (const auto& jf : joint_functions(h, q, depth)) {
          std::vector<Elem> on_h(jf.table.begin(), jf.table.begin() + split);
          std::vector<Elem> on_q(jf.table.begin() + split, jf.table.end());
          auto [it, fresh] = seen.try_emplace(std::move(on_h), on_q);
          r.check(fresh || it->second == on_q,
                  at(e, a, "identity lost: " + jf.representative.to_string()));
        }
      });
  }
  return t.finish();
}

SuiteResult suite_omega(std::size_t depth) {
  using namespace omega;
  SuiteResult r;
  const std::size_t d = std::max<std::size_t>(1, std::min<std::size_t>(depth, 2));
  Timed t(r, "omega", "terms of depth <= " + std::to_string(d) +
                          "; pointwise checks for n <= 1000; congruence on depth 1");
  OmegaReport rep = verify_onestep_omega(d);
  for (const auto& g : rep.groups)
    r.check(g.passed(), "group " + g.name + ": " + (g.violations.empty() ? "" : g.violations.front()));
  RemarkReport rem = remark_counterexample(2);
  r.check(rem.impl_fixed && rem.below_constant && rem.collapsed_low == OmegaElement::inverse(2) &&
              rem.collapsed_high == OmegaElement::one() && !rem.injective,
          "remark at n0 = 2 should collapse (1/2, 1)");

  auto sample = sample_maps(1, default_pool());
  for (const auto& f : sample) {
    r.check(PiecewiseMap::from_pieces(f.pieces()) == f, "normalisation is not idempotent: " + f.to_string());
    r.check(!dense_over_zero(f) || f0_member(pw_impl(PiecewiseMap::iota(), f)).has_value(),
            "iota -> dense map outside F_0: " + f.to_string());
  }
  // Canonical forms: structural equality iff pointwise equality past the
  // last breakpoint plus equal tail kinds.
  for (const auto& f : sample)
    for (const auto& g : sample) {
      const std::uint64_t last = std::max(f.tail().start, g.tail().start) + 2;
      bool same = f.tail().is_shift == g.tail().is_shift;
      for (std::uint64_t n = 1; n <= last && same; ++n) same = f.apply(n) == g.apply(n);
      r.check(same == (f == g), "canonical form is not unique: " + f.to_string() + " vs " + g.to_string());
    }
  r.check(!f0_member(PiecewiseMap::constant(OmegaElement::zero())).has_value(), "constant 0 inside F_0");
  for (const auto& f : sample)
    for (const auto& g : sample) {
      PiecewiseMap m = pw_meet(f, g), j = pw_join(f, g), i = pw_impl(f, g);
      bool ok = true;
      for (std::uint64_t n = 1; n <= 1000 && ok; ++n) {
        OmegaElement x = f.apply(n), y = g.apply(n);
        ok = m.apply(n) == meet(x, y) && j.apply(n) == join(x, y) && i.apply(n) == impl(x, y);
      }
      r.check(ok, "pointwise disagreement for " + f.to_string() + ", " + g.to_string());
    }
  for (std::uint64_t n = 1; n <= 16; ++n) {
    r.check(f0_member(pw_impl(PiecewiseMap::iota(), PiecewiseMap::constant(OmegaElement::inverse(n))))
                .has_value(),
            "iota -> 1/" + std::to_string(n) + " outside F_0");
    if (n > 1)
      r.check(!f0_member(PiecewiseMap::constant(OmegaElement::inverse(n))).has_value(),
              "constant 1/" + std::to_string(n) + " inside F_0");
  }
  // The quotient relation is a congruence on the sample.
  for (const auto& f : sample)
    for (const auto& g : sample) {
      if (!quotient_equiv(f, g)) continue;
      r.check(quotient_equiv(g, f), "quotient relation is not symmetric");
      for (const auto& h : sample) {
        if (quotient_equiv(g, h)) r.check(quotient_equiv(f, h), "quotient relation is not transitive");
        r.check(quotient_equiv(pw_meet(f, h), pw_meet(g, h)) &&
                    quotient_equiv(pw_join(f, h), pw_join(g, h)) &&
                    quotient_equiv(pw_impl(f, h), pw_impl(g, h)) &&
                    quotient_equiv(pw_impl(h, f), pw_impl(h, g)),
                "quotient relation is not a congruence at " + f.to_string());
      }
    }
  return t.finish();
}

SuiteResult suite_duality(const Catalog& cat, std::size_t poset_max) {
  SuiteResult r;
  Timed t(r, "duality", catalog_bounds(cat) + "; posets with <= " + std::to_string(poset_max) +
                            " points");
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    guarded(r, at(e, "sigma"), [&] {
      StoneMap s = sigma(h);
      r.check(true, "");
      for (Elem a = 0; a < h.size(); ++a) {
        const std::uint64_t plus = sigma_plus(s, a);
        r.check(s.upsets.is_upset(plus), at(e, a, "sigma(a)+ is not an up-set"));
        r.check(plus == s.mask(delta_min(h, a)), at(e, a, "sigma(a)+ differs from sigma(Delta(a))"));
      }
    });
  }
  for (std::size_t k = 1; k <= poset_max; ++k)
    for (const auto& p : posets_up_to_iso(k))
      guarded(r, "poset round trip", [&] {
        r.check(poset_isomorphism(spectrum(from_poset(p)).poset, p).has_value(),
                "spectrum of Up(P) is not P for a " + std::to_string(k) + "-point poset");
      });
  return t.finish();
}

SuiteResult suite_stone_findings(const Catalog& cat, std::size_t depth,
                                 std::uint64_t* counterexamples, std::uint64_t* disagreements,
                                 std::size_t cap) {
  SuiteResult r;
  Timed t(r, "stone-findings", catalog_bounds(cat) + "; open statement over 2 variables, depth <= " +
                                   std::to_string(depth));
  std::uint64_t found = 0, differ = 0, triggered = 0, formulas = 0;
  for (const auto& e : cat) {
    const Algebra& h = e.algebra;
    for (Elem a = 0; a < h.size(); ++a)
      guarded(r, at(e, a, "stone"), [&] {
        auto os = open_statement_check(h, a, depth);
        r.instances += os.instances;
        triggered += os.triggered;
        formulas = std::max(formulas, os.formulas);
        if (!os.held()) {
          found += os.counterexample_count;
          r.findings.push_back(at(e, a, "open statement counterexample: " + os.counterexamples.front()));
        }
        Comparison c = compare_with_onestep(h, a, cap);
        ++r.instances;
        if (!c.isomorphic()) {
          ++differ;
          r.findings.push_back(at(e, a, "H[Delta(a)] and delta[H_a] differ: " + c.detail));
        }
      });
  }
  r.findings.insert(r.findings.begin(),
                    "open statement: " + std::to_string(found) + " counterexamples, " +
                        std::to_string(triggered) + " triggered instances, " +
                        std::to_string(formulas) + " formulas per algebra");
  r.findings.insert(r.findings.begin() + 1,
                    "comparison with delta[H_a]: " + std::to_string(differ) + " disagreements");
  if (counterexamples) *counterexamples = found;
  if (disagreements) *disagreements = differ;
  return t.finish();
}

std::vector<SuiteResult> run_all_suites(const Catalog& cat, std::size_t depth,
                                        std::size_t poset_max, std::size_t cap) {
  std::vector<SuiteResult> out;
  out.push_back(suite_axioms(cat, depth));
  out.push_back(suite_structures(cat));
  out.push_back(suite_terms(cat, depth));
  out.push_back(suite_dense_characterizations(cat));
  out.push_back(suite_km_axioms(cat));
  out.push_back(suite_delta_identity(cat));
  out.push_back(suite_homomorphisms(cat));
  out.push_back(suite_one_step(cat, cap));
  out.push_back(suite_fixed_point());
  out.push_back(suite_free(cat, cap));
  out.push_back(suite_extend(cat, cap));
  out.push_back(suite_commute(cat, cap));
  out.push_back(suite_witnesses(cat, cap));
  out.push_back(suite_completion(cat, cap));
  out.push_back(suite_variety(cat, depth, cap));
  out.push_back(suite_omega(depth));
  out.push_back(suite_duality(cat, poset_max));
  out.push_back(suite_stone_findings(cat, depth, nullptr, nullptr, cap));
  return out;
}

}  // namespace kmforge
