#include "kmforge/witness.hpp"

#include <memory>

#include "kmforge/errors.hpp"

namespace kmforge {

std::size_t Witness::index_size() const {
  std::size_t n = 1;
  for (auto d : index_dims) n *= d;
  return n;
}

std::string diagonal_violation(const Witness& w) {
  for (Elem x = 0; x < w.source.size(); ++x) {
    auto d = w.diagonal(x);
    if (!w.member(d)) return "diagonal of " + w.source.name(x) + " is not a member";
    if (w.project(d) != w.hom(x))
      return "diagonal of " + w.source.name(x) + " does not project to its image";
  }
  return {};
}

std::string generator_violation(const Witness& w) {
  for (std::size_t g = 0; g < w.generators.size(); ++g) {
    const auto& [tuple, image] = w.generators[g];
    if (!w.member(tuple)) return "generator " + std::to_string(g) + " is not a member";
    if (w.project(tuple) != image)
      return "generator " + std::to_string(g) + " projects to " + w.target.name(w.project(tuple)) +
             ", expected " + w.target.name(image);
  }
  return {};
}

PowerCheck check_power(const Witness& w, std::size_t limit) {
  PowerCheck out;
  const std::size_t n = w.index_size();
  const std::size_t base = w.source.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / base) return out;
    total *= base;
  }
  out.exhaustive = true;

  std::vector<std::vector<Elem>> members;
  std::vector<Elem> t(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    if (w.member(t)) members.push_back(t);
    for (std::size_t i = 0; i < n && ++t[i] == base; ++i) t[i] = 0;
  }
  out.members = members.size();

  const Algebra& a = w.source;
  const Algebra& b = w.target;
  std::vector<bool> hit(b.size());
  std::vector<Elem> image(members.size());
  for (std::size_t u = 0; u < members.size(); ++u) hit[image[u] = w.project(members[u])] = true;
  for (Elem y = 0; y < b.size(); ++y)
    if (!hit[y]) {
      out.violation = "projection misses " + b.name(y);
      return out;
    }

  std::vector<Elem> r(n);
  for (std::size_t u = 0; u < members.size(); ++u)
    for (std::size_t v = 0; v < members.size(); ++v) {
      const auto& x = members[u];
      const auto& y = members[v];
      struct Case {
        Elem (Algebra::*op)(Elem, Elem) const;
        const char* name;
      };
      for (Case c : {Case{&Algebra::meet, "meet"}, Case{&Algebra::join, "join"},
                     Case{&Algebra::impl, "impl"}}) {
        for (std::size_t i = 0; i < n; ++i) r[i] = (a.*c.op)(x[i], y[i]);
        if (!w.member(r)) {
          out.violation = std::string("members not closed under ") + c.name;
          return out;
        }
        if (w.project(r) != (b.*c.op)(image[u], image[v])) {
          out.violation = std::string("projection does not preserve ") + c.name;
          return out;
        }
      }
    }
  return out;
}

Witness witness_for_surjection(const Algebra& source, const Algebra& target,
                               const Homomorphism& f) {
  if (!f.surjective(target.size())) throw ContractError("witness needs an onto map");
  if (auto v = homomorphism_violation(source, target, f); !v.empty())
    throw ContractError("witness needs a homomorphism: " + v);
  Witness w{source, target, f, {1}, {}, {}, {}, {}};
  const std::size_t n = source.size();
  w.member = [n](const std::vector<Elem>& t) { return t.size() == 1 && t[0] < n; };
  w.project = [f](const std::vector<Elem>& t) { return f(t[0]); };
  for (Elem x = 0; x < n; ++x) w.elements.push_back({x});
  return w;
}

Witness witness_for_onestep(const OneStepResult& step) {
  auto s = std::make_shared<const OneStepResult>(step);
  const EnrichedAlgebra& e = s->enriched;
  Witness w{s->base(), s->algebra(), s->embedding, {e.domain.size()}, {}, {}, {}, e.sub.elements};
  w.member = [s](const std::vector<Elem>& t) { return s->enriched.sub.find(t).has_value(); };
  w.project = [s](const std::vector<Elem>& t) { return s->pi(s->enriched.sub.at(t)); };
  w.generators.emplace_back(e.map(e.generator), s->delta_class);
  for (Elem x = 0; x < e.base.size(); ++x)
    w.generators.emplace_back(e.map(e.diagonal[x]), s->embedding(x));
  if (auto v = diagonal_violation(w); !v.empty()) throw ContractError("one-step witness: " + v);
  return w;
}

Witness compose_witnesses(const Witness& first, const Witness& second) {
  if (!(first.target == second.source))
    throw ContractError("witnesses do not compose: target and source differ");
  auto f = std::make_shared<const Witness>(first);
  auto g = std::make_shared<const Witness>(second);
  const std::size_t ni = first.index_size(), nj = second.index_size();

  Witness w;
  w.source = first.source;
  w.target = second.target;
  w.hom = first.hom.then(second.hom);
  w.index_dims = first.index_dims;
  w.index_dims.insert(w.index_dims.end(), second.index_dims.begin(), second.index_dims.end());

  // Image of u under q^J, or nothing if some block falls outside S.
  auto inner = [f, ni, nj](const std::vector<Elem>& u) -> std::optional<std::vector<Elem>> {
    if (u.size() != ni * nj) return std::nullopt;
    std::vector<Elem> out(nj);
    for (std::size_t j = 0; j < nj; ++j) {
      std::vector<Elem> block(u.begin() + j * ni, u.begin() + (j + 1) * ni);
      if (!f->member(block)) return std::nullopt;
      out[j] = f->project(block);
    }
    return out;
  };
  w.member = [g, inner](const std::vector<Elem>& u) {
    auto t = inner(u);
    return t && g->member(*t);
  };
  w.project = [g, inner](const std::vector<Elem>& u) { return g->project(*inner(u)); };

  // Lift each generator of the second witness blockwise through the first.
  if (!first.elements.empty()) {
    std::vector<std::optional<std::vector<Elem>>> lift(first.target.size());
    for (const auto& s : first.elements) {
      Elem y = first.project(s);
      if (!lift[y]) lift[y] = s;
    }
    for (const auto& [t, image] : second.generators) {
      std::vector<Elem> u;
      bool ok = true;
      for (Elem y : t) {
        if (!lift[y]) {
          ok = false;
          break;
        }
        u.insert(u.end(), lift[y]->begin(), lift[y]->end());
      }
      if (ok) w.generators.emplace_back(std::move(u), image);
    }
  }
  return w;
}

}  // namespace kmforge
