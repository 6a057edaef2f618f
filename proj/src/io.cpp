#include "kmforge/io.hpp"

#include <fstream>
#include <sstream>

#include "kmforge/errors.hpp"
#include "kmforge/poset.hpp"

namespace kmforge {

namespace {

std::vector<std::uint8_t> read_matrix(const json& m, std::size_t n, const char* what) {
  if (!m.is_array() || m.size() != n)
    throw FormatError(std::string(what) + " must be an array of " + std::to_string(n) + " rows");
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      throw FormatError(std::string(what) + " row " + std::to_string(i) + " must have " +
                        std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) {
      const json& v = m[i][k];
      if (v.is_boolean()) {
        out[i * n + k] = v.get<bool>();
      } else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) {
        out[i * n + k] = static_cast<std::uint8_t>(v.get<int>());
      } else {
        throw FormatError(std::string(what) + " entries must be booleans");
      }
    }
  }
  return out;
}

json matrix_json(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& at) {
  json m = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(at(i, k));
    m.push_back(std::move(row));
  }
  return m;
}

json names_of(const Algebra& h, const std::vector<Elem>& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(h.name(x));
  return out;
}

}  // namespace

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("algebra must be a JSON object");
  if (j.contains("poset")) {
    const json& p = j["poset"];
    if (!p.is_object() || !p.contains("points") || !p["points"].is_number_unsigned())
      throw FormatError("poset needs a non-negative integer 'points'");
    FinitePoset poset;
    poset.points = p["points"].get<std::size_t>();
    if (poset.points > kMaxPosetPoints)
      throw FormatError("posets are limited to " + std::to_string(kMaxPosetPoints) + " points");
    if (!p.contains("leq")) throw FormatError("poset needs 'leq'");
    poset.leq = read_matrix(p["leq"], poset.points, "poset leq");
    if (!poset.valid()) throw ValidationError("poset order is not reflexive, antisymmetric and transitive");
    return from_poset(poset);
  }
  if (!j.contains("elements") || !j.contains("leq"))
    throw FormatError("algebra needs 'elements' and 'leq' (or 'poset')");
  const json& e = j["elements"];
  if (!e.is_array() || e.empty()) throw FormatError("'elements' must be a non-empty array");
  std::vector<std::string> names;
  for (const auto& x : e) {
    if (!x.is_string()) throw FormatError("element names must be strings");
    names.push_back(x.get<std::string>());
  }
  auto leq = read_matrix(j["leq"], names.size(), "leq");
  return Algebra::from_order(std::move(names), std::move(leq));
}

Algebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw FormatError(path + ": " + ex.what());
  }
  return algebra_from_json(j);
}

json algebra_to_json(const Algebra& h) {
  return {{"elements", h.names()},
          {"leq", matrix_json(h.size(), [&](std::size_t i, std::size_t k) {
             return h.leq(static_cast<Elem>(i), static_cast<Elem>(k));
           })}};
}

json poset_to_json(const FinitePoset& p) {
  return {{"points", p.points},
          {"leq", matrix_json(p.points, [&](std::size_t i, std::size_t k) { return p.le(i, k); })}};
}

json report(const std::string& kind) { return {{"version", kSchemaVersion}, {"report", kind}}; }

json delta_to_json(const KMAlgebra& k) {
  json table = json::object();
  for (Elem x = 0; x < k.base.size(); ++x) table[k.base.name(x)] = k.base.name(k.delta[x]);
  return table;
}

json one_step_to_json(const OneStepResult& r) {
  const EnrichedAlgebra& e = r.enriched;
  const Algebra& h = r.base();
  json enriched = json::array();
  for (Elem x = 0; x < e.size(); ++x) {
    enriched.push_back({{"map", e.algebra().name(x)},
                        {"provenance", e.sub.provenance[x].size() <= 64
                                           ? e.sub.provenance[x].to_string()
                                           : std::string("(size ") +
                                                 std::to_string(e.sub.provenance[x].size()) + ")"},
                        {"in_filter", r.fa.contains(x)}});
  }
  json classes = json::array();
  for (const auto& c : r.quotient.classes) classes.push_back(names_of(e.algebra(), c));
  json embedding = json::object();
  for (Elem x = 0; x < h.size(); ++x) embedding[h.name(x)] = r.algebra().name(r.embedding(x));
  KMAlgebra km = km_from_heyting(r.algebra());
  return {{"anchor", h.name(r.anchor())},
          {"domain", names_of(h, e.domain)},
          {"iota", e.algebra().name(e.generator)},
          {"enriched_size", e.size()},
          {"enriched", std::move(enriched)},
          {"filter_basis", names_of(e.algebra(), r.fa.basis)},
          {"classes", std::move(classes)},
          {"embedding", std::move(embedding)},
          {"delta_class", r.algebra().name(r.delta_class)},
          {"quotient", algebra_to_json(r.algebra())},
          {"quotient_delta", delta_to_json(km)}};
}

json schema_to_json(const SchemaReport& r) {
  return {{"schema", r.schema},
          {"algebra", r.algebra},
          {"bound", {{"depth", r.bound.depth}, {"nvars", r.bound.nvars}}},
          {"instances", r.instances},
          {"formulas", r.formulas},
          {"term_functions", r.term_functions},
          {"passed", r.passed()},
          {"violations", r.violations}};
}

json spectrum_to_json(const Algebra& h, const Spectrum& s) {
  json primes = json::array();
  for (std::size_t p = 0; p < s.size(); ++p)
    primes.push_back({{"generator", h.name(s.generators[p])},
                      {"members", names_of(h, s.primes[p].elements())}});
  return {{"primes", std::move(primes)}, {"order", poset_to_json(s.poset)}};
}

json comparison_to_json(const Comparison& c) {
  return {{"enriched_size", c.enriched_size},
          {"delta_subalgebra_size", c.delta_size},
          {"plus_is_sigma_delta", c.plus_is_sigma_delta},
          {"well_defined", c.well_defined},
          {"homomorphism", c.homomorphism},
          {"injective", c.injective},
          {"surjective", c.surjective},
          {"isomorphic", c.isomorphic()},
          {"detail", c.detail}};
}

json open_statement_to_json(const OpenStatementReport& r) {
  return {{"depth", r.depth},
          {"nvars", r.nvars},
          {"formulas", r.formulas},
          {"term_functions", r.term_functions},
          {"instances", r.instances},
          {"triggered", r.triggered},
          {"counterexample_count", r.counterexample_count},
          {"counterexamples", r.counterexamples},
          {"held", r.held()}};
}

json omega_to_json(const omega::OmegaReport& r) {
  json constants = json::array();
  for (auto c : r.constants) constants.push_back(c.to_string());
  json groups = json::array();
  for (const auto& g : r.groups)
    groups.push_back({{"name", g.name},
                      {"instances", g.instances},
                      {"violation_count", g.violation_count},
                      {"violations", g.violations},
                      {"passed", g.passed()}});
  return {{"depth", r.depth},
          {"constants", std::move(constants)},
          {"formulas", r.formulas},
          {"distinct_maps", r.distinct_maps},
          {"non_principal_bound", r.non_principal_bound},
          {"groups", std::move(groups)},
          {"passed", r.passed()}};
}

json remark_to_json(const omega::RemarkReport& r) {
  return {{"n0", r.n0},
          {"delta0", r.delta0.to_string()},
          {"iota_impl_delta0_is_delta0", r.impl_fixed},
          {"delta0_below_constant", r.below_constant},
          {"collapsed_pair", {r.collapsed_low.to_string(), r.collapsed_high.to_string()}},
          {"injective", r.injective}};
}

std::string to_dot(const Algebra& h, const std::vector<std::string>& notes) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::ostringstream os;
  os << "digraph algebra {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Elem x = 0; x < h.size(); ++x) {
    std::string label = escape(h.name(x));
    if (x < notes.size() && !notes[x].empty()) label += "\\n" + escape(notes[x]);
    os << "  n" << x << " [label=\"" << label << "\"];\n";
  }
  for (auto [lo, hi] : h.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kmforge
