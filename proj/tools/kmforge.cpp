// km-forge command line: JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 input error, 2 contract violation, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmforge/catalog.hpp"
#include "kmforge/completion.hpp"
#include "kmforge/density.hpp"
#include "kmforge/enriched.hpp"
#include "kmforge/errors.hpp"
#include "kmforge/extend.hpp"
#include "kmforge/io.hpp"
#include "kmforge/omega_verify.hpp"
#include "kmforge/one_step.hpp"
#include "kmforge/stone.hpp"
#include "kmforge/suites.hpp"
#include "kmforge/terms.hpp"

using namespace kmforge;

namespace {

struct Options {
  std::string input, output, element_a, element_b, dot, table;
  std::size_t cap = kDefaultClosureCap;
  std::size_t depth = 2;
  std::size_t nvars = 2;
  std::size_t poset_max = 4, chain_max = 6;
  std::uint64_t n0 = 2;
  bool schemas = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json names_json(const Algebra& h, const std::vector<Elem>& xs) {
  json out = json::array();
  for (Elem x : xs) out.push_back(h.name(x));
  return out;
}

json prime_names(const StoneMap& s, const Algebra& h, std::uint64_t mask) {
  json out = json::array();
  for (std::size_t p = 0; p < s.spec.size(); ++p)
    if (mask >> p & 1) out.push_back(h.name(s.spec.generators[p]));
  return out;
}

std::vector<std::string> delta_notes(const KMAlgebra& k) {
  const Algebra& h = k.base;
  std::vector<std::string> notes(h.size());
  for (Elem x = 0; x < h.size(); ++x) {
    std::string& n = notes[k.delta[x]];
    n += n.empty() ? "Δ of " : ", ";
    n += h.name(x);
  }
  return notes;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

json bounds_json(const Options& o, std::initializer_list<const char*> keys) {
  json b = json::object();
  for (std::string k : keys) {
    if (k == "cap") b["closure_cap"] = o.cap;
    if (k == "depth") b["depth"] = o.depth;
    if (k == "nvars") b["nvars"] = o.nvars;
  }
  return b;
}

int cmd_validate(const Options& o) {
  Algebra h = load_algebra(o.input);
  json r = report("validate");
  r["algebra"] = algebra_to_json(h);
  r["size"] = h.size();
  r["valid"] = true;
  if (o.schemas) {
    r["bounds"] = bounds_json(o, {"depth", "nvars"});
    const SchemaBounds bounds{o.depth, o.nvars};
    auto functions = term_functions(h, bounds.nvars, bounds.depth);
    json schemas = json::array();
    bool all = true;
    for (Schema s : {Schema::Eqlemma, Schema::EqD, Schema::Maintool, Schema::Congruence}) {
      auto rep = check_schema(s, h, bounds, functions, o.input);
      all = all && rep.passed();
      schemas.push_back(schema_to_json(rep));
    }
    r["schemas"] = std::move(schemas);
    emit(r);
    return all ? 0 : 2;
  }
  emit(r);
  return 0;
}

int cmd_delta(const Options& o) {
  Algebra h = load_algebra(o.input);
  KMAlgebra k = km_from_heyting(h);
  json r = report("delta");
  if (!o.element_a.empty()) {
    Elem a = h.parse_element(o.element_a);
    r["anchor"] = h.name(a);
    r["delta"] = h.name(k.delta[a]);
  } else {
    r["delta"] = delta_to_json(k);
  }
  emit(r);
  return 0;
}

int cmd_dense(const Options& o) {
  Algebra h = load_algebra(o.input);
  json r = report("dense");
  json filters = json::object();
  std::vector<Elem> anchors;
  if (!o.element_a.empty()) {
    anchors.push_back(h.parse_element(o.element_a));
  } else {
    for (Elem a = 0; a < h.size(); ++a) anchors.push_back(a);
  }
  for (Elem a : anchors) {
    Filter f = dense_over(h, a);
    filters[h.name(a)] = {{"members", names_json(h, f.elements())},
                          {"least", h.name(delta_min(h, a))}};
  }
  r["dense"] = std::move(filters);
  emit(r);
  return 0;
}

int cmd_km_axioms(const Options& o) {
  Algebra h = load_algebra(o.input);
  json r = report("km-axioms");
  std::vector<Elem> table;
  if (!o.table.empty()) {
    std::ifstream in(o.table);
    if (!in) throw IoError("cannot read " + o.table);
    json t;
    try {
      t = json::parse(in);
    } catch (const json::exception& ex) {
      throw FormatError(std::string("bad delta table: ") + ex.what());
    }
    if (!t.is_object()) throw FormatError("delta table must be an object");
    table.assign(h.size(), kNoElem);
    for (auto& [k, v] : t.items()) {
      if (!v.is_string()) throw FormatError("delta table values must be element names");
      table[h.parse_element(k)] = h.parse_element(v.get<std::string>());
    }
    for (Elem x = 0; x < h.size(); ++x)
      if (table[x] == kNoElem) throw FormatError("delta table misses " + h.name(x));
    r["source"] = "table";
  } else {
    table = km_from_heyting(h).delta;
    r["source"] = "least dense elements";
  }
  std::string violation = km_axiom_violation(h, table);
  if (!violation.empty()) throw AxiomViolation(violation);
  KMAlgebra k = km_from_table(h, table);
  r["delta"] = delta_to_json(k);
  r["axioms_hold"] = true;
  emit(r);
  return 0;
}

int cmd_one_step(const Options& o) {
  Algebra h = load_algebra(o.input);
  Elem a = h.parse_element(o.element_a);
  OneStepResult s = one_step(h, a, o.cap);
  json r = report("one-step");
  r["bounds"] = bounds_json(o, {"cap"});
  r["result"] = one_step_to_json(s);
  if (!o.dot.empty()) write_file(o.dot, to_dot(s.algebra(), delta_notes(km_from_heyting(s.algebra()))));
  emit(r);
  return 0;
}

int cmd_km(const Options& o) {
  Algebra h = load_algebra(o.input);
  Completion c = km_completion(h, 8, o.cap);
  json r = report("km");
  r["bounds"] = {{"closure_cap", o.cap}, {"round_cap", 8}};
  r["rounds"] = c.rounds;
  r["steps"] = c.steps;
  r["size"] = c.km.base.size();
  json embedding = json::object();
  for (Elem x = 0; x < h.size(); ++x) embedding[h.name(x)] = c.km.base.name(c.embedding(x));
  r["embedding"] = std::move(embedding);
  r["algebra"] = algebra_to_json(c.km.base);
  r["delta"] = delta_to_json(c.km);
  emit(r);
  return 0;
}

int cmd_free(const Options& o) {
  Algebra h = load_algebra(o.input);
  EnrichedAlgebra f = free_one_generator(h, o.cap);
  std::string v = provenance_violation(f);
  if (!v.empty()) throw ContractError(v);
  json r = report("free");
  r["bounds"] = bounds_json(o, {"cap"});
  r["size"] = f.size();
  r["generator"] = f.algebra().name(f.generator);
  json elements = json::array();
  for (Elem x = 0; x < f.size(); ++x) {
    const auto& step = f.sub.steps[x];
    json e = {{"map", f.algebra().name(x)}};
    switch (step.op) {
      case Op::Var:
        e["from"] = step.lhs == 0 ? std::string("i") : "const " + h.name(static_cast<Elem>(step.lhs - 1));
        break;
      case Op::Bot: e["from"] = "0"; break;
      case Op::Top: e["from"] = "1"; break;
      default: {
        const char* sym = step.op == Op::Meet ? " & " : step.op == Op::Join ? " | " : " -> ";
        e["from"] = "#" + std::to_string(step.lhs) + sym + "#" + std::to_string(step.rhs);
      }
    }
    elements.push_back(std::move(e));
  }
  r["elements"] = std::move(elements);
  r["algebra"] = algebra_to_json(f.algebra());
  emit(r);
  return 0;
}

int cmd_iso_commute(const Options& o) {
  Algebra h = load_algebra(o.input);
  Elem a = h.parse_element(o.element_a), b = h.parse_element(o.element_b);
  CommuteIso c = commute_iso(h, a, b, o.cap);
  json r = report("iso-commute");
  r["bounds"] = bounds_json(o, {"cap"});
  r["a"] = h.name(a);
  r["b"] = h.name(b);
  r["first_a_size"] = c.first_a.algebra().size();
  r["first_b_size"] = c.first_b.algebra().size();
  r["size"] = c.then_b.algebra().size();
  json forward = json::object();
  const Algebra& src = c.then_b.algebra();
  const Algebra& dst = c.then_a.algebra();
  for (Elem x = 0; x < src.size(); ++x) forward[src.name(x)] = dst.name(c.forward(x));
  r["forward"] = std::move(forward);
  r["inverse_checked"] = true;
  emit(r);
  return 0;
}

int cmd_omega_demo(const Options& o) {
  if (o.n0 < 1) throw DomainError("n0 must be at least 1");
  json r = report("omega-demo");
  r["remark"] = remark_to_json(omega::remark_counterexample(o.n0));
  emit(r);
  return 0;
}

int cmd_omega_verify(const Options& o) {
  omega::OmegaReport rep = omega::verify_onestep_omega(o.depth);
  json r = report("omega-verify");
  r["bounds"] = {{"depth", o.depth}, {"constants", omega_to_json(rep)["constants"]}};
  r["result"] = omega_to_json(rep);
  emit(r);
  return rep.passed() ? 0 : 2;
}

int cmd_spec(const Options& o) {
  Algebra h = load_algebra(o.input);
  StoneMap s = sigma(h);
  json r = report("spec");
  r["spectrum"] = spectrum_to_json(h, s.spec);
  json sig = json::object();
  for (Elem x = 0; x < h.size(); ++x) sig[h.name(x)] = prime_names(s, h, s.mask(x));
  r["sigma"] = std::move(sig);
  r["sigma_is_isomorphism"] = true;
  emit(r);
  return 0;
}

int cmd_sigma_plus(const Options& o) {
  Algebra h = load_algebra(o.input);
  Elem a = h.parse_element(o.element_a);
  StoneMap s = sigma(h);
  std::uint64_t plus = sigma_plus(s, a);
  json r = report("sigma-plus");
  r["anchor"] = h.name(a);
  r["sigma"] = prime_names(s, h, s.mask(a));
  r["sigma_plus"] = prime_names(s, h, plus);
  r["delta"] = h.name(delta_min(h, a));
  r["equals_sigma_delta"] = plus == s.mask(delta_min(h, a));
  emit(r);
  return 0;
}

int cmd_compare(const Options& o) {
  Algebra h = load_algebra(o.input);
  Elem a = h.parse_element(o.element_a);
  json r = report("compare-muravitsky");
  r["bounds"] = bounds_json(o, {"cap"});
  r["anchor"] = h.name(a);
  r["result"] = comparison_to_json(compare_with_onestep(h, a, o.cap));
  emit(r);
  return 0;
}

int cmd_open_statement(const Options& o) {
  Algebra h = load_algebra(o.input);
  Elem a = h.parse_element(o.element_a);
  json r = report("open-statement");
  r["bounds"] = bounds_json(o, {"depth", "nvars"});
  r["anchor"] = h.name(a);
  r["result"] = open_statement_to_json(open_statement_check(h, a, o.depth, o.nvars));
  emit(r);
  return 0;
}

int cmd_verify_all(const Options& o) {
  Catalog cat = catalog(o.poset_max, o.chain_max);
  auto results = run_all_suites(cat, o.depth, o.poset_max, o.cap);
  json r = report("verify-all");
  r["bounds"] = {{"poset_max", o.poset_max},
                 {"chain_max", o.chain_max},
                 {"depth", o.depth},
                 {"closure_cap", o.cap},
                 {"catalog_size", cat.size()}};
  json suites = json::array();
  bool all = true, complete = true;
  for (const auto& s : results) {
    all = all && s.passed();
    complete = complete && s.complete();
    suites.push_back({{"suite", s.name},
                      {"bounds", s.bounds},
                      {"instances", s.instances},
                      {"failure_count", s.failure_count},
                      {"failures", s.failures},
                      {"findings", s.findings},
                      {"capped_count", s.capped_count},
                      {"capped", s.capped},
                      {"passed", s.passed()}});
    std::cerr << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.instances << " checks";
    if (!s.complete()) std::cerr << ", " << s.capped_count << " instances over the cap";
    std::cerr << ", " << s.seconds << " s)\n";
  }
  r["suites"] = std::move(suites);
  r["passed"] = all;
  r["complete"] = complete;
  emit(r);
  if (!all) return 2;
  return complete ? 0 : 3;
}

int cmd_export_dot(const Options& o) {
  Algebra h = load_algebra(o.input);
  std::string dot = to_dot(h, delta_notes(km_from_heyting(h)));
  if (o.output.empty() || o.output == "-") {
    std::cout << dot;
  } else {
    write_file(o.output, dot);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"km-forge: Heyting algebras, dense elements and their KM enrichment"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&) = nullptr;

  auto with_input = [&](CLI::App* c) {
    c->add_option("algebra", o.input, "algebra JSON file")->required();
    c->add_option("--cap", o.cap, "closure cap")->check(CLI::PositiveNumber);
    return c;
  };
  auto anchor = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("-a", o.element_a, "anchor element (name or index)");
    if (required) opt->required();
  };
  auto bind = [&](CLI::App* c, int (*fn)(const Options&)) { c->callback([&run, fn] { run = fn; }); };

  auto* validate = with_input(app.add_subcommand("validate", "check the Heyting axioms"));
  validate->add_flag("--schemas", o.schemas, "also run the identity schemas");
  validate->add_option("--depth", o.depth, "term depth for --schemas")->check(CLI::PositiveNumber);
  bind(validate, cmd_validate);

  auto* delta = with_input(app.add_subcommand("delta", "least dense elements"));
  anchor(delta, false);
  bind(delta, cmd_delta);

  auto* dense = with_input(app.add_subcommand("dense", "filters of dense elements"));
  anchor(dense, false);
  bind(dense, cmd_dense);

  auto* km_axioms = with_input(app.add_subcommand("km-axioms", "check a Δ table"));
  km_axioms->add_option("--table", o.table, "JSON object element -> Δ(element)");
  bind(km_axioms, cmd_km_axioms);

  auto* onestep = with_input(app.add_subcommand("one-step", "the enrichment H[Δ(a)]"));
  anchor(onestep, true);
  onestep->add_option("--dot", o.dot, "write the quotient's Hasse diagram");
  bind(onestep, cmd_one_step);

  bind(with_input(app.add_subcommand("km", "KM completion by repeated enrichment")), cmd_km);
  bind(with_input(app.add_subcommand("free", "free extension by one generator")), cmd_free);

  auto* iso = with_input(app.add_subcommand("iso-commute", "H[Δ(a)][Δ(b)] vs H[Δ(b)][Δ(a)]"));
  anchor(iso, true);
  iso->add_option("-b", o.element_b, "second anchor")->required();
  bind(iso, cmd_iso_commute);

  auto* omega_cmd = app.add_subcommand("omega", "the symbolic chain 0 < ... < 1/2 < 1");
  omega_cmd->require_subcommand(1);
  auto* demo = omega_cmd->add_subcommand("demo", "admitting a non-least dense generator");
  demo->add_option("--n0", o.n0, "shift offset")->check(CLI::PositiveNumber);
  bind(demo, cmd_omega_demo);
  auto* verify = omega_cmd->add_subcommand("verify", "sampled one-step checks");
  verify->add_option("--depth", o.depth, "term depth")->check(CLI::Range(1, 3));
  bind(verify, cmd_omega_verify);

  bind(with_input(app.add_subcommand("spec", "prime filters and the Stone map")), cmd_spec);

  auto* plus = with_input(app.add_subcommand("sigma-plus", "σ(a) with the maximal outside points"));
  anchor(plus, true);
  bind(plus, cmd_sigma_plus);

  auto* compare = with_input(app.add_subcommand("compare-muravitsky", "H[Δ(a)] against δ[H_a]"));
  anchor(compare, true);
  bind(compare, cmd_compare);

  auto* open = with_input(app.add_subcommand("open-statement", "finite search for counterexamples"));
  anchor(open, true);
  open->add_option("--depth", o.depth, "term depth")->check(CLI::PositiveNumber);
  open->add_option("--nvars", o.nvars, "variables per formula")->check(CLI::Range(1, 3));
  bind(open, cmd_open_statement);

  auto* all = app.add_subcommand("verify-all", "every property suite over a catalog");
  all->add_option("--poset-max", o.poset_max, "largest poset")->check(CLI::Range(1, 6));
  all->add_option("--chain-max", o.chain_max, "largest chain")->check(CLI::Range(2, 16));
  all->add_option("--depth", o.depth, "term depth")->check(CLI::Range(1, 3));
  all->add_option("--cap", o.cap, "closure cap")->check(CLI::PositiveNumber);
  bind(all, cmd_verify_all);

  auto* dot = with_input(app.add_subcommand("export-dot", "Hasse diagram with Δ annotations"));
  dot->add_option("-o", o.output, "output file ('-' for stdout)");
  bind(dot, cmd_export_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return run(o);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const ContractError& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
