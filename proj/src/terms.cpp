#include "kmforge/terms.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "kmforge/errors.hpp"

namespace kmforge {

void throw_missing_variable(std::size_t var) { throw MissingVariable(var); }

Elem eval(const Algebra& h, const Formula& f, std::span<const Elem> valuation) {
  return f.fold(
      [&](Op op, std::size_t var) -> Elem {
        if (op == Op::Bot) return h.bot();
        if (op == Op::Top) return h.top();
        if (var >= valuation.size()) throw MissingVariable(var);
        return valuation[var];
      },
      [&](Op op, Elem l, Elem r) -> Elem {
        switch (op) {
          case Op::Meet:
            return h.meet(l, r);
          case Op::Join:
            return h.join(l, r);
          default:
            return h.impl(l, r);
        }
      });
}

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

constexpr Op kConnectives[] = {Op::Meet, Op::Join, Op::Impl};

}  // namespace

void for_each_term(std::size_t nvars, std::size_t max_depth,
                   const std::function<bool(const Formula&)>& fn) {
  std::vector<Formula> all;  // depth <= d-1, in stream order
  for (std::size_t i = 0; i < nvars; ++i) all.push_back(Formula::var(i));
  all.push_back(Formula::bot());
  all.push_back(Formula::top());
  for (const Formula& f : all)
    if (!fn(f)) return;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::size_t max_size = 0;
    for (const Formula& f : all) max_size = std::max(max_size, f.size());
    // bucket[s]: stream positions of formulas of size s
    std::vector<std::vector<std::size_t>> bucket(max_size + 1);
    for (std::size_t i = 0; i < all.size(); ++i) bucket[all[i].size()].push_back(i);
    std::vector<Formula> level;
    for (std::size_t s = 3; s <= 2 * max_size + 1; ++s) {
      for (Op op : kConnectives) {
        for (const Formula& l : all) {
          if (l.size() + 1 >= s) continue;
          std::size_t rs = s - 1 - l.size();
          if (rs > max_size) continue;
          for (std::size_t ri : bucket[rs]) {
            const Formula& r = all[ri];
            if (std::max(l.depth(), r.depth()) != d - 1) continue;
            Formula f = Formula::binary(op, l, r);
            if (!fn(f)) return;
            if (d < max_depth) level.push_back(std::move(f));
          }
        }
      }
    }
    all.insert(all.end(), level.begin(), level.end());
  }
}

std::vector<Formula> enumerate_terms(std::size_t nvars, std::size_t max_depth) {
  std::vector<Formula> out;
  for_each_term(nvars, max_depth, [&](const Formula& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::uint64_t count_terms(std::size_t nvars, std::size_t max_depth) {
  std::uint64_t c = nvars + 2;
  for (std::size_t d = 1; d <= max_depth; ++d) c = sat_add(nvars + 2, sat_mul(3, sat_mul(c, c)));
  return c;
}

std::size_t valuation_index(std::size_t n, std::span<const Elem> valuation) {
  std::size_t idx = 0;
  for (Elem v : valuation) idx = idx * n + v;
  return idx;
}

namespace {

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem e : v) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::vector<TermFunction> term_functions(const Algebra& h, std::size_t nvars,
                                         std::size_t max_depth) {
  const std::size_t n = h.size();
  std::size_t cells = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (cells > (std::size_t{1} << 24) / n) throw CapExceeded(std::size_t{1} << 24);
    cells *= n;
  }

  std::vector<TermFunction> atoms;
  for (std::size_t i = 0; i < nvars; ++i) {
    TermFunction t{std::vector<Elem>(cells), Formula::var(i), 1};
    std::size_t stride = 1;
    for (std::size_t j = i + 1; j < nvars; ++j) stride *= n;
    for (std::size_t c = 0; c < cells; ++c) t.table[c] = static_cast<Elem>((c / stride) % n);
    atoms.push_back(std::move(t));
  }
  atoms.push_back({std::vector<Elem>(cells, h.bot()), Formula::bot(), 1});
  atoms.push_back({std::vector<Elem>(cells, h.top()), Formula::top(), 1});

  std::vector<TermFunction> prev;
  std::unordered_map<std::vector<Elem>, std::size_t, TableHash> index;
  // Atoms start every level; coinciding atoms (0 = 1 in the trivial algebra)
  // share one entry.
  auto add_atoms = [&](std::vector<TermFunction>& into) {
    for (const auto& a : atoms) {
      auto [it, inserted] = index.try_emplace(a.table, into.size());
      if (inserted)
        into.push_back(a);
      else
        into[it->second].multiplicity = sat_add(into[it->second].multiplicity, 1);
    }
  };
  add_atoms(prev);

  std::vector<Elem> buf(cells);
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<TermFunction> next;
    index.clear();
    add_atoms(next);
    for (Op op : kConnectives) {
      for (const auto& f : prev) {
        for (const auto& g : prev) {
          for (std::size_t c = 0; c < cells; ++c) {
            Elem x = f.table[c], y = g.table[c];
            buf[c] = op == Op::Meet ? h.meet(x, y) : op == Op::Join ? h.join(x, y) : h.impl(x, y);
          }
          std::uint64_t mult = sat_mul(f.multiplicity, g.multiplicity);
          auto it = index.find(buf);
          if (it != index.end()) {
            next[it->second].multiplicity = sat_add(next[it->second].multiplicity, mult);
          } else {
            index.emplace(buf, next.size());
            next.push_back({buf, Formula::binary(op, f.representative, g.representative), mult});
          }
        }
      }
    }
    prev = std::move(next);
  }
  return prev;
}

IdentityResult holds_identity(const Algebra& h, const Formula& lhs, const Formula& rhs,
                              std::optional<std::size_t> arity) {
  std::size_t k = std::max(lhs.arity(), rhs.arity());
  if (arity) {
    if (*arity < k)
      throw ArityMismatch("identity needs " + std::to_string(k) + " variables, got " +
                          std::to_string(*arity));
    k = *arity;
  }
  const std::size_t n = h.size();
  std::vector<Elem> v(k, 0);
  while (true) {
    if (eval(h, lhs, v) != eval(h, rhs, v)) return {false, v};
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
      if (i == 0) return {true, {}};
    }
    if (k == 0) return {true, {}};
  }
}

std::optional<Schema> schema_from_string(const std::string& s) {
  if (s == "maintool") return Schema::Maintool;
  if (s == "eqlemma") return Schema::Eqlemma;
  if (s == "eqD") return Schema::EqD;
  if (s == "congruence") return Schema::Congruence;
  return std::nullopt;
}

std::string to_string(Schema s) {
  switch (s) {
    case Schema::Maintool:
      return "maintool";
    case Schema::Eqlemma:
      return "eqlemma";
    case Schema::EqD:
      return "eqD";
    case Schema::Congruence:
      return "congruence";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxReportedViolations = 16;

std::string describe(const Algebra& h, std::initializer_list<std::pair<const char*, Elem>> kv) {
  std::ostringstream os;
  bool first = true;
  for (auto [k, v] : kv) {
    os << (first ? "" : ", ") << k << "=" << h.name(v);
    first = false;
  }
  return os.str();
}

std::string describe_params(const Algebra& h, std::size_t idx, std::size_t count) {
  std::vector<Elem> params(count);
  for (std::size_t i = count; i > 0; --i) {
    params[i - 1] = static_cast<Elem>(idx % h.size());
    idx /= h.size();
  }
  std::string s;
  for (std::size_t i = 0; i < count; ++i)
    s += ", p" + std::to_string(i + 1) + "=" + h.name(params[i]);
  return s;
}

}  // namespace

SchemaReport check_schema(Schema schema, const Algebra& h, SchemaBounds bounds,
                          const std::string& algebra_label) {
  if (schema == Schema::Maintool || schema == Schema::Congruence) {
    if (bounds.nvars == 0) throw ArityMismatch("schema quantifies over phi(p0, ...): nvars >= 1");
    auto fns = term_functions(h, bounds.nvars, bounds.depth);
    return check_schema(schema, h, bounds, fns, algebra_label);
  }
  return check_schema(schema, h, bounds, {}, algebra_label);
}

SchemaReport check_schema(Schema schema, const Algebra& h, SchemaBounds bounds,
                          std::span<const TermFunction> functions,
                          const std::string& algebra_label) {
  SchemaReport rep;
  rep.schema = to_string(schema);
  rep.algebra = algebra_label;
  rep.bound = bounds;
  const std::size_t n = h.size();
  auto violate = [&](std::string msg) {
    if (rep.violations.size() < kMaxReportedViolations) rep.violations.push_back(std::move(msg));
  };

  if (schema == Schema::Eqlemma || schema == Schema::EqD) {
    for (Elem x = 0; x < n; ++x)
      for (Elem hh = 0; hh < n; ++hh)
        for (Elem a = 0; a < n; ++a) {
          ++rep.instances;
          Elem ha_h = h.impl(h.impl(hh, a), hh);  // (h->a)->h
          if (schema == Schema::Eqlemma) {
            Elem lhs = h.impl(x, ha_h);
            Elem xh = h.impl(x, hh);
            Elem rhs = h.impl(h.impl(xh, a), xh);
            if (lhs != rhs) violate("x->((h->a)->h) != ((x->h)->a)->(x->h) at " +
                                    describe(h, {{"x", x}, {"h", hh}, {"a", a}}));
          } else {
            Elem d = h.impl(x, hh);
            bool dense = h.leq(a, d) && h.impl(d, a) == a;
            if (dense != h.leq(x, ha_h))
              violate("(x->h) dense over a disagrees with x <= (h->a)->h at " +
                      describe(h, {{"x", x}, {"h", hh}, {"a", a}}));
          }
        }
    return rep;
  }

  if (bounds.nvars == 0) throw ArityMismatch("schema quantifies over phi(p0, ...): nvars >= 1");
  std::size_t params = 1;  // number of parameter tuples (p1..p{nvars-1})
  for (std::size_t i = 1; i < bounds.nvars; ++i) params *= n;
  rep.term_functions = functions.size();
  for (const auto& tf : functions) rep.formulas = sat_add(rep.formulas, tf.multiplicity);

  for (const auto& tf : functions) {
    const auto& t = tf.table;
    if (schema == Schema::Maintool) {
      // h & x = h & x'  implies  h & phi(x, ps) = h & phi(x', ps)
      for (Elem hh = 0; hh < n; ++hh) {
        std::vector<Elem> rep_of(n);
        for (Elem x = 0; x < n; ++x) {
          rep_of[x] = x;
          for (Elem y = 0; y < x; ++y)
            if (h.meet(hh, y) == h.meet(hh, x)) {
              rep_of[x] = y;
              break;
            }
        }
        for (Elem x = 0; x < n; ++x) {
          rep.instances += params;
          Elem r = rep_of[x];
          if (r == x) continue;
          for (std::size_t p = 0; p < params; ++p)
            if (h.meet(hh, t[x * params + p]) != h.meet(hh, t[r * params + p]))
              violate("phi=" + tf.representative.to_string() + ": " +
                      describe(h, {{"h", hh}, {"x", x}, {"x'", r}}) +
                      describe_params(h, p, bounds.nvars - 1));
        }
      }
    } else {
      // (x <-> x') <= (phi(x, ps) <-> phi(x', ps))
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          Elem e = h.biimpl(x, y);
          rep.instances += params;
          for (std::size_t p = 0; p < params; ++p)
            if (!h.leq(e, h.biimpl(t[x * params + p], t[y * params + p])))
              violate("phi=" + tf.representative.to_string() + ": " +
                      describe(h, {{"x", x}, {"x'", y}}) + describe_params(h, p, bounds.nvars - 1));
        }
    }
  }
  return rep;
}

}  // namespace kmforge
