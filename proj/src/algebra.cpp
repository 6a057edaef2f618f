#include "kmforge/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "kmforge/errors.hpp"

namespace kmforge {

namespace {

bool le(const CandidateTables& t, Elem x, Elem y) { return t.leq[x * t.n + y] != 0; }

// Least element of `cands` under the order, if one exists.
Elem least_of(const CandidateTables& t, const std::vector<Elem>& cands) {
  for (Elem c : cands) {
    bool least = std::all_of(cands.begin(), cands.end(), [&](Elem d) { return le(t, c, d); });
    if (least) return c;
  }
  return kNoElem;
}

Elem greatest_of(const CandidateTables& t, const std::vector<Elem>& cands) {
  for (Elem c : cands) {
    bool greatest = std::all_of(cands.begin(), cands.end(), [&](Elem d) { return le(t, d, c); });
    if (greatest) return c;
  }
  return kNoElem;
}

std::string tuple_names(const CandidateTables& t, const std::vector<Elem>& ev) {
  std::string s = "(";
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i) s += ",";
    s += ev[i] < t.names.size() ? t.names[ev[i]] : std::to_string(ev[i]);
  }
  return s + ")";
}

}  // namespace

void complete_from_order(CandidateTables& t) {
  const std::size_t n = t.n;
  t.meet.assign(n * n, kNoElem);
  t.join.assign(n * n, kNoElem);
  t.impl.assign(n * n, kNoElem);
  std::vector<Elem> all(n);
  for (Elem i = 0; i < n; ++i) all[i] = i;
  t.bot = least_of(t, all);
  t.top = greatest_of(t, all);
  std::vector<Elem> cands;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      cands.clear();
      for (Elem z = 0; z < n; ++z)
        if (le(t, z, x) && le(t, z, y)) cands.push_back(z);
      t.meet[x * n + y] = greatest_of(t, cands);
      cands.clear();
      for (Elem z = 0; z < n; ++z)
        if (le(t, x, z) && le(t, y, z)) cands.push_back(z);
      t.join[x * n + y] = least_of(t, cands);
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      // join of {z : z /\ x <= y}
      Elem acc = t.bot;
      bool defined = acc != kNoElem;
      for (Elem z = 0; z < n && defined; ++z) {
        Elem m = t.meet[z * n + x];
        if (m == kNoElem) {
          defined = false;
        } else if (le(t, m, y)) {
          acc = t.join[acc * n + z];
          defined = acc != kNoElem;
        }
      }
      t.impl[x * n + y] = defined ? acc : kNoElem;
    }
  }
}

bool ValidationReport::failed(const std::string& group) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const ValidationFailure& f) { return f.group == group; });
}

std::string ValidationReport::to_string(const CandidateTables& t) const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (const auto& f : failures)
    os << f.group << ": " << f.message << " at " << tuple_names(t, f.evidence) << "\n";
  return os.str();
}

ValidationReport validate(const CandidateTables& t) {
  ValidationReport rep;
  const std::size_t n = t.n;
  auto fail = [&](std::string group, std::string msg, std::vector<Elem> ev) {
    rep.failures.push_back({std::move(group), std::move(msg), std::move(ev)});
  };
  if (n == 0) {
    fail("order", "empty carrier", {});
    return rep;
  }
  if (t.leq.size() != n * n || t.meet.size() != n * n || t.join.size() != n * n ||
      t.impl.size() != n * n) {
    fail("order", "tables are not n x n", {});
    return rep;
  }

  // order
  [&] {
    for (Elem x = 0; x < n; ++x)
      if (!le(t, x, x)) return fail("order", "not reflexive", {x});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (x != y && le(t, x, y) && le(t, y, x)) return fail("order", "not antisymmetric", {x, y});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (le(t, x, y) && le(t, y, z) && !le(t, x, z))
            return fail("order", "not transitive", {x, y, z});
  }();
  if (rep.failed("order")) return rep;

  // bounds
  [&] {
    if (t.bot >= n) return fail("bounds", "no least element", {});
    if (t.top >= n) return fail("bounds", "no greatest element", {});
    for (Elem x = 0; x < n; ++x)
      if (!le(t, t.bot, x) || !le(t, x, t.top)) return fail("bounds", "bot/top not extremal", {x});
  }();

  // lattice: meet/join must be glb/lub
  [&] {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem m = t.meet[x * n + y], j = t.join[x * n + y];
        if (m >= n) return fail("lattice", "meet undefined", {x, y});
        if (j >= n) return fail("lattice", "join undefined", {x, y});
        if (!le(t, m, x) || !le(t, m, y)) return fail("lattice", "meet is not a lower bound", {x, y});
        if (!le(t, x, j) || !le(t, y, j)) return fail("lattice", "join is not an upper bound", {x, y});
        for (Elem z = 0; z < n; ++z) {
          if (le(t, z, x) && le(t, z, y) && !le(t, z, m))
            return fail("lattice", "meet is not greatest", {x, y, z});
          if (le(t, x, z) && le(t, y, z) && !le(t, j, z))
            return fail("lattice", "join is not least", {x, y, z});
        }
      }
    }
  }();
  if (rep.failed("lattice") || rep.failed("bounds")) return rep;

  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          Elem lhs = t.meet[x * n + t.join[y * n + z]];
          Elem rhs = t.join[t.meet[x * n + y] * n + t.meet[x * n + z]];
          if (lhs != rhs) return fail("distributivity", "x&(y|z) != (x&y)|(x&z)", {x, y, z});
        }
  }();

  [&] {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (t.impl[x * n + y] >= n) return fail("residuation", "impl undefined", {x, y});
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          bool lhs = le(t, t.meet[x * n + y], z);
          bool rhs = le(t, x, t.impl[y * n + z]);
          if (lhs != rhs) return fail("residuation", "x&y <= z iff x <= (y->z) fails", {x, y, z});
        }
    for (Elem x = 0; x < n; ++x) {
      if (t.impl[x * n + x] != t.top) return fail("residuation", "x->x != 1", {x});
      if (t.impl[t.top * n + x] != x) return fail("residuation", "1->x != x", {x});
    }
  }();
  return rep;
}

Algebra Algebra::from_tables(const CandidateTables& t) {
  ValidationReport rep = validate(t);
  if (!rep.ok()) throw ValidationError(rep.to_string(t));
  std::vector<std::string> names = t.names;
  names.resize(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    if (names[i].empty()) names[i] = std::to_string(i);
  return from_trusted(std::move(names), t.meet, t.join, t.impl, t.bot, t.top);
}

Algebra Algebra::from_order(std::vector<std::string> names, std::vector<std::uint8_t> leq) {
  CandidateTables t;
  t.n = names.size();
  t.names = std::move(names);
  t.leq = std::move(leq);
  if (t.leq.size() != t.n * t.n) throw FormatError("order table is not n x n");
  complete_from_order(t);
  return from_tables(t);
}

Algebra Algebra::from_trusted(std::vector<std::string> names, std::vector<Elem> meet,
                              std::vector<Elem> join, std::vector<Elem> impl, Elem bot, Elem top) {
  Algebra a;
  a.n_ = names.size();
  a.names_ = std::move(names);
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.impl_ = std::move(impl);
  a.bot_ = bot;
  a.top_ = top;
  return a;
}

std::optional<Elem> Algebra::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

Elem Algebra::parse_element(const std::string& text) const {
  if (auto e = find(text)) return *e;
  Elem v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec == std::errc() && ptr == text.data() + text.size() && v < n_) return v;
  throw InputError("unknown element '" + text + "'");
}

CandidateTables Algebra::tables() const {
  CandidateTables t;
  t.n = n_;
  t.names = names_;
  t.leq.resize(n_ * n_);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) t.leq[x * n_ + y] = leq(x, y) ? 1 : 0;
  t.meet = meet_;
  t.join = join_;
  t.impl = impl_;
  t.bot = bot_;
  t.top = top_;
  return t;
}

std::vector<std::pair<Elem, Elem>> Algebra::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) {
      if (!lt(x, y)) continue;
      bool cover = true;
      for (Elem z = 0; z < n_ && cover; ++z)
        if (lt(x, z) && lt(z, y)) cover = false;
      if (cover) out.emplace_back(x, y);
    }
  return out;
}

std::vector<std::size_t> Algebra::heights() const {
  // Elements sorted by number of elements below them form a linear extension.
  std::vector<std::size_t> below(n_, 0);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y)
      if (leq(y, x)) ++below[x];
  std::vector<Elem> order(n_);
  for (Elem i = 0; i < n_; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return below[a] < below[b]; });
  std::vector<std::size_t> h(n_, 0);
  for (Elem x : order)
    for (Elem y : order)
      if (lt(y, x)) h[x] = std::max(h[x], h[y] + 1);
  return h;
}

Algebra chain(std::size_t n) {
  if (n == 0) throw InputError("a chain needs at least one element");
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      names[i] = "0";
    else if (i == n - 1)
      names[i] = "1";
    else if (n == 3)
      names[i] = "m";
    else
      names[i] = "c" + std::to_string(i);
  }
  if (n == 1) names[0] = "0";
  std::vector<Elem> meet(n * n), join(n * n), impl(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      meet[x * n + y] = std::min(x, y);
      join[x * n + y] = std::max(x, y);
      impl[x * n + y] = x <= y ? static_cast<Elem>(n - 1) : y;
    }
  return Algebra::from_trusted(std::move(names), std::move(meet), std::move(join), std::move(impl),
                               0, static_cast<Elem>(n - 1));
}

Algebra trivial_algebra() { return chain(1); }

}  // namespace kmforge
