#include "kmforge/omega_verify.hpp"

#include <unordered_set>

#include "kmforge/terms.hpp"

namespace kmforge::omega {

namespace {

constexpr std::size_t kShownViolations = 8;

void record(CheckGroup& g, bool ok, const std::string& what) {
  ++g.instances;
  if (ok) return;
  if (g.violations.size() < kShownViolations) g.violations.push_back(what);
  ++g.violation_count;
}

// Distinct values of all terms of depth <= depth over `atoms`, level by level.
std::vector<PiecewiseMap> term_values(const std::vector<PiecewiseMap>& atoms, std::size_t depth) {
  std::vector<PiecewiseMap> level;
  std::unordered_set<PiecewiseMap> seen;
  auto add = [&](std::vector<PiecewiseMap>& into, PiecewiseMap v) {
    if (seen.insert(v).second) into.push_back(std::move(v));
  };
  for (const auto& a : atoms) add(level, a);
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<PiecewiseMap> next = level;
    for (const auto& x : level)
      for (const auto& y : level) {
        add(next, pw_meet(x, y));
        add(next, pw_join(x, y));
        add(next, pw_impl(x, y));
      }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<PiecewiseMap> sample_maps(std::size_t depth, const std::vector<OmegaElement>& constants) {
  std::vector<PiecewiseMap> atoms{PiecewiseMap::iota(), MapOps{}.bot(), MapOps{}.top()};
  for (auto c : constants) atoms.push_back(PiecewiseMap::constant(c));
  return term_values(atoms, depth);
}

bool OmegaReport::passed() const {
  for (const auto& g : groups)
    if (!g.passed()) return false;
  return true;
}

OmegaReport verify_onestep_omega(std::size_t depth, const std::vector<OmegaElement>& extra) {
  OmegaReport r;
  r.depth = depth;
  r.constants = default_pool();
  for (auto c : extra)
    if (std::find(r.constants.begin(), r.constants.end(), c) == r.constants.end())
      r.constants.push_back(c);

  const PiecewiseMap iota = PiecewiseMap::iota();
  r.formulas = count_terms(1 + r.constants.size(), depth);
  auto values = sample_maps(depth, r.constants);
  r.distinct_maps = values.size();

  CheckGroup principal, injective, least, remark, tails;
  principal.name = "non-principal";
  injective.name = "constants-injective";
  least.name = "iota-least";
  remark.name = "iota-remark";
  tails.name = "tail-kind";

  // (i) every candidate minimum 1/m of D_0 has 1/(m+1) strictly below it.
  std::uint64_t bound = 64;
  for (auto c : r.constants)
    if (!c.is_zero()) bound = std::max(bound, c.idx + 2);
  r.non_principal_bound = bound;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    OmegaElement cand = OmegaElement::inverse(m), below = OmegaElement::inverse(m + 1);
    record(principal, dense_over_zero(below) && leq(below, cand) && !(below == cand),
           "no dense element below " + cand.to_string());
  }

  // (ii) distinct constants stay distinct in the quotient.
  std::vector<OmegaElement> consts = r.constants;
  for (std::uint64_t n = 1; n <= 16; ++n)
    if (std::find(consts.begin(), consts.end(), OmegaElement::inverse(n)) == consts.end())
      consts.push_back(OmegaElement::inverse(n));
  for (std::size_t i = 0; i < consts.size(); ++i)
    for (std::size_t j = i + 1; j < consts.size(); ++j)
      record(injective,
             !quotient_equiv(PiecewiseMap::constant(consts[i]), PiecewiseMap::constant(consts[j])),
             consts[i].to_string() + " ~ " + consts[j].to_string());

  for (const auto& eta : values) {
    // (iii) [ι] <= [η] for dense η.
    if (dense_over_zero(eta))
      record(least, f0_member(pw_impl(iota, eta)).has_value(),
             "iota -> " + eta.to_string() + " not in F_0");
    // (iv) ι -> η = ι -> η(1).
    record(remark, pw_impl(iota, eta) == pw_impl(iota, PiecewiseMap::constant(eta.apply(1))),
           eta.to_string());
    const Piece& t = eta.tail();
    record(tails, !t.is_shift || t.shift == 0, eta.to_string() + " has tail shift");
  }

  r.groups = {principal, injective, least, remark, tails};
  return r;
}

RemarkReport remark_counterexample(std::uint64_t n0) {
  RemarkReport r;
  r.n0 = n0;
  r.delta0 = PiecewiseMap::shift(static_cast<std::int64_t>(n0));
  const PiecewiseMap iota = PiecewiseMap::iota();
  const PiecewiseMap low = PiecewiseMap::constant(OmegaElement::inverse(n0));
  const PiecewiseMap one = PiecewiseMap::constant(OmegaElement::one());
  r.impl_fixed = pw_impl(iota, r.delta0) == r.delta0;
  r.below_constant = pw_leq(r.delta0, low);
  // ι -> δ0 = δ0 generates the enlarged filter; it lies below low <-> 1 = low.
  const PiecewiseMap bi = pw_meet(pw_impl(low, one), pw_impl(one, low));
  if (r.impl_fixed && pw_leq(pw_impl(iota, r.delta0), bi)) {
    r.collapsed_low = OmegaElement::inverse(n0);
    r.collapsed_high = OmegaElement::one();
    r.injective = r.collapsed_low == r.collapsed_high;
  }
  return r;
}

}  // namespace kmforge::omega
