#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmforge/omega.hpp"

namespace kmforge::omega {

struct CheckGroup {
  std::string name;
  std::uint64_t instances = 0;
  std::vector<std::string> violations;  // first few only
  std::uint64_t violation_count = 0;
  bool passed() const { return violation_count == 0; }
};

struct OmegaReport {
  std::size_t depth = 0;
  std::vector<OmegaElement> constants;  // p1.. in the enumerated terms; p0 is ι
  std::uint64_t formulas = 0;
  std::size_t distinct_maps = 0;
  std::uint64_t non_principal_bound = 0;
  // non-principal, constants-injective, iota-least, iota-remark, tail-kind
  std::vector<CheckGroup> groups;
  bool passed() const;
};

inline std::vector<OmegaElement> default_pool() {
  return {OmegaElement::zero(), OmegaElement::one(), OmegaElement::inverse(2),
          OmegaElement::inverse(3), OmegaElement::inverse(5)};
}

/// Distinct values of every term of depth <= depth over ι and the constants.
std::vector<PiecewiseMap> sample_maps(std::size_t depth, const std::vector<OmegaElement>& constants);

/// Samples H[ι] over the chain by every term φ(ι, c1..ck) of depth <= depth
/// (constants from the default pool plus `extra`) and checks the one-step
/// theorem's parts on the sample. Violations are report content.
OmegaReport verify_onestep_omega(std::size_t depth, const std::vector<OmegaElement>& extra = {});

struct RemarkReport {
  std::uint64_t n0 = 0;
  PiecewiseMap delta0;        // n -> 1/(n + n0)
  bool impl_fixed = false;    // ι -> δ0 = δ0
  bool below_constant = false;  // δ0 <= constant 1/n0
  OmegaElement collapsed_low, collapsed_high;  // identified constants
  bool injective = true;      // composite on constants after admitting δ0
};

/// Admits δ0 = Shift(n0) as a dense generator and shows the constant 1/n0
/// joins the class of 1.
RemarkReport remark_counterexample(std::uint64_t n0);

}  // namespace kmforge::omega
