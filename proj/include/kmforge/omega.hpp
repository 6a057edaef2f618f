#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace kmforge::omega {

inline constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
/// Normalisation expands the prefix before the last breakpoint pointwise.
inline constexpr std::uint64_t kMaxBreakpoint = 1u << 22;

/// The point 1/idx of the chain 0 < ... < 1/3 < 1/2 < 1; idx = kInf is 0.
struct OmegaElement {
  std::uint64_t idx = 1;

  static OmegaElement one() { return {1}; }
  static OmegaElement zero() { return {kInf}; }
  static OmegaElement inverse(std::uint64_t n) { return {n}; }
  bool is_zero() const { return idx == kInf; }
  bool operator==(const OmegaElement&) const = default;
  std::string to_string() const;
  /// "0", "1" or "1/n".
  static OmegaElement parse(const std::string& text);
};

inline bool leq(OmegaElement x, OmegaElement y) { return x.idx >= y.idx; }
inline OmegaElement meet(OmegaElement x, OmegaElement y) { return {std::max(x.idx, y.idx)}; }
inline OmegaElement join(OmegaElement x, OmegaElement y) { return {std::min(x.idx, y.idx)}; }
inline OmegaElement impl(OmegaElement x, OmegaElement y) {
  return x.idx >= y.idx ? OmegaElement::one() : y;
}
inline bool dense_over_zero(OmegaElement x) { return !x.is_zero(); }

/// One piece of a map n -> 1/idx(n) on n >= start: a constant idx, or
/// idx = n + shift.
struct Piece {
  std::uint64_t start = 1;
  bool is_shift = false;
  std::uint64_t constant = 1;  // when !is_shift; kInf allowed
  std::int64_t shift = 0;      // when is_shift

  std::uint64_t idx_at(std::uint64_t n) const;
  bool operator==(const Piece&) const = default;
};

/// A map from the dense points {1/n : n >= 1} to the chain, finitely many
/// pieces, the last one extending to infinity. Always held in canonical
/// form, so == decides equality of maps.
class PiecewiseMap {
 public:
  static PiecewiseMap constant(OmegaElement c);
  static PiecewiseMap shift(std::int64_t c);  // idx(n) = n + c; DomainError if 1 + c < 1
  static PiecewiseMap iota() { return shift(0); }
  /// Normalises arbitrary pieces; DomainError on a shift dropping below 1.
  static PiecewiseMap from_pieces(std::vector<Piece> pieces);

  OmegaElement apply(std::uint64_t n) const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Piece& tail() const { return pieces_.back(); }
  bool operator==(const PiecewiseMap&) const = default;
  std::string to_string() const;

 private:
  std::vector<Piece> pieces_;
};

PiecewiseMap pw_meet(const PiecewiseMap& f, const PiecewiseMap& g);
PiecewiseMap pw_join(const PiecewiseMap& f, const PiecewiseMap& g);
PiecewiseMap pw_impl(const PiecewiseMap& f, const PiecewiseMap& g);
inline OmegaElement pw_apply(const PiecewiseMap& f, std::uint64_t n) { return f.apply(n); }
bool pw_leq(const PiecewiseMap& f, const PiecewiseMap& g);

bool dense_over_zero(const PiecewiseMap& f);

/// Membership in the filter generated by ι -> d, d > 0: f is eventually 1
/// and bounded away from 0. Returns the witness m when a member.
std::optional<std::uint64_t> f0_member(const PiecewiseMap& f);

bool quotient_equiv(const PiecewiseMap& f, const PiecewiseMap& g);

/// Operation oracle for term evaluation over maps.
struct MapOps {
  using value_type = PiecewiseMap;
  PiecewiseMap meet(const PiecewiseMap& x, const PiecewiseMap& y) const { return pw_meet(x, y); }
  PiecewiseMap join(const PiecewiseMap& x, const PiecewiseMap& y) const { return pw_join(x, y); }
  PiecewiseMap impl(const PiecewiseMap& x, const PiecewiseMap& y) const { return pw_impl(x, y); }
  PiecewiseMap bot() const { return PiecewiseMap::constant(OmegaElement::zero()); }
  PiecewiseMap top() const { return PiecewiseMap::constant(OmegaElement::one()); }
};

}  // namespace kmforge::omega

template <>
struct std::hash<kmforge::omega::PiecewiseMap> {
  std::size_t operator()(const kmforge::omega::PiecewiseMap& f) const noexcept;
};
