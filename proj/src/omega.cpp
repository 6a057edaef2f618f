#include "kmforge/omega.hpp"

#include <charconv>

#include "kmforge/errors.hpp"

namespace kmforge::omega {

std::string OmegaElement::to_string() const {
  if (idx == kInf) return "0";
  if (idx == 1) return "1";
  return "1/" + std::to_string(idx);
}

OmegaElement OmegaElement::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  std::uint64_t n = 0;
  if (text.rfind("1/", 0) == 0) {
    const char* b = text.data() + 2;
    const char* e = text.data() + text.size();
    auto [p, ec] = std::from_chars(b, e, n);
    if (ec == std::errc() && p == e && n >= 1) return inverse(n);
  }
  throw FormatError("not a chain element: '" + text + "' (expected 0, 1 or 1/n)");
}

std::uint64_t Piece::idx_at(std::uint64_t n) const {
  return is_shift ? static_cast<std::uint64_t>(static_cast<std::int64_t>(n) + shift) : constant;
}

namespace {

// idx as slope * n + offset; kInf constants are kept apart.
struct Linear {
  bool infinite = false;
  std::int64_t slope = 0, offset = 0;
};

Linear linear(const Piece& p) {
  if (p.is_shift) return {false, 1, p.shift};
  if (p.constant == kInf) return {true, 0, 0};
  return {false, 0, static_cast<std::int64_t>(p.constant)};
}

// Also clears the field the piece kind does not use, so == is structural.
Piece at_start(Piece p, std::uint64_t start) {
  p.start = start;
  if (p.is_shift) {
    p.constant = 1;
  } else {
    p.shift = 0;
  }
  return p;
}

Piece const_piece(std::uint64_t start, std::uint64_t k) { return {start, false, k, 0}; }

// Greedy canonical decomposition of values v[1..count] (v[0] unused).
void decompose(const std::vector<std::uint64_t>& v, std::size_t count, std::vector<Piece>& out) {
  std::size_t i = 1;
  while (i <= count) {
    std::size_t j = i;
    if (i < count && v[i + 1] == v[i]) {
      while (j < count && v[j + 1] == v[i]) ++j;
      out.push_back(const_piece(i, v[i]));
    } else if (i < count && v[i] != kInf && v[i + 1] == v[i] + 1) {
      while (j < count && v[j + 1] == v[j] + 1) ++j;
      out.push_back({i, true, 1, static_cast<std::int64_t>(v[i]) - static_cast<std::int64_t>(i)});
    } else {
      out.push_back(const_piece(i, v[i]));
    }
    i = j + 1;
  }
}

template <class Choose>
PiecewiseMap combine(const PiecewiseMap& f, const PiecewiseMap& g, Choose choose) {
  std::vector<std::uint64_t> cuts;
  for (const auto& p : f.pieces()) cuts.push_back(p.start);
  for (const auto& p : g.pieces()) cuts.push_back(p.start);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto piece_at = [](const PiecewiseMap& m, std::uint64_t n) -> const Piece& {
    const auto& ps = m.pieces();
    std::size_t k = ps.size() - 1;
    while (ps[k].start > n) --k;
    return ps[k];
  };

  std::vector<Piece> out;
  for (std::size_t s = 0; s < cuts.size(); ++s) {
    const std::uint64_t lo = cuts[s];
    const std::uint64_t hi = s + 1 < cuts.size() ? cuts[s + 1] : kInf;
    const Piece& pf = piece_at(f, lo);
    const Piece& pg = piece_at(g, lo);
    // Split where the comparison of the two idx functions may change.
    std::vector<std::uint64_t> sub{lo};
    Linear lf = linear(pf), lg = linear(pg);
    if (!lf.infinite && !lg.infinite && lf.slope != lg.slope) {
      std::int64_t cross = (lg.offset - lf.offset) / (lf.slope - lg.slope);
      for (std::int64_t c : {cross, cross + 1})
        if (c > static_cast<std::int64_t>(lo) && static_cast<std::uint64_t>(c) < hi)
          sub.push_back(static_cast<std::uint64_t>(c));
    }
    for (std::uint64_t start : sub) out.push_back(choose(pf, pg, start));
  }
  return PiecewiseMap::from_pieces(std::move(out));
}

std::uint64_t max_idx_on(const Piece& p, std::uint64_t hi) {
  return p.is_shift ? p.idx_at(hi - 1) : p.constant;
}

}  // namespace

PiecewiseMap PiecewiseMap::constant(OmegaElement c) { return from_pieces({const_piece(1, c.idx)}); }

PiecewiseMap PiecewiseMap::shift(std::int64_t c) { return from_pieces({{1, true, 1, c}}); }

PiecewiseMap PiecewiseMap::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty() || pieces.front().start != 1)
    throw DomainError("piecewise map must start at n = 1");
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i && pieces[i].start <= pieces[i - 1].start)
      throw DomainError("piece starts must increase");
    const Piece& p = pieces[i];
    if (p.is_shift && static_cast<std::int64_t>(p.start) + p.shift < 1)
      throw DomainError("shift n" + std::to_string(p.shift) + " leaves the chain at n = " +
                        std::to_string(p.start));
    if (!p.is_shift && p.constant == 0) throw DomainError("idx 0 is not a chain element");
  }

  const Piece tail = pieces.back();
  const std::uint64_t last = tail.start;
  if (last > kMaxBreakpoint) throw CapExceeded(kMaxBreakpoint);
  std::vector<std::uint64_t> v(last, 0);
  std::size_t k = 0;
  for (std::uint64_t n = 1; n < last; ++n) {
    while (k + 1 < pieces.size() && pieces[k + 1].start <= n) ++k;
    v[n] = pieces[k].idx_at(n);
  }
  auto follows_tail = [&](std::uint64_t n) {
    if (tail.is_shift) return static_cast<std::int64_t>(n) + tail.shift >= 1 && v[n] == tail.idx_at(n);
    return v[n] == tail.constant;
  };
  std::uint64_t first = last;
  while (first > 1 && follows_tail(first - 1)) --first;

  PiecewiseMap m;
  decompose(v, first - 1, m.pieces_);
  m.pieces_.push_back(at_start(tail, first));
  return m;
}

OmegaElement PiecewiseMap::apply(std::uint64_t n) const {
  if (n == 0) throw DomainError("maps are defined on n >= 1");
  std::size_t k = pieces_.size() - 1;
  while (pieces_[k].start > n) --k;
  return {pieces_[k].idx_at(n)};
}

std::string PiecewiseMap::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (i) s += " | ";
    s += std::to_string(p.start);
    if (i + 1 < pieces_.size()) {
      if (pieces_[i + 1].start - 1 != p.start) s += ".." + std::to_string(pieces_[i + 1].start - 1);
    } else {
      s += "..";
    }
    s += " -> ";
    if (!p.is_shift) {
      s += OmegaElement{p.constant}.to_string();
    } else if (p.shift == 0) {
      s += "1/n";
    } else {
      s += "1/(n" + std::string(p.shift > 0 ? "+" : "-") +
           std::to_string(p.shift > 0 ? p.shift : -p.shift) + ")";
    }
  }
  return s + "]";
}

PiecewiseMap pw_meet(const PiecewiseMap& f, const PiecewiseMap& g) {
  return combine(f, g, [](const Piece& x, const Piece& y, std::uint64_t n) {
    return at_start(x.idx_at(n) >= y.idx_at(n) ? x : y, n);
  });
}

PiecewiseMap pw_join(const PiecewiseMap& f, const PiecewiseMap& g) {
  return combine(f, g, [](const Piece& x, const Piece& y, std::uint64_t n) {
    return at_start(x.idx_at(n) <= y.idx_at(n) ? x : y, n);
  });
}

PiecewiseMap pw_impl(const PiecewiseMap& f, const PiecewiseMap& g) {
  return combine(f, g, [](const Piece& x, const Piece& y, std::uint64_t n) {
    return x.idx_at(n) >= y.idx_at(n) ? const_piece(n, 1) : at_start(y, n);
  });
}

bool pw_leq(const PiecewiseMap& f, const PiecewiseMap& g) {
  return pw_impl(f, g) == PiecewiseMap::constant(OmegaElement::one());
}

bool dense_over_zero(const PiecewiseMap& f) {
  return std::none_of(f.pieces().begin(), f.pieces().end(),
                      [](const Piece& p) { return !p.is_shift && p.constant == kInf; });
}

std::optional<std::uint64_t> f0_member(const PiecewiseMap& f) {
  const Piece& t = f.tail();
  if (t.is_shift || t.constant != 1 || !dense_over_zero(f)) return std::nullopt;
  std::uint64_t m = t.start;
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) m = std::max(m, max_idx_on(ps[i], ps[i + 1].start));
  return m;
}

bool quotient_equiv(const PiecewiseMap& f, const PiecewiseMap& g) {
  return f0_member(pw_meet(pw_impl(f, g), pw_impl(g, f))).has_value();
}

}  // namespace kmforge::omega

std::size_t std::hash<kmforge::omega::PiecewiseMap>::operator()(
    const kmforge::omega::PiecewiseMap& f) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto& p : f.pieces()) {
    mix(p.start);
    mix(p.is_shift);
    mix(p.is_shift ? static_cast<std::uint64_t>(p.shift) : p.constant);
  }
  return static_cast<std::size_t>(h);
}
