#include "permlab/statistics.hpp"

#include <optional>
#include <sstream>
#include <string>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// Classifies the pair of positions i < j by the four arc inequalities.
std::optional<ArcKind> classify(std::size_t i, std::size_t j, int pi, int pj) {
  const int ii = static_cast<int>(i);
  const int jj = static_cast<int>(j);
  if (ii < jj && jj < pi && pi < pj) return ArcKind::upper_crossing;
  if (pi < pj && pj <= ii && ii < jj) return ArcKind::lower_crossing;
  if (ii < jj && jj < pj && pj < pi) return ArcKind::upper_nesting;
  if (pj < pi && pi <= ii && ii < jj) return ArcKind::lower_nesting;
  return std::nullopt;
}

bool is_crossing(ArcKind k) {
  return k == ArcKind::upper_crossing || k == ArcKind::lower_crossing;
}

}  // namespace

Stat parse_stat(std::string_view name) {
  if (name == "fp") return Stat::fp;
  if (name == "exc") return Stat::exc;
  if (name == "crs") return Stat::crs;
  if (name == "nes") return Stat::nes;
  if (name == "inv") return Stat::inv;
  if (name == "maj") return Stat::maj;
  throw UsageError("unknown statistic '" + std::string(name) +
                   "' (expected fp, exc, crs, nes, inv or maj)");
}

std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::fp: return "fp";
    case Stat::exc: return "exc";
    case Stat::crs: return "crs";
    case Stat::nes: return "nes";
    case Stat::inv: return "inv";
    case Stat::maj: return "maj";
  }
  return "?";
}

int stat_value(const Statistics& s, Stat which) {
  switch (which) {
    case Stat::fp: return s.fp;
    case Stat::exc: return s.exc;
    case Stat::crs: return s.crs;
    case Stat::nes: return s.nes;
    case Stat::inv: return s.inv;
    case Stat::maj: return s.maj;
  }
  return 0;
}

Statistics statistics(const Permutation& p) {
  Statistics s;
  const auto n = p.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const int v = p(i);
    const int ii = static_cast<int>(i);
    if (v == ii) ++s.fp;
    if (v > ii) ++s.exc;
    if (i < n && v > p(i + 1)) s.maj += ii;
    for (std::size_t j = i + 1; j <= n; ++j) {
      const int w = p(j);
      if (v > w) ++s.inv;
      if (auto kind = classify(i, j, v, w)) {
        if (is_crossing(*kind)) {
          ++s.crs;
        } else {
          ++s.nes;
        }
      }
    }
  }
  return s;
}

int crossings(const Permutation& p) { return statistics(p).crs; }
int nestings(const Permutation& p) { return statistics(p).nes; }
int fixed_points(const Permutation& p) { return statistics(p).fp; }
int excedances(const Permutation& p) { return statistics(p).exc; }
int inversions(const Permutation& p) { return statistics(p).inv; }
int major_index(const Permutation& p) { return statistics(p).maj; }

std::string_view arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::upper_crossing: return "upper-crossing";
    case ArcKind::lower_crossing: return "lower-crossing";
    case ArcKind::upper_nesting: return "upper-nesting";
    case ArcKind::lower_nesting: return "lower-nesting";
  }
  return "?";
}

std::vector<ArcPair> arc_pairs(const Permutation& p) {
  std::vector<ArcPair> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    for (std::size_t j = i + 1; j <= p.size(); ++j) {
      if (auto kind = classify(i, j, p(i), p(j))) out.push_back({i, j, *kind});
    }
  }
  return out;
}

CrossingDelta crossing_delta(const Permutation& p, std::size_t a, int b) {
  if (b < 1 || static_cast<std::size_t>(b) > a || a > p.size() + 1) {
    std::ostringstream msg;
    msg << "crossing_delta requires 1 <= b <= a <= " << p.size() + 1 << ", got a=" << a
        << " b=" << b;
    throw DomainError(msg.str());
  }
  const Permutation inv = inverse(p);
  const int aa = static_cast<int>(a);
  CrossingDelta d;
  for (int i = b; i < aa; ++i) {
    const auto pos = static_cast<std::size_t>(i);
    const int image = p(pos);
    const int preimage = inv(pos);
    if (image < b) ++d.a1;
    // The entry at position a itself moves to a+1 and crosses the new arc.
    if (aa <= preimage) ++d.a2;
    if (preimage < i && i < image) ++d.a3;
    if (image < i && i < preimage) ++d.a4;
  }
  d.delta = d.a1 + d.a2 + d.a3 - d.a4;
  return d;
}

}  // namespace permlab
