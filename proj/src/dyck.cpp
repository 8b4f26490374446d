#include "permlab/dyck.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"

namespace permlab {

namespace {

// Index of the first step breaking the Dyck conditions, or npos when valid.
// An unbalanced word reports its length.
std::size_t first_violation(std::span<const Step> steps) {
  long height = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    height += steps[i] == Step::up ? 1 : -1;
    if (height < 0) return i;
  }
  return height == 0 ? std::string::npos : steps.size();
}

void append(std::vector<Step>& out, std::span<const Step> part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

bool is_dyck(std::span<const Step> steps) { return first_violation(steps) == std::string::npos; }

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  const auto bad = first_violation(steps_);
  if (bad != std::string::npos) {
    throw DomainError(bad == steps_.size()
                          ? "not a Dyck path: unbalanced word of length " + std::to_string(bad)
                          : "not a Dyck path: height drops below zero at position " +
                                std::to_string(bad + 1));
  }
}

DyckPath DyckPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(word[i])));
    if (c == 'u' || c == '(') {
      steps.push_back(Step::up);
    } else if (c == 'd' || c == ')') {
      steps.push_back(Step::down);
    } else {
      throw DomainError("invalid Dyck step '" + std::string(1, word[i]) + "' at position " +
                        std::to_string(i + 1));
    }
  }
  return DyckPath(std::move(steps));
}

std::vector<DyckPath> DyckPath::all(std::size_t n) {
  std::vector<DyckPath> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, std::size_t ups, std::size_t downs) -> void {
    if (ups == n && downs == n) {
      out.emplace_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back(Step::up);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(Step::down);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::size_t DyckPath::count(Step s, std::size_t from, std::size_t to) const {
  return static_cast<std::size_t>(std::count(steps_.begin() + static_cast<std::ptrdiff_t>(from),
                                             steps_.begin() + static_cast<std::ptrdiff_t>(to), s));
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += static_cast<char>(s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const DyckPath& d) { return os << d.to_string(); }

std::string_view tunnel_side_name(TunnelSide s) {
  switch (s) {
    case TunnelSide::left: return "left";
    case TunnelSide::centered: return "centered";
    case TunnelSide::right: return "right";
  }
  return "?";
}

Tunnel::Parts Tunnel::decompose(const DyckPath& d) const {
  const auto& s = d.steps();
  Parts p;
  p.a.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(up_step));
  p.b.assign(s.begin() + static_cast<std::ptrdiff_t>(up_step + 1),
             s.begin() + static_cast<std::ptrdiff_t>(down_step));
  p.c.assign(s.begin() + static_cast<std::ptrdiff_t>(down_step + 1), s.end());
  return p;
}

std::vector<Tunnel> tunnels(const DyckPath& d) {
  const auto n = d.semilength();
  std::vector<Tunnel> out(n);
  std::vector<std::size_t> open;  // up ordinals awaiting their down-step
  std::vector<std::size_t> up_at(n + 1);
  std::size_t ups = 0, downs = 0;
  const auto& steps = d.steps();
  for (std::size_t x = 0; x < steps.size(); ++x) {
    if (steps[x] == Step::up) {
      ++ups;
      up_at[ups] = x;
      open.push_back(ups);
      continue;
    }
    ++downs;
    const auto u = open.back();
    open.pop_back();
    Tunnel& t = out[u - 1];
    t.up_index = u;
    t.down_index = downs;
    t.up_step = up_at[u];
    t.down_step = x;
    // Segment runs from x = up_step to x = down_step + 1.
    t.midpoint_x2 = up_at[u] + x + 1;
    t.side = t.midpoint_x2 < 2 * n    ? TunnelSide::left
             : t.midpoint_x2 == 2 * n ? TunnelSide::centered
                                      : TunnelSide::right;
  }
  return out;
}

TunnelCounts tunnel_counts(const DyckPath& d) {
  TunnelCounts c;
  for (const auto& t : tunnels(d)) {
    switch (t.side) {
      case TunnelSide::left: ++c.left; break;
      case TunnelSide::centered: ++c.centered; break;
      case TunnelSide::right: ++c.right; break;
    }
  }
  return c;
}

std::vector<CenteredSplit> centered_multitunnels(const DyckPath& d) {
  std::vector<CenteredSplit> out;
  const auto& s = d.steps();
  const auto len = s.size();
  for (std::size_t outer = 0; 2 * outer < len; ++outer) {
    std::span<const Step> a(s.data(), outer);
    std::span<const Step> b(s.data() + outer, len - 2 * outer);
    std::span<const Step> c(s.data() + len - outer, outer);
    if (!is_dyck(b)) continue;
    std::vector<Step> ac(a.begin(), a.end());
    append(ac, c);
    if (!is_dyck(ac)) continue;
    out.push_back({outer, {a.begin(), a.end()}, {b.begin(), b.end()}, {c.begin(), c.end()}});
  }
  return out;
}

std::pair<std::vector<Step>, std::vector<Step>> halves(const DyckPath& d) {
  const auto& s = d.steps();
  const auto n = static_cast<std::ptrdiff_t>(d.semilength());
  return {{s.begin(), s.begin() + n}, {s.begin() + n, s.end()}};
}

DyckPath odot(const DyckPath& d1, const DyckPath& d2) {
  auto [left, right] = halves(d1);
  std::vector<Step> out = std::move(left);
  append(out, d2.steps());
  append(out, right);
  return DyckPath(std::move(out));
}

Permutation phi_inv(const DyckPath& d) {
  const auto n = d.semilength();
  Word w(n);
  for (const auto& t : tunnels(d)) {
    // The i-th up-step carries the number n+1-i.
    w[n - t.up_index] = static_cast<int>(t.down_index);
  }
  return Permutation(std::move(w));
}

DyckPath phi(const Permutation& p) {
  static const Permutation p132{1, 3, 2};
  if (!avoids(p, p132)) throw DomainError("phi requires a 132-avoiding permutation");
  const auto n = p.size();
  // partner[j] = ordinal of the up-step whose tunnel closes at down-step j.
  std::vector<std::size_t> partner(n + 1);
  for (std::size_t u = 1; u <= n; ++u) partner[static_cast<std::size_t>(p(u))] = n + 1 - u;
  std::vector<Step> steps;
  steps.reserve(2 * n);
  std::size_t emitted = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    while (emitted < partner[j]) {
      steps.push_back(Step::up);
      ++emitted;
    }
    steps.push_back(Step::down);
  }
  DyckPath d(std::move(steps));
  if (phi_inv(d) != p) throw DomainError("phi: no Dyck path numbers to " + p.to_string());
  return d;
}

}  // namespace permlab
