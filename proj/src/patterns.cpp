#include "permlab/patterns.hpp"

#include <algorithm>
#include <string>

#include "permlab/errors.hpp"
#include "permlab/statistics.hpp"

namespace permlab {

namespace {

// Backtracking matcher over host positions. `chosen` holds 0-based host
// indices for pattern entries 0..depth-1; a candidate is accepted when its
// order relation to every chosen entry agrees with the pattern.
class Matcher {
 public:
  Matcher(std::span<const int> host, std::span<const int> pattern)
      : host_(host), pattern_(pattern), chosen_(pattern.size()) {}

  // Visits occurrences in lexicographic order; stops when visit returns false.
  template <typename Visit>
  bool run(Visit&& visit, std::size_t limit) {
    return extend(0, 0, limit, visit);
  }

  // Occurrences whose last entry sits at the final host index.
  bool any_ending_at_last() {
    const auto k = pattern_.size();
    if (k == 0) return true;
    if (k > host_.size()) return false;
    chosen_[k - 1] = host_.size() - 1;
    // Pattern entry k-1 is pinned; match the others strictly before it.
    return extend_pinned(0, 0);
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }

 private:
  bool consistent(std::size_t depth, std::size_t candidate) const {
    for (std::size_t s = 0; s < depth; ++s) {
      const bool host_less = host_[chosen_[s]] < host_[candidate];
      const bool pattern_less = pattern_[s] < pattern_[depth];
      if (host_less != pattern_less) return false;
    }
    return true;
  }

  template <typename Visit>
  bool extend(std::size_t depth, std::size_t from, std::size_t limit, Visit& visit) {
    const auto k = pattern_.size();
    if (depth == k) return visit(chosen_);
    for (std::size_t c = from; c + (k - depth) <= limit; ++c) {
      if (!consistent(depth, c)) continue;
      chosen_[depth] = c;
      if (!extend(depth + 1, c + 1, limit, visit)) return false;
    }
    return true;
  }

  bool extend_pinned(std::size_t depth, std::size_t from) {
    const auto k = pattern_.size();
    const auto last = host_.size() - 1;
    if (depth == k - 1) {
      return consistent_pinned(k - 1);
    }
    for (std::size_t c = from; c + (k - 1 - depth) <= last; ++c) {
      if (!consistent(depth, c)) continue;
      chosen_[depth] = c;
      if (extend_pinned(depth + 1, c + 1)) return true;
    }
    return false;
  }

  bool consistent_pinned(std::size_t depth) const { return consistent(depth, chosen_[depth]); }

  std::span<const int> host_;
  std::span<const int> pattern_;
  std::vector<std::size_t> chosen_;
};

Occurrence to_occurrence(const std::vector<std::size_t>& chosen) {
  Occurrence o(chosen.size());
  std::transform(chosen.begin(), chosen.end(), o.begin(), [](std::size_t c) { return c + 1; });
  return o;
}

bool prefix_ok(std::span<const int> prefix, std::span<const Permutation> patterns) {
  for (const auto& pattern : patterns) {
    Matcher m(prefix, pattern.values());
    if (m.any_ending_at_last()) return false;
  }
  return true;
}

void extend_avoiders(std::size_t n, Word& prefix, std::vector<bool>& used,
                     std::span<const Permutation> patterns,
                     const std::function<void(const Permutation&)>& visit) {
  if (prefix.size() == n) {
    visit(Permutation(prefix));
    return;
  }
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    if (used[v]) continue;
    prefix.push_back(v);
    if (prefix_ok(prefix, patterns)) {
      used[v] = true;
      extend_avoiders(n, prefix, used, patterns, visit);
      used[v] = false;
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Occurrence> occurrences(const Permutation& host, const Permutation& pattern) {
  std::vector<Occurrence> out;
  if (pattern.size() > host.size()) return out;
  Matcher m(host.values(), pattern.values());
  m.run(
      [&](const std::vector<std::size_t>& chosen) {
        out.push_back(to_occurrence(chosen));
        return true;
      },
      host.size());
  return out;
}

std::optional<Occurrence> smallest_occurrence(const Permutation& host,
                                              const Permutation& pattern) {
  if (pattern.size() > host.size()) return std::nullopt;
  std::optional<Occurrence> found;
  Matcher m(host.values(), pattern.values());
  m.run(
      [&](const std::vector<std::size_t>& chosen) {
        found = to_occurrence(chosen);
        return false;
      },
      host.size());
  return found;
}

bool contains(std::span<const int> word, const Permutation& pattern) {
  if (pattern.size() > word.size()) return false;
  bool hit = false;
  Matcher m(word, pattern.values());
  m.run(
      [&](const std::vector<std::size_t>&) {
        hit = true;
        return false;
      },
      word.size());
  return hit;
}

bool avoids(const Permutation& host, const Permutation& pattern) {
  return !contains(host.values(), pattern);
}

bool avoids_all(const Permutation& host, std::span<const Permutation> patterns) {
  return std::all_of(patterns.begin(), patterns.end(),
                     [&](const Permutation& t) { return avoids(host, t); });
}

std::vector<Permutation> parse_pattern_list(std::string_view text) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      if (end != text.size() || start != 0) {
        throw DomainError("empty entry in pattern list '" + std::string(text) + "'");
      }
    } else {
      out.push_back(Permutation::parse(item));
    }
    start = end + 1;
  }
  return out;
}

void for_each_avoider(std::size_t n, std::span<const Permutation> patterns,
                      const std::function<void(const Permutation&)>& visit) {
  if (n == 0) {
    // The empty permutation avoids every nonempty pattern.
    bool empty_pattern = std::any_of(patterns.begin(), patterns.end(),
                                     [](const Permutation& t) { return t.empty(); });
    if (!empty_pattern) visit(Permutation{});
    return;
  }
  for (int first = 1; first <= static_cast<int>(n); ++first) {
    for_each_avoider_with_first(n, first, patterns, visit);
  }
}

void for_each_avoider_with_first(std::size_t n, int first,
                                 std::span<const Permutation> patterns,
                                 const std::function<void(const Permutation&)>& visit) {
  if (first < 1 || static_cast<std::size_t>(first) > n) {
    throw DomainError("first entry out of range");
  }
  Word prefix{first};
  if (!prefix_ok(prefix, patterns)) return;
  std::vector<bool> used(n + 1, false);
  used[first] = true;
  extend_avoiders(n, prefix, used, patterns, visit);
}

std::vector<Permutation> enumerate_avoiders(std::size_t n,
                                            std::span<const Permutation> patterns) {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

AvoidanceClass avoidance_class(std::size_t n, std::vector<Permutation> patterns) {
  AvoidanceClass c;
  c.n = n;
  c.members = enumerate_avoiders(n, patterns);
  c.patterns = std::move(patterns);
  return c;
}

bool is_nonnesting(const Permutation& p) { return nestings(p) == 0; }
bool is_noncrossing(const Permutation& p) { return crossings(p) == 0; }

}  // namespace permlab
