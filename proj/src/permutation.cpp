#include "permlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "permlab/errors.hpp"
#include "permlab/patterns.hpp"

namespace permlab {

namespace {

const Permutation& pattern_132() {
  static const Permutation p{1, 3, 2};
  return p;
}

void require_avoids_132(const Permutation& p, const char* what) {
  if (!avoids(p, pattern_132())) {
    throw DomainError(std::string(what) + " must avoid 132: " + p.to_string());
  }
}

}  // namespace

Permutation::Permutation(Word values) : values_(std::move(values)) {
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      std::ostringstream msg;
      msg << "not a permutation of 1.." << n << ": offending entry " << v;
      throw DomainError(msg.str());
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(Word(values)) {}

Permutation Permutation::identity(std::size_t n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  Word w;
  const bool has_separator = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!has_separator) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw DomainError("invalid character in permutation: '" + std::string(1, c) + "'");
      }
      w.push_back(c - '0');
    }
    if (w.size() > 9) {
      throw DomainError("compact permutation form is limited to n <= 9; use separators");
    }
    return Permutation(std::move(w));
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw DomainError("invalid permutation text: '" + std::string(text) + "'");
    }
    w.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && text[i] != ' ' && text[i] != ',' && text[i] != '\t') {
      throw DomainError("invalid permutation text: '" + std::string(text) + "'");
    }
  }
  return Permutation(std::move(w));
}

std::size_t Permutation::position_of(int value) const {
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) throw DomainError("value out of range: " + std::to_string(value));
  return static_cast<std::size_t>(it - values_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::string Permutation::to_compact() const {
  std::string out;
  for (int v : values_) out += std::to_string(v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation reduce(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  Word ranks(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]]) {
      throw DomainError("reduce: duplicate entry " + std::to_string(word[order[r]]));
    }
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

Permutation reverse(const Permutation& p) {
  Word w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const int n1 = static_cast<int>(p.size()) + 1;
  Word w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[i] = n1 - p.word()[i];
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  Word w(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) w[p.word()[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(w));
}

Permutation reverse_complement(const Permutation& p) {
  const auto n = p.size();
  Word w(n);
  for (std::size_t i = 1; i <= n; ++i) w[n - i] = static_cast<int>(n) + 1 - p(i);
  return Permutation(std::move(w));
}

Permutation reverse_complement_inverse(const Permutation& p) {
  const auto n = p.size();
  Word w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    w[n - static_cast<std::size_t>(p(i))] = static_cast<int>(n + 1 - i);
  }
  return Permutation(std::move(w));
}

Word shift_add(std::span<const int> p, int a) {
  Word w(p.begin(), p.end());
  for (int& v : w) v += a;
  return w;
}

Word shift_from(std::span<const int> p, int a, int b) {
  Word w(p.begin(), p.end());
  for (int& v : w) {
    if (v >= a) v += b;
  }
  return w;
}

Permutation insert_at(const Permutation& p, std::size_t a, int b) {
  const auto m = p.size() + 1;
  if (a < 1 || a > m || b < 1 || static_cast<std::size_t>(b) > m) {
    std::ostringstream msg;
    msg << "insert_at: (" << a << "," << b << ") out of range for length " << p.size();
    throw DomainError(msg.str());
  }
  Word w = shift_from(p.values(), b, 1);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(a - 1), b);
  return Permutation(std::move(w));
}

Permutation delete_at(const Permutation& p, std::size_t a) {
  if (a < 1 || a > p.size()) {
    throw DomainError("delete_at: position " + std::to_string(a) + " out of range");
  }
  Word w = p.word();
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(a - 1));
  return reduce(w);
}

Permutation insert_block(const Permutation& p, std::size_t a, const Permutation& q) {
  if (a < 1 || a > p.size() + 1) {
    throw DomainError("insert_block: position " + std::to_string(a) + " out of range");
  }
  Permutation out = p;
  for (std::size_t t = 1; t <= q.size(); ++t) out = insert_at(out, a + t - 1, q(t));
  return out;
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  Word w = a.word();
  Word tail = shift_add(b.values(), static_cast<int>(a.size()));
  w.insert(w.end(), tail.begin(), tail.end());
  return Permutation(std::move(w));
}

std::vector<Permutation> sum_components(const Permutation& p) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  int running_max = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    running_max = std::max(running_max, p.word()[i]);
    if (static_cast<std::size_t>(running_max) == i + 1) {
      out.push_back(reduce(p.values().subspan(start, i + 1 - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<int> t_set(const Permutation& p) {
  const Permutation inv = inverse(p);
  std::vector<int> out;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const int ii = static_cast<int>(i);
    if (inv(i) > ii && p(i) > ii) out.push_back(ii);
  }
  return out;
}

Permutation direct_product(const Permutation& a, const Permutation& b) {
  require_avoids_132(a, "direct_product: left operand");
  require_avoids_132(b, "direct_product: right operand");
  const int k = 1 + static_cast<int>(t_set(b).size());
  const int m = static_cast<int>(a.size());
  const Word lifted_b = shift_from(b.values(), k, m);
  const Word lifted_a = shift_add(a.values(), k - 1);
  Word w(lifted_b.begin(), lifted_b.begin() + (k - 1));
  w.insert(w.end(), lifted_a.begin(), lifted_a.end());
  w.insert(w.end(), lifted_b.begin() + (k - 1), lifted_b.end());
  return Permutation(std::move(w));
}

namespace {

// Splits p = left ⊗ right with the smallest nonempty left factor, if any.
// The left factor occupies positions k..k+m-1 holding values k..k+m-1 with
// k = 1 + |T(right)|.
std::optional<std::pair<Permutation, Permutation>> split_product(const Permutation& p) {
  const auto n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t k = 1; k + m - 1 <= n; ++k) {
      bool block = true;
      for (std::size_t t = k; t < k + m && block; ++t) {
        const auto v = static_cast<std::size_t>(p(t));
        block = v >= k && v < k + m;
      }
      if (!block) continue;
      Word rest;
      rest.reserve(n - m);
      for (std::size_t t = 1; t <= n; ++t) {
        if (t < k || t >= k + m) rest.push_back(p(t));
      }
      Permutation right = reduce(rest);
      if (1 + t_set(right).size() != k) continue;
      Permutation left = reduce(p.values().subspan(k - 1, m));
      if (direct_product(left, right) == p) return std::make_pair(left, right);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Permutation> product_components(const Permutation& p) {
  require_avoids_132(p, "product_components: argument");
  if (p.empty()) return {};
  auto split = split_product(p);
  if (!split) return {p};
  auto out = product_components(split->first);
  auto tail = product_components(split->second);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace permlab
