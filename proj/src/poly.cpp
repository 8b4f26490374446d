#include "permlab/poly.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace permlab {

namespace {

unsigned total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

int variable_rank(const std::string& v) {
  static const std::array<const char*, 5> kFixed{"x", "y", "q", "p", "z"};
  for (std::size_t i = 0; i < kFixed.size(); ++i) {
    if (v == kFixed[i]) return static_cast<int>(i);
  }
  return static_cast<int>(kFixed.size());
}

unsigned add_exponents(unsigned a, unsigned b) {
  if (a > std::numeric_limits<unsigned>::max() - b) {
    throw std::overflow_error("MultiPoly: exponent overflow");
  }
  return a + b;
}

const char* superscript(char digit) {
  static const std::array<const char*, 10> kSup{"⁰", "¹", "²", "³", "⁴",
                                                "⁵", "⁶", "⁷", "⁸", "⁹"};
  return kSup[static_cast<std::size_t>(digit - '0')];
}

}  // namespace

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

bool variable_less(const std::string& a, const std::string& b) {
  const int ra = variable_rank(a);
  const int rb = variable_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto* side : {&a, &b}) {
    for (const auto& v : *side) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(), variable_less);
  return out;
}

std::string to_string(const BigInt& v) { return v.str(); }

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(union_vars(vars, {})) {}

MultiPoly MultiPoly::constant(const BigInt& c, std::vector<std::string> vars) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.add_term(Exponent{1}, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Exponent e, const BigInt& c) {
  if (vars.size() != e.size()) throw std::invalid_argument("MultiPoly: exponent arity");
  // Pair names with exponents so the canonical reorder keeps them aligned.
  std::vector<std::pair<std::string, unsigned>> named;
  for (std::size_t i = 0; i < vars.size(); ++i) named.emplace_back(vars[i], e[i]);
  MultiPoly p(std::move(vars));
  if (p.vars_.size() != named.size()) throw std::invalid_argument("MultiPoly: repeated variable");
  Exponent aligned(p.vars_.size(), 0);
  for (const auto& [name, k] : named) {
    const auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
    aligned[static_cast<std::size_t>(it - p.vars_.begin())] = k;
  }
  p.add_term(aligned, c);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const BigInt& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient_of(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MultiPoly::coefficient_of(const std::map<std::string, unsigned>& e) const {
  Exponent aligned(vars_.size(), 0);
  for (const auto& [name, k] : e) {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (k != 0) return 0;
      continue;
    }
    aligned[static_cast<std::size_t>(it - vars_.begin())] = k;
  }
  return coefficient_of(aligned);
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  MultiPoly out(union_vars(vars, vars_));
  if (out.vars_ == vars_) {
    out.terms_ = terms_;
    return out;
  }
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<std::size_t>(
        std::find(out.vars_.begin(), out.vars_.end(), vars_[i]) - out.vars_.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponent f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::trimmed() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (degree_in(vars_[i]) > 0) keep.push_back(i);
  }
  MultiPoly out;
  for (auto i : keep) out.vars_.push_back(vars_[i]);
  for (const auto& [e, c] : terms_) {
    Exponent f;
    for (auto i : keep) f.push_back(e[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_ != vars_) {
    *this = with_vars(o.vars_);
    return *this += o.with_vars(vars_);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += o.scaled(-1); }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::scaled(const BigInt& c) const {
  MultiPoly out(vars_);
  if (c == 0) return out;
  for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
  return out;
}

MultiPoly MultiPoly::shifted(const std::string& var, unsigned k) const {
  MultiPoly out = with_vars({var});
  const auto i = static_cast<std::size_t>(
      std::find(out.vars_.begin(), out.vars_.end(), var) - out.vars_.begin());
  Terms moved;
  for (auto& [e, c] : out.terms_) {
    Exponent f = e;
    f[i] = add_exponents(f[i], k);
    moved.emplace(std::move(f), c);
  }
  out.terms_ = std::move(moved);
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const BigInt& value) const {
  const auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return *this;
  const auto i = static_cast<std::size_t>(it - vars_.begin());
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  MultiPoly out(rest);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    out.add_term(f, c * boost::multiprecision::pow(value, e[i]));
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const std::string& other) const {
  return renamed({{var, other}});
}

MultiPoly MultiPoly::renamed(const std::map<std::string, std::string>& names) const {
  std::vector<std::string> target;
  for (const auto& v : vars_) {
    const auto it = names.find(v);
    target.push_back(it == names.end() ? v : it->second);
  }
  MultiPoly out(target);
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<std::size_t>(
        std::find(out.vars_.begin(), out.vars_.end(), target[i]) - out.vars_.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponent f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[where[i]] = add_exponents(f[where[i]], e[i]);
    out.add_term(f, c);
  }
  return out;
}

BigInt MultiPoly::evaluate_all(const BigInt& value) const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c * boost::multiprecision::pow(value, total_degree(e));
  return total;
}

std::string MultiPoly::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const bool unit = total_degree(e) == 0;
    if (mag != 1 || unit) out += mag.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += vars_[i];
      if (e[i] > 1) {
        for (char d : std::to_string(e[i])) out += superscript(d);
      }
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const auto vars = union_vars(a.vars_, b.vars_);
  return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }

MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  const auto vars = union_vars(a.vars(), b.vars());
  const MultiPoly x = a.with_vars(vars);
  const MultiPoly y = b.with_vars(vars);
  MultiPoly out(vars);
  for (const auto& [ea, ca] : x.terms()) {
    for (const auto& [eb, cb] : y.terms()) {
      Exponent e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = add_exponents(ea[i], eb[i]);
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

}  // namespace permlab
