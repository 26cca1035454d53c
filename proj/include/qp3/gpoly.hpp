#pragma once

// Free graded-commutative polynomial algebra over the rationals.
//
// A polynomial lives in a variable environment. Each variable carries an
// integer degree >= 0; odd-degree variables anticommute among themselves
// and square to zero, even-degree variables are central. Monomials are
// stored as exponent vectors over the environment; the odd factors of a
// monomial are understood as the ordered product in ascending environment
// index, which is the canonical order used for every sign.

#include "qp3/errors.hpp"
#include "qp3/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qp3 {

struct GradedVariable {
  std::string name;
  int degree = 0;

  bool odd() const { return degree % 2 != 0; }
};

class VarEnv {
 public:
  explicit VarEnv(std::vector<GradedVariable> vars) : vars_(std::move(vars)) {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i].degree < 0)
        throw EnvironmentError("negative degree for variable " + vars_[i].name);
      if (vars_[i].name.empty()) throw EnvironmentError("empty variable name");
      if (!index_.emplace(vars_[i].name, i).second)
        throw EnvironmentError("duplicate variable " + vars_[i].name);
    }
  }

  std::size_t size() const { return vars_.size(); }
  const GradedVariable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<GradedVariable>& variables() const { return vars_; }
  bool odd(std::size_t i) const { return vars_[i].odd(); }
  int degree(std::size_t i) const { return vars_[i].degree; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw EnvironmentError("unknown variable " + std::string(name));
  }

 private:
  std::vector<GradedVariable> vars_;
  std::unordered_map<std::string, std::size_t> index_;
};

using Env = std::shared_ptr<const VarEnv>;

inline Env make_env(std::vector<GradedVariable> vars) {
  return std::make_shared<const VarEnv>(std::move(vars));
}

using Exponents = std::vector<std::uint8_t>;

enum class Side { left, right };

/// One raw, unnormalized term: coefficient times an ordered product of
/// variables (repetitions allowed).
struct RawTerm {
  Rational coefficient;
  std::vector<std::string> variables;
};

class GPoly {
 public:
  static constexpr std::size_t kDefaultTermLimit = 1'000'000;

  GPoly() = default;
  explicit GPoly(Env env) : env_(std::move(env)) {}

  static GPoly zero(Env env) { return GPoly(std::move(env)); }

  static GPoly constant(Env env, const Rational& c) {
    GPoly p(env);
    if (!c.is_zero()) p.terms_.emplace(Exponents(env->size(), 0), c);
    return p;
  }

  static GPoly variable(Env env, std::string_view name, const Rational& c = 1) {
    std::size_t i = env->index_of(name);
    return variable(std::move(env), i, c);
  }

  static GPoly variable(Env env, std::size_t index, const Rational& c = 1) {
    GPoly p(env);
    Exponents e(env->size(), 0);
    e[index] = 1;
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  /// Term with a canonical exponent vector (odd exponents must be 0 or 1).
  static GPoly monomial(Env env, Exponents e, const Rational& c) {
    if (e.size() != env->size()) throw EnvironmentError("exponent vector size mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
      if (env->odd(i) && e[i] > 1) return GPoly(env);
    GPoly p(env);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
  }

  const Env& env() const { return env_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a canonical monomial (zero when absent).
  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  int monomial_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += int(e[i]) * env_->degree(i);
    return d;
  }

  /// Parity-relevant degree of a term; homogeneous elements only.
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (const auto& [e, c] : terms_) {
      int d = monomial_degree(e);
      auto it = std::lower_bound(out.begin(), out.end(), d);
      if (it == out.end() || *it != d) out.insert(it, d);
    }
    return out;
  }

  std::map<int, GPoly> homogeneous_parts() const {
    std::map<int, GPoly> parts;
    for (const auto& [e, c] : terms_) {
      auto [it, fresh] = parts.try_emplace(monomial_degree(e), env_);
      it->second.terms_.emplace(e, c);
    }
    return parts;
  }

  /// Variables occurring in at least one term.
  std::vector<bool> support() const {
    std::vector<bool> s(env_ ? env_->size() : 0, false);
    for (const auto& [e, c] : terms_)
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) s[i] = true;
    return s;
  }

  GPoly& operator+=(const GPoly& o) { return accumulate(o, 1); }
  GPoly& operator-=(const GPoly& o) { return accumulate(o, -1); }

  GPoly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  GPoly operator-() const {
    GPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
  }

  friend GPoly operator+(GPoly a, const GPoly& b) { return a += b; }
  friend GPoly operator-(GPoly a, const GPoly& b) { return a -= b; }
  friend GPoly operator*(GPoly a, const Rational& c) { return a *= c; }
  friend GPoly operator*(const Rational& c, GPoly a) { return a *= c; }

  friend bool operator==(const GPoly& a, const GPoly& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.env_ == b.env_);
  }

  /// Adds c * (canonical monomial e) in place.
  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  GPoly& accumulate(const GPoly& o, int sign) {
    if (o.terms_.empty()) return *this;
    if (!env_) env_ = o.env_;
    if (env_ != o.env_) throw EnvironmentError("operands from different environments");
    for (const auto& [e, c] : o.terms_) add_term(e, sign > 0 ? c : Rational(-c));
    return *this;
  }

  Env env_;
  std::map<Exponents, Rational> terms_;
};

namespace detail {

inline void require_same_env(const GPoly& a, const GPoly& b) {
  if (a.env() && b.env() && a.env() != b.env())
    throw EnvironmentError("operands from different environments");
}

/// Sign and validity of the product of two canonical monomials. Returns 0
/// when an odd variable repeats.
inline int product_sign(const VarEnv& env, const Exponents& a, const Exponents& b) {
  // count pairs (i in a, j in b) of odd variables with i > j
  int parity = 0;
  int odd_in_a_above = 0;
  for (std::size_t k = env.size(); k-- > 0;) {
    if (!env.odd(k)) continue;
    if (a[k] && b[k]) return 0;
    if (b[k]) parity ^= (odd_in_a_above & 1);
    if (a[k]) ++odd_in_a_above;
  }
  return parity ? -1 : 1;
}

}  // namespace detail

/// Graded-commutative product with Koszul signs.
inline GPoly multiply(const GPoly& f, const GPoly& g,
                      std::size_t term_limit = GPoly::kDefaultTermLimit) {
  detail::require_same_env(f, g);
  const Env& env = f.env() ? f.env() : g.env();
  GPoly out(env);
  if (f.is_zero() || g.is_zero()) return out;
  const VarEnv& ve = *env;
  Exponents e(ve.size());
  for (const auto& [ea, ca] : f.terms()) {
    for (const auto& [eb, cb] : g.terms()) {
      int s = detail::product_sign(ve, ea, eb);
      if (s == 0) continue;
      for (std::size_t k = 0; k < e.size(); ++k) {
        unsigned sum = unsigned(ea[k]) + unsigned(eb[k]);
        if (sum > 255) throw TermLimitError("exponent overflow");
        e[k] = std::uint8_t(sum);
      }
      Rational c = ca * cb;
      if (s < 0) c = -c;
      out.add_term(e, c);
      if (out.size() > term_limit) throw TermLimitError("term count cap exceeded");
    }
  }
  return out;
}

inline GPoly operator*(const GPoly& f, const GPoly& g) { return multiply(f, g); }

/// Normal form of a list of raw terms. Reordering the variables of a term
/// multiplies it by the Koszul sign of the sorting permutation; a repeated
/// odd variable kills the term.
inline GPoly normalize(const Env& env, const std::vector<RawTerm>& raw) {
  GPoly out(env);
  const VarEnv& ve = *env;
  for (const auto& t : raw) {
    Exponents e(ve.size(), 0);
    std::vector<std::size_t> odd_seq;
    for (const auto& name : t.variables) {
      std::size_t i = ve.index_of(name);
      if (ve.odd(i))
        odd_seq.push_back(i);
      else {
        if (e[i] == 255) throw TermLimitError("exponent overflow");
        ++e[i];
      }
    }
    // sign of the sorting permutation restricted to odd factors
    bool vanishes = false;
    int parity = 0;
    for (std::size_t a = 0; a < odd_seq.size(); ++a)
      for (std::size_t b = a + 1; b < odd_seq.size(); ++b) {
        if (odd_seq[a] == odd_seq[b]) vanishes = true;
        if (odd_seq[a] > odd_seq[b]) parity ^= 1;
      }
    if (vanishes) continue;
    for (auto i : odd_seq) e[i] = 1;
    out.add_term(e, parity ? Rational(-t.coefficient) : t.coefficient);
  }
  return out;
}

/// One-sided derivative. For odd v the variable is first moved to the
/// leftmost (left) or rightmost (right) position; for even v it is the
/// ordinary partial derivative.
inline GPoly derivative(const GPoly& f, std::size_t v, Side side) {
  GPoly out(f.env());
  if (f.is_zero()) return out;
  const VarEnv& ve = *f.env();
  if (v >= ve.size()) throw EnvironmentError("variable index out of range");
  const bool odd = ve.odd(v);
  for (const auto& [e, c] : f.terms()) {
    if (!e[v]) continue;
    Exponents d = e;
    Rational coeff = c;
    if (odd) {
      int passed = 0;
      if (side == Side::left) {
        for (std::size_t k = 0; k < v; ++k)
          if (ve.odd(k) && e[k]) ++passed;
      } else {
        for (std::size_t k = v + 1; k < e.size(); ++k)
          if (ve.odd(k) && e[k]) ++passed;
      }
      if (passed & 1) coeff = -coeff;
    } else {
      coeff *= int(e[v]);
    }
    --d[v];
    out.add_term(d, coeff);
  }
  return out;
}

inline GPoly derivative(const GPoly& f, std::string_view name, Side side) {
  return derivative(f, f.env()->index_of(name), side);
}

/// Common degree of all terms of a nonzero homogeneous polynomial.
inline int degree_of(const GPoly& f) {
  if (f.is_zero()) throw DegreeUndefined();
  auto ds = f.degrees();
  if (ds.size() != 1) throw InhomogeneousError(ds);
  return ds.front();
}

/// Canonical text form, e.g. "3/2 * q1^2 xi^1 p_1 - xi^2 p_2". Terms are
/// listed in descending exponent-vector order.
inline std::string to_string(const GPoly& f) {
  if (f.is_zero()) return "0";
  const VarEnv& ve = *f.env();
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += ' ';
      mono += ve[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(int(e[i]));
    }
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + " * " + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const GPoly& f) { return os << to_string(f); }

}  // namespace qp3
