#pragma once

// Degree-n Darboux charts and the graded Poisson bracket.
//
// A chart is a list of conjugate pairs (u, u*) with deg u + deg u* = n and
// the generator value {u, u*} = +1. The mirror value {u*, u} is forced by
// graded antisymmetry. The bracket is realized as
//
//   {f, g} = sum_{a,b} (f d/dz^a from the right) {z^a, z^b} (d/dz^b g from the left)
//
// which is a biderivation of degree -n with the prescribed generator values.

#include "qp3/gpoly.hpp"

#include <string>
#include <vector>

namespace qp3 {

struct PairDecl {
  GradedVariable u;
  GradedVariable u_star;
};

/// Family of a variable name: the name with trailing digits stripped
/// ("xi^12" -> "xi^", "q1" -> "q").
inline std::string variable_family(std::string_view name) {
  std::size_t end = name.size();
  while (end > 0 && name[end - 1] >= '0' && name[end - 1] <= '9') --end;
  return std::string(name.substr(0, end));
}

class DarbouxChart {
 public:
  struct Pair {
    std::size_t u;
    std::size_t u_star;
  };

  int n() const { return n_; }
  const Env& env() const { return env_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  /// Conjugate of variable i and the value {z_i, z_partner}.
  std::size_t partner(std::size_t i) const { return partner_[i]; }
  int omega(std::size_t i) const { return omega_[i]; }

  GPoly var(std::string_view name, const Rational& c = 1) const {
    return GPoly::variable(env_, name, c);
  }
  GPoly constant(const Rational& c) const { return GPoly::constant(env_, c); }
  GPoly zero() const { return GPoly(env_); }

  /// Degree-0 variables whose conjugate has degree n: coordinates on the
  /// body manifold.
  std::vector<std::size_t> base_variables() const {
    std::vector<std::size_t> out;
    for (const auto& p : pairs_) {
      if (env_->degree(p.u) == 0 && env_->degree(p.u_star) == n_) out.push_back(p.u);
      else if (env_->degree(p.u_star) == 0 && env_->degree(p.u) == n_)
        out.push_back(p.u_star);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_base(std::size_t i) const {
    return env_->degree(i) == 0 && env_->degree(partner_[i]) == n_;
  }
  bool is_momentum(std::size_t i) const {
    return env_->degree(i) == n_ && env_->degree(partner_[i]) == 0;
  }
  bool is_fiber(std::size_t i) const { return !is_base(i) && !is_momentum(i); }

  std::vector<std::size_t> variables_of_family(std::string_view family) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < env_->size(); ++i)
      if (variable_family((*env_)[i].name) == family) out.push_back(i);
    return out;
  }

  friend DarbouxChart make_chart(const std::vector<PairDecl>& decls, int n);

 private:
  int n_ = 0;
  Env env_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> partner_;
  std::vector<int> omega_;
};

/// Validates the pairing and lays out the environment as: the u-side
/// families in order of first appearance, then the u*-side families in
/// reverse order (the usual (x, xi, theta, p) layout).
inline DarbouxChart make_chart(const std::vector<PairDecl>& decls, int n) {
  if (n < 1) throw ChartError("symplectic degree must be >= 1");
  for (const auto& d : decls) {
    if (d.u.degree < 0 || d.u_star.degree < 0)
      throw ChartError("negative degree in pair " + d.u.name + "/" + d.u_star.name);
    if (d.u.degree + d.u_star.degree != n)
      throw ChartError("degree-sum violation: deg " + d.u.name + " + deg " + d.u_star.name +
                       " = " + std::to_string(d.u.degree + d.u_star.degree) +
                       " != " + std::to_string(n));
  }
  std::vector<std::string> u_fams, star_fams;
  auto note = [](std::vector<std::string>& v, const std::string& f) {
    if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
  };
  for (const auto& d : decls) {
    note(u_fams, variable_family(d.u.name));
    note(star_fams, variable_family(d.u_star.name));
  }
  std::vector<std::string> order = u_fams;
  for (auto it = star_fams.rbegin(); it != star_fams.rend(); ++it) note(order, *it);

  std::vector<GradedVariable> vars;
  for (const auto& fam : order) {
    for (const auto& d : decls) {
      if (variable_family(d.u.name) == fam) vars.push_back(d.u);
      if (variable_family(d.u_star.name) == fam) vars.push_back(d.u_star);
    }
  }
  DarbouxChart c;
  c.n_ = n;
  try {
    c.env_ = make_env(vars);
  } catch (const EnvironmentError& e) {
    throw ChartError(e.what());
  }
  c.partner_.assign(vars.size(), 0);
  c.omega_.assign(vars.size(), 0);
  for (const auto& d : decls) {
    std::size_t a = c.env_->index_of(d.u.name);
    std::size_t b = c.env_->index_of(d.u_star.name);
    c.pairs_.push_back({a, b});
    c.partner_[a] = b;
    c.partner_[b] = a;
    c.omega_[a] = 1;
    // {u*, u} = -(-1)^{(|u*|-n)(|u|-n)} {u, u*}
    int e = (d.u_star.degree - n) * (d.u.degree - n);
    c.omega_[b] = (e % 2 == 0) ? -1 : 1;
  }
  return c;
}

/// Graded Poisson bracket of degree -n. Bilinear, so inhomogeneous inputs
/// are handled component by component.
inline GPoly poisson(const DarbouxChart& chart, const GPoly& f, const GPoly& g) {
  GPoly out(chart.env());
  if (f.is_zero() || g.is_zero()) return out;
  if ((f.env() && f.env() != chart.env()) || (g.env() && g.env() != chart.env()))
    throw EnvironmentError("poisson: operand not in chart environment");
  auto sf = f.support();
  auto sg = g.support();
  for (std::size_t a = 0; a < sf.size(); ++a) {
    if (!sf[a]) continue;
    std::size_t b = chart.partner(a);
    if (!sg[b]) continue;
    GPoly term = multiply(derivative(f, a, Side::right), derivative(g, b, Side::left));
    if (chart.omega(a) < 0) term = -term;
    out += term;
  }
  return out;
}

/// {Theta, Theta}; zero exactly when Theta is a Q-structure.
inline GPoly master_residual(const DarbouxChart& chart, const GPoly& theta) {
  if (theta.is_zero()) return chart.zero();
  int d = degree_of(theta);
  if (d != chart.n() + 1)
    throw DegreeError("master equation needs degree " + std::to_string(chart.n() + 1) +
                      ", got " + std::to_string(d));
  return poisson(chart, theta, theta);
}

/// Standard charts used throughout the tests and fixtures.
namespace charts {

/// T*[3]A*[2] over R^m with rank-r bundle: (q, xi_, xi^, p), degrees (0,2,1,3).
inline DarbouxChart t3a2(int base_dim, int rank) {
  std::vector<PairDecl> d;
  for (int i = 1; i <= base_dim; ++i)
    d.push_back({{"q" + std::to_string(i), 0}, {"p_" + std::to_string(i), 3}});
  for (int a = 1; a <= rank; ++a)
    d.push_back({{"xi_" + std::to_string(a), 2}, {"xi^" + std::to_string(a), 1}});
  return make_chart(d, 3);
}

/// T*[3]A*[2] for a graded bundle A = A0 + A_{-1}: (q, xi_, th^, th_, xi^, p)
/// with degrees (0,2,2,1,1,3) and {xi_j, xi^j} = {th^k, th_k} = +1.
inline DarbouxChart t3_graded(int base_dim, int rank0, int rank1) {
  std::vector<PairDecl> d;
  for (int i = 1; i <= base_dim; ++i)
    d.push_back({{"q" + std::to_string(i), 0}, {"p_" + std::to_string(i), 3}});
  for (int j = 1; j <= rank0; ++j)
    d.push_back({{"xi_" + std::to_string(j), 2}, {"xi^" + std::to_string(j), 1}});
  for (int k = 1; k <= rank1; ++k)
    d.push_back({{"th^" + std::to_string(k), 2}, {"th_" + std::to_string(k), 1}});
  return make_chart(d, 3);
}

/// T*[2]A[1]: (x, xi, th, p), degrees (0,1,1,2), {x,p} = {xi^a, th_a} = 1.
inline DarbouxChart t2a1(int base_dim, int rank) {
  std::vector<PairDecl> d;
  for (int i = 1; i <= base_dim; ++i)
    d.push_back({{"x" + std::to_string(i), 0}, {"p_" + std::to_string(i), 2}});
  for (int a = 1; a <= rank; ++a)
    d.push_back({{"xi^" + std::to_string(a), 1}, {"th_" + std::to_string(a), 1}});
  return make_chart(d, 2);
}

}  // namespace charts

}  // namespace qp3
