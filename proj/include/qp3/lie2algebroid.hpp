#pragma once

// Split Lie 2-algebroids A = A_0 + A_{-1} encoded by a degree-4 function μ
// on the graded chart (q, xi_, th^, th_, xi^, p):
//
//   l1(X1) = {X1,μ2}          a(X0)f = {f,{X0,μ134}}
//   l2(X0,Y0) = {Y0,{X0,μ134}}   l2(X0,Y1) = {Y1,{X0,μ134}}   l2(Y1,X0) = -{X0,{Y1,μ134}}
//   l3(X,Y,Z) = {Z,{Y,{X,μ5}}}   δ = -{μ,·}
//
// The roles of the four fiber families are parameters, so the dual
// algebroid A*[1] with structure function γ uses the same code with
// A_0 = A_{-1}^* (th^), A_{-1} = A_0^* (xi^).

#include "qp3/decompose.hpp"
#include "qp3/linf.hpp"
#include "qp3/sections.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qp3 {

/// Variable families playing A_0, A_{-1}, A_0^*, A_{-1}^*.
struct Lie2Roles {
  std::string a0 = "xi_", a1 = "th_", a0_dual = "xi^", a1_dual = "th^";

  static Lie2Roles primal() { return {}; }
  static Lie2Roles dual() { return {"th^", "xi^", "th_", "xi_"}; }
};

class Lie2Algebroid {
 public:
  Lie2Algebroid(DarbouxChart chart, StructureFunction mu, Lie2Roles roles = Lie2Roles::primal())
      : c_(std::move(chart)), mu_(std::move(mu)), roles_(std::move(roles)) {
    if (c_.n() != 3) throw ChartError("Lie 2-algebroids live on a degree-3 chart");
    a0_ = c_.variables_of_family(roles_.a0);
    a1_ = c_.variables_of_family(roles_.a1);
    a0d_ = c_.variables_of_family(roles_.a0_dual);
    a1d_ = c_.variables_of_family(roles_.a1_dual);
    auto check = [&](const std::vector<std::size_t>& v, const std::vector<std::size_t>& d, int deg) {
      if (v.size() != d.size()) throw ChartError("role families have different ranks");
      for (auto i : v) {
        if (c_.env()->degree(i) != deg) throw ChartError("role family has the wrong degree");
        if (std::find(d.begin(), d.end(), c_.partner(i)) == d.end())
          throw ChartError("role families are not conjugate");
      }
    };
    check(a0_, a0d_, 2);
    check(a1_, a1d_, 1);
  }

  const DarbouxChart& chart() const { return c_; }
  const StructureFunction& mu() const { return mu_; }
  const Lie2Roles& roles() const { return roles_; }
  const std::vector<std::size_t>& a0_vars() const { return a0_; }
  const std::vector<std::size_t>& a1_vars() const { return a1_; }
  const std::vector<std::size_t>& a0_dual_vars() const { return a0d_; }
  const std::vector<std::size_t>& a1_dual_vars() const { return a1d_; }

  bool is_x0(const GPoly& f) const { return is_section_of(c_, f, a0_); }
  bool is_x1(const GPoly& f) const { return is_section_of(c_, f, a1_); }
  bool is_alpha0(const GPoly& f) const { return is_section_of(c_, f, a0d_); }
  bool is_alpha1(const GPoly& f) const { return is_section_of(c_, f, a1d_); }

  /// Component of a fiber-linear polynomial along one family.
  GPoly project(const GPoly& e, const std::vector<std::size_t>& vars) const {
    GPoly out = c_.zero();
    for (const auto& [ex, coeff] : e.terms())
      for (auto v : vars)
        if (ex[v]) {
          out.add_term(ex, coeff);
          break;
        }
    return out;
  }

  GPoly l1(const GPoly& x1) const {
    need(is_x1(x1), "l1", x1);
    return out(poisson(c_, x1, mu_.low()), a0_, "l1");
  }

  /// l2 on A-sections, dispatched on the degrees of the arguments.
  GPoly l2(const GPoly& x, const GPoly& y) const {
    bool x0 = is_x0(x), y0 = is_x0(y);
    need(x0 || is_x1(x), "l2", x);
    need(y0 || is_x1(y), "l2", y);
    if (x.is_zero() || y.is_zero()) return c_.zero();
    if (x0) return out(poisson(c_, y, poisson(c_, x, mu_.mid())), y0 ? a0_ : a1_, "l2");
    if (y0) return out(-poisson(c_, y, poisson(c_, x, mu_.mid())), a1_, "l2");
    return c_.zero();
  }

  GPoly l3(const GPoly& x, const GPoly& y, const GPoly& z) const {
    need(is_x0(x), "l3", x);
    need(is_x0(y), "l3", y);
    need(is_x0(z), "l3", z);
    return out(poisson(c_, z, poisson(c_, y, poisson(c_, x, mu_.top()))), a1_, "l3");
  }

  GPoly anchor(const GPoly& x0, const GPoly& f) const {
    need(is_x0(x0), "anchor", x0);
    need(is_function(c_, f), "anchor", f);
    return poisson(c_, f, poisson(c_, x0, mu_.mid()));
  }

  /// ⟨X0,α0⟩ = {X0,α0} and ⟨X1,α1⟩ = {α1,X1}.
  GPoly pair0(const GPoly& x0, const GPoly& a0) const { return poisson(c_, x0, a0); }
  GPoly pair1(const GPoly& x1, const GPoly& a1) const { return poisson(c_, a1, x1); }

  /// Cochain differential δ = -{μ,·}.
  GPoly delta(const GPoly& w) const { return -poisson(c_, mu_.total, w); }

  /// Contraction: ι_{X0} = {X0,·}, ι_{X1} = -{X1,·}; agrees with the
  /// pairings on one-cochains.
  GPoly iota(const GPoly& x, const GPoly& w) const {
    if (is_x0(x)) return poisson(c_, x, w);
    need(is_x1(x), "iota", x);
    return -poisson(c_, x, w);
  }

  // The remaining operators are defined by their pairings with basis
  // sections, then assembled in the dual basis.

  /// ⟨l1*α0, X1⟩ = ⟨α0, l1 X1⟩.
  GPoly l1_star(const GPoly& a0) const {
    need(is_alpha0(a0), "l1*", a0);
    return assemble1([&](const GPoly& y1) { return pair0(l1(y1), a0); });
  }

  /// L0_{X0} on A_0^* or A_{-1}^*.
  GPoly L0(const GPoly& x0, const GPoly& a) const {
    need(is_x0(x0), "L0", x0);
    if (is_alpha0(a))
      return assemble0([&](const GPoly& y0) { return anchor(x0, pair0(y0, a)) - pair0(l2(x0, y0), a); });
    need(is_alpha1(a), "L0", a);
    return assemble1([&](const GPoly& y1) { return anchor(x0, pair1(y1, a)) - pair1(l2(x0, y1), a); });
  }

  /// ⟨L1_{X1}α1, Y0⟩ = -⟨α1, l2(X1,Y0)⟩.
  GPoly L1(const GPoly& x1, const GPoly& a1) const {
    need(is_x1(x1), "L1", x1);
    need(is_alpha1(a1), "L1", a1);
    return assemble0([&](const GPoly& y0) { return -pair1(l2(x1, y0), a1); });
  }

  /// ⟨L3_{X,Y}α1, Z⟩ = -⟨α1, l3(X,Y,Z)⟩.
  GPoly L3(const GPoly& x, const GPoly& y, const GPoly& a1) const {
    need(is_alpha1(a1), "L3", a1);
    return assemble0([&](const GPoly& z) { return -pair1(l3(x, y, z), a1); });
  }

  /// δf from δf(X0) = a(X0)f.
  GPoly delta_f(const GPoly& f) const {
    return assemble0([&](const GPoly& y0) { return anchor(y0, f); });
  }

  /// δα0(X0,Y0) = a(X0)⟨α0,Y0⟩ - a(Y0)⟨α0,X0⟩ - ⟨α0,l2(X0,Y0)⟩.
  GPoly delta_alpha0(const GPoly& a0, const GPoly& x0, const GPoly& y0) const {
    return anchor(x0, pair0(y0, a0)) - anchor(y0, pair0(x0, a0)) - pair0(l2(x0, y0), a0);
  }

  /// δα1(X0,Y1) = a(X0)⟨α1,Y1⟩ - ⟨α1,l2(X0,Y1)⟩.
  GPoly delta_alpha1(const GPoly& a1, const GPoly& x0, const GPoly& y1) const {
    return anchor(x0, pair1(y1, a1)) - pair1(l2(x0, y1), a1);
  }

  /// ι_{X0}δα0 in A_0^*.
  GPoly iota_delta_alpha0(const GPoly& x0, const GPoly& a0) const {
    need(is_alpha0(a0), "iota delta", a0);
    return assemble0([&](const GPoly& y0) { return delta_alpha0(a0, x0, y0); });
  }

  /// ι_{X1}δα1 in A_0^*, with ⟨ι_{X1}δα1, Y0⟩ = δα1(Y0,X1).
  GPoly iota_delta_alpha1(const GPoly& x1, const GPoly& a1) const {
    need(is_alpha1(a1), "iota delta", a1);
    return assemble0([&](const GPoly& y0) { return delta_alpha1(a1, y0, x1); });
  }

  /// Element of A_0^* (resp. A_{-1}^*) with the given pairings against the
  /// basis sections of A_0 (resp. A_{-1}).
  template <class F>
  GPoly assemble0(F&& value) const {
    GPoly r = c_.zero();
    for (auto v : a0_) {
      GPoly x = GPoly::variable(c_.env(), v);
      GPoly val = value(x);
      if (val.is_zero()) continue;
      GPoly w = GPoly::variable(c_.env(), c_.partner(v));
      Rational s = constant_of(pair0(x, w));
      r += val * (Rational(1) / s * w);
    }
    return r;
  }
  template <class F>
  GPoly assemble1(F&& value) const {
    GPoly r = c_.zero();
    for (auto v : a1_) {
      GPoly x = GPoly::variable(c_.env(), v);
      GPoly val = value(x);
      if (val.is_zero()) continue;
      GPoly w = GPoly::variable(c_.env(), c_.partner(v));
      Rational s = constant_of(pair1(x, w));
      r += val * (Rational(1) / s * w);
    }
    return r;
  }

 private:
  Rational constant_of(const GPoly& f) const { return f.coefficient(Exponents(c_.env()->size(), 0)); }

  void need(bool ok, const char* op, const GPoly& f) const {
    if (!ok) throw StructureError(std::string(op) + ": argument outside its section class: " + to_string(f));
  }
  GPoly out(GPoly f, const std::vector<std::size_t>& cls, const char* op) const {
    if (!is_section_of(c_, f, cls))
      throw StructureError(std::string(op) + ": result outside its section class: " + to_string(f));
    return f;
  }

  DarbouxChart c_;
  StructureFunction mu_;
  Lie2Roles roles_;
  std::vector<std::size_t> a0_, a1_, a0d_, a1d_;
};

/// Decomposes μ (family mu, or gamma for the dual roles) and checks {μ,μ} = 0.
inline Lie2Algebroid derive_lie2algebroid(const DarbouxChart& c, const GPoly& mu,
                                          Lie2Roles roles = Lie2Roles::primal(),
                                          bool allow_master_failure = false) {
  Family fam = roles.a0 == "xi_" ? Family::mu : Family::gamma;
  auto sf = decompose(c, mu, fam);
  if (!allow_master_failure) {
    GPoly r = master_residual(c, sf.total);
    if (!r.is_zero()) throw MasterEquationError("{mu,mu} = " + to_string(r));
  }
  return Lie2Algebroid(c, std::move(sf), std::move(roles));
}

/// Structure function over a point from a 2-term L-infinity algebra:
///   μ = -μ2^j_k ξ_j θ^k + 1/2 μ3^k_ij ξ^i ξ^j ξ_k + μ4^k_ij θ_k ξ^i θ^j
///       + 1/6 μ5^l_ijk ξ^i ξ^j ξ^k θ_l
/// with l1(θ_k) = μ2^j_k ξ_j, l2(ξ_i,ξ_j) = μ3^k_ij ξ_k,
/// l2(ξ_i,θ_j) = μ4^k_ij θ_k, l3(ξ_i,ξ_j,ξ_k) = μ5^l_ijk θ_l.
/// Basis i of g_0 is xi_{i+1}, basis k of g_{-1} is th_{k+1}.
inline GPoly mu_from_lie2_algebra(const DarbouxChart& c, const LInfStructure& g) {
  const auto& s = g.space;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.degree(i) < -1) throw StructureError("mu_from_lie2_algebra needs a 2-term algebra");
  if (!g.brackets[4].empty()) throw StructureError("mu_from_lie2_algebra: l4 must vanish");
  auto g0 = s.indices_of_degree(0), g1 = s.indices_of_degree(-1);
  auto v = [&](const std::string& fam, std::size_t k) { return c.var(fam + std::to_string(k + 1)); };
  if (c.variables_of_family("xi_").size() != g0.size() || c.variables_of_family("th_").size() != g1.size())
    throw ChartError("chart ranks do not match the algebra");
  auto pos = [&](const std::vector<std::size_t>& set, std::size_t x) {
    return std::size_t(std::find(set.begin(), set.end(), x) - set.begin());
  };
  GPoly mu = c.zero();
  for (std::size_t k = 0; k < g1.size(); ++k) {
    Vec val = g.brackets[1].eval(s, {g1[k]});
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!val[j].is_zero()) mu -= val[j] * (v("xi_", pos(g0, j)) * v("th^", k));
  }
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g0.size(); ++j) {
      Vec val = g.brackets[2].eval(s, {g0[i], g0[j]});
      for (std::size_t k = 0; k < s.dim(); ++k)
        if (!val[k].is_zero())
          mu += Rational(1, 2) * val[k] * (v("xi^", i) * v("xi^", j) * v("xi_", pos(g0, k)));
      for (std::size_t l = 0; l < g0.size(); ++l) {
        Vec w = g.brackets[3].eval(s, {g0[i], g0[j], g0[l]});
        for (std::size_t k = 0; k < s.dim(); ++k)
          if (!w[k].is_zero())
            mu += Rational(1, 6) * w[k] * (v("xi^", i) * v("xi^", j) * v("xi^", l) * v("th_", pos(g1, k)));
      }
    }
  for (std::size_t i = 0; i < g0.size(); ++i)
    for (std::size_t j = 0; j < g1.size(); ++j) {
      Vec val = g.brackets[2].eval(s, {g0[i], g1[j]});
      for (std::size_t k = 0; k < s.dim(); ++k)
        if (!val[k].is_zero()) mu += val[k] * (v("th_", pos(g1, k)) * v("xi^", i) * v("th^", j));
    }
  return mu;
}

/// Structure constants of a point Lie 2-algebroid, read back through l1, l2, l3.
inline LInfStructure lie2_algebra_at_point(const Lie2Algebroid& L) {
  const auto& c = L.chart();
  if (!c.base_variables().empty()) throw StructureError("point readback needs a chart without base coordinates");
  std::vector<std::string> l0, l1;
  for (auto v : L.a0_vars()) l0.push_back((*c.env())[v].name);
  for (auto v : L.a1_vars()) l1.push_back((*c.env())[v].name);
  LInfStructure g(GradedSpace({{0, l0}, {-1, l1}}));
  std::vector<std::size_t> all = L.a0_vars();
  all.insert(all.end(), L.a1_vars().begin(), L.a1_vars().end());
  auto coords = [&](const GPoly& f) { return constant_coordinates(c, f, all); };
  auto x = [&](std::size_t i) { return GPoly::variable(c.env(), L.a0_vars()[i]); };
  auto m = [&](std::size_t i) { return GPoly::variable(c.env(), L.a1_vars()[i]); };
  for (std::size_t k = 0; k < l1.size(); ++k) g.set(1, {l1[k]}, coords(L.l1(m(k))));
  for (std::size_t i = 0; i < l0.size(); ++i) {
    for (std::size_t j = i + 1; j < l0.size(); ++j) {
      g.set(2, {l0[i], l0[j]}, coords(L.l2(x(i), x(j))));
      for (std::size_t k = j + 1; k < l0.size(); ++k) g.set(3, {l0[i], l0[j], l0[k]}, coords(L.l3(x(i), x(j), x(k))));
    }
    for (std::size_t k = 0; k < l1.size(); ++k) g.set(2, {l0[i], l1[k]}, coords(L.l2(x(i), m(k))));
  }
  return g;
}

}  // namespace qp3
