#pragma once

// LWX operations on E_0 = A_0 + A_{-1}^*, E_{-1} = A_{-1} + A_0^* written with
// the Lie 2-algebroid operators instead of nested brackets with μ:
//
//   (X0+α1)∘(Y0+β1) = l2(X0,Y0) + L0_{X0}β1 - L0_{Y0}α1
//   (X0+α1)∘(X1+α0) = l2(X0,X1) + L0_{X0}α0 + ι_{X1}δα1
//   (X1+α0)∘(X0+α1) = l2(X1,X0) + L1_{X1}α1 - ι_{X0}δα0
//   Ω = l3 + L3_{X,Y}ζ + L3_{Y,Z}α + L3_{Z,X}β,   ∂ = l1 + l1^*,   ρ = a
//
// With a dual algebroid (structure function γ on the same chart) the same
// terms with the roles exchanged are added, ∂ becomes l1 + 𝔩1 and ρ = a + 𝔞.

#include "qp3/derived.hpp"
#include "qp3/lie2algebroid.hpp"

#include <optional>

namespace qp3 {

class ExplicitLWX {
 public:
  explicit ExplicitLWX(Lie2Algebroid primal, std::optional<Lie2Algebroid> dual = std::nullopt)
      : p_(std::move(primal)), d_(std::move(dual)) {
    if (d_ && d_->roles().a0 != p_.roles().a1_dual) throw StructureError("dual algebroid must use the dual roles");
  }

  const DarbouxChart& chart() const { return p_.chart(); }
  const Lie2Algebroid& primal() const { return p_; }
  const std::optional<Lie2Algebroid>& dual() const { return d_; }

  GPoly partial(const GPoly& e) const {
    GPoly x1 = p_.project(e, p_.a1_vars()), a0 = p_.project(e, p_.a0_dual_vars());
    need(x1 + a0 == e, "partial", e);
    GPoly out = p_.l1(x1);
    out += d_ ? d_->l1(a0) : p_.l1_star(a0);
    return out;
  }

  GPoly rho(const GPoly& e, const GPoly& f) const {
    GPoly out = p_.anchor(p_.project(e, p_.a0_vars()), f);
    if (d_) out += d_->anchor(d_->project(e, d_->a0_vars()), f);
    return out;
  }

  GPoly pair(const GPoly& a, const GPoly& b) const { return half_pair(p_, a, b) + half_pair(p_, b, a); }

  GPoly D(const GPoly& f) const {
    GPoly out = p_.delta_f(f);
    if (d_) out += d_->delta_f(f);
    return out;
  }

  GPoly circ(const GPoly& a, const GPoly& b) const {
    GPoly out = circ_terms(p_, a, b);
    if (d_) out += circ_terms(*d_, a, b);
    return out;
  }

  GPoly skew(const GPoly& a, const GPoly& b) const { return circ(a, b) - Rational(1, 2) * D(pair(a, b)); }

  GPoly omega(const GPoly& a, const GPoly& b, const GPoly& c) const {
    GPoly out = omega_terms(p_, a, b, c);
    if (d_) out += omega_terms(*d_, a, b, c);
    return out;
  }

 private:
  struct Parts {
    GPoly x0, x1, a0, a1;
  };

  static Parts split(const Lie2Algebroid& L, const GPoly& e) {
    Parts p{L.project(e, L.a0_vars()), L.project(e, L.a1_vars()), L.project(e, L.a0_dual_vars()),
            L.project(e, L.a1_dual_vars())};
    if (p.x0 + p.x1 + p.a0 + p.a1 != e)
      throw StructureError("argument outside its section class: " + to_string(e));
    return p;
  }

  // ⟨X0,β0⟩ + ⟨X1,β1⟩ with X from a and β from b.
  static GPoly half_pair(const Lie2Algebroid& L, const GPoly& a, const GPoly& b) {
    Parts u = split(L, a), v = split(L, b);
    return L.pair0(u.x0, v.a0) + L.pair1(u.x1, v.a1);
  }

  static GPoly circ_terms(const Lie2Algebroid& L, const GPoly& a, const GPoly& b) {
    Parts u = split(L, a), v = split(L, b);
    const GPoly z = L.chart().zero();
    GPoly out = z;
    // E0 x E0
    out += L.l2(u.x0, v.x0);
    if (!u.x0.is_zero() && !v.a1.is_zero()) out += L.L0(u.x0, v.a1);
    if (!v.x0.is_zero() && !u.a1.is_zero()) out -= L.L0(v.x0, u.a1);
    // E0 x E-1
    out += L.l2(u.x0, v.x1);
    if (!u.x0.is_zero() && !v.a0.is_zero()) out += L.L0(u.x0, v.a0);
    if (!v.x1.is_zero() && !u.a1.is_zero()) out += L.iota_delta_alpha1(v.x1, u.a1);
    // E-1 x E0
    out += L.l2(u.x1, v.x0);
    if (!u.x1.is_zero() && !v.a1.is_zero()) out += L.L1(u.x1, v.a1);
    if (!v.x0.is_zero() && !u.a0.is_zero()) out -= L.iota_delta_alpha0(v.x0, u.a0);
    return out;
  }

  static GPoly omega_terms(const Lie2Algebroid& L, const GPoly& a, const GPoly& b, const GPoly& c) {
    Parts u = split(L, a), v = split(L, b), w = split(L, c);
    GPoly out = L.l3(u.x0, v.x0, w.x0);
    if (!w.a1.is_zero()) out += L.L3(u.x0, v.x0, w.a1);
    if (!u.a1.is_zero()) out += L.L3(v.x0, w.x0, u.a1);
    if (!v.a1.is_zero()) out += L.L3(w.x0, u.x0, v.a1);
    return out;
  }

  void need(bool ok, const char* op, const GPoly& f) const {
    if (!ok) throw StructureError(std::string(op) + ": argument outside its section class: " + to_string(f));
  }

  Lie2Algebroid p_;
  std::optional<Lie2Algebroid> d_;
};

/// Explicit operations of the LWX 2-algebroid A + A^*[1] from μ alone.
inline ExplicitLWX stl2a_lwx(const DarbouxChart& c, const GPoly& mu, bool allow_master_failure = false) {
  return ExplicitLWX(derive_lie2algebroid(c, mu, Lie2Roles::primal(), allow_master_failure));
}

/// Compares the explicit operations with the derived ones on basis sections
/// and test functions with combined q-degree <= qdeg_bound.
inline ViolationReport compare_lwx(const DerivedLWX& W, const ExplicitLWX& E, int qdeg_bound = 2) {
  const auto& c = W.chart();
  auto s0 = sample_sections(c, W.e0_vars(), qdeg_bound);
  auto s1 = sample_sections(c, W.e1_vars(), qdeg_bound);
  auto all = s0;
  all.insert(all.end(), s1.begin(), s1.end());
  auto fn = sample_functions(c, qdeg_bound);
  using T = std::vector<const SampleSection*>;
  ViolationReport r;
  detail::for_each_bounded({&s1}, qdeg_bound, [&](const T& t) {
    check_poly(r, "agree.partial", detail::labels_of(t), W.partial(t[0]->value) - E.partial(t[0]->value));
  });
  detail::for_each_bounded({&fn}, qdeg_bound, [&](const T& t) {
    check_poly(r, "agree.D", detail::labels_of(t), W.D(t[0]->value) - E.D(t[0]->value));
  });
  detail::for_each_bounded({&s0, &fn}, qdeg_bound, [&](const T& t) {
    check_poly(r, "agree.rho", detail::labels_of(t),
               W.rho(t[0]->value, t[1]->value) - E.rho(t[0]->value, t[1]->value));
  });
  detail::for_each_bounded({&all, &all}, qdeg_bound, [&](const T& t) {
    const GPoly &a = t[0]->value, &b = t[1]->value;
    check_poly(r, "agree.pair", detail::labels_of(t), W.pair(a, b) - E.pair(a, b));
    check_poly(r, "agree.circ", detail::labels_of(t), W.circ(a, b) - E.circ(a, b));
  });
  detail::for_each_bounded({&s0, &s0, &s0}, qdeg_bound, [&](const T& t) {
    check_poly(r, "agree.omega", detail::labels_of(t),
               W.omega(t[0]->value, t[1]->value, t[2]->value) - E.omega(t[0]->value, t[1]->value, t[2]->value));
  });
  r.notes.push_back("compared on basis sections and test functions with combined q-degree <= " +
                    std::to_string(qdeg_bound));
  return r;
}

}  // namespace qp3
