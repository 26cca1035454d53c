#pragma once

// LWX 2-algebroids over a point (metric Lie 2-algebras): E_{-1} --∂--> E_0
// with the bracket ∘, the E_{-1}-valued 3-form Ω and the degree-1 pairing
// S between E_0 and E_{-1}. Anchor and 𝒟 vanish.
//
// Elements of E = E_0 + E_{-1} are dense vectors with the E_0 block first.

#include "qp3/leibniz2.hpp"

#include <string>
#include <vector>

namespace qp3 {

struct LWXPointStructure {
  /// v0 = E_0, v1 = E_{-1}, d = ∂, l2 = ∘, l3 = Ω.
  Leibniz2Structure ops;
  /// S[x][m] = S(x, m) for x in E_0, m in E_{-1}.
  Mat S;

  static LWXPointStructure zero(std::vector<std::string> e0, std::vector<std::string> e1) {
    LWXPointStructure W;
    W.ops = Leibniz2Structure::zero(std::move(e0), std::move(e1));
    W.S = zero_mat(W.ops.n0(), W.ops.n1());
    return W;
  }

  std::size_t n0() const { return ops.n0(); }
  std::size_t n1() const { return ops.n1(); }
  std::size_t dim() const { return n0() + n1(); }

  std::vector<std::string> labels() const {
    std::vector<std::string> l = ops.v0;
    l.insert(l.end(), ops.v1.begin(), ops.v1.end());
    return l;
  }

  Vec head(const Vec& e) const { return Vec(e.begin(), e.begin() + n0()); }
  Vec tail(const Vec& e) const { return Vec(e.begin() + n0(), e.end()); }
  Vec join(const Vec& a, const Vec& b) const {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  int degree(std::size_t i) const { return i < n0() ? 0 : -1; }

  Rational pair(const Vec& x, const Vec& m) const {
    Rational r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (!m[j].is_zero()) r += x[i] * m[j] * S[i][j];
    }
    return r;
  }

  /// Symmetric form on E.
  Rational s(const Vec& a, const Vec& b) const {
    return pair(head(a), tail(b)) + pair(head(b), tail(a));
  }

  Vec partial(const Vec& e) const { return join(ops.D(tail(e)), zero_vec(n1())); }

  Vec circ(const Vec& a, const Vec& b) const {
    Vec x = head(a), m = tail(a), y = head(b), n = tail(b);
    return join(ops.b00(x, y), ops.b01(x, n) + ops.b10(m, y));
  }

  /// Skew bracket; over a point 𝒟 = 0 so it is the plain skew-symmetrization.
  Vec skew(const Vec& a, const Vec& b) const {
    return Rational(1, 2) * (circ(a, b) - circ(b, a));
  }

  /// Ω on the E_0 components.
  Vec omega(const Vec& a, const Vec& b, const Vec& c) const {
    return join(zero_vec(n0()), ops.L3(head(a), head(b), head(c)));
  }

  Vec K(const Vec& a, const Vec& b, const Vec& c) const {
    return circ(a, circ(b, c)) - circ(circ(a, b), c) - circ(b, circ(a, c));
  }

  Vec J(const Vec& a, const Vec& b, const Vec& c) const {
    return skew(skew(a, b), c) + skew(skew(b, c), a) + skew(skew(c, a), b);
  }

  /// T(e0_1, e0_2, e1) = 1/6 (S(e0_1,[e0_2,e1]) + S(e1,[e0_1,e0_2]) + S(e0_2,[e1,e0_1])).
  Rational T(const Vec& x, const Vec& y, const Vec& m) const {
    return Rational(1, 6) * (s(x, skew(y, m)) + s(m, skew(x, y)) + s(y, skew(m, x)));
  }
};

/// Nondegeneracy of the pairing. Isotropy of E_0 and E_{-1} is structural.
inline ViolationReport check_pairing(const Mat& S, std::size_t n0, std::size_t n1) {
  if (n0 != n1)
    throw StructureError("pairing dimension mismatch: (" + std::to_string(n0) + "," +
                         std::to_string(n1) + ")");
  if (S.size() != n0) throw StructureError("pairing matrix has wrong row count");
  for (const auto& row : S)
    if (row.size() != n1) throw StructureError("pairing matrix has wrong column count");
  ViolationReport r;
  r.checked = 1;
  std::size_t rk = rank(S);
  if (rk != n0)
    r.violations.push_back({"pairing.nondegenerate", {}, {{"rank", Rational(int(rk))}},
                            "rank " + std::to_string(rk) + " < " + std::to_string(n0)});
  r.notes.push_back("isotropy of E0 and E-1 holds by construction");
  return r;
}

/// Axioms (i)-(v) over a point, plus alternation of Ω. Axiom (v) is
/// checked as S(Ω(a,b,c),d) + S(c,Ω(a,b,d)) = 0.
inline ViolationReport verify_lwx_point(const LWXPointStructure& W) {
  ViolationReport r;
  try {
    r.merge(check_pairing(W.S, W.n0(), W.n1()));
  } catch (const StructureError& e) {
    r.checked += 1;
    r.violations.push_back({"pairing.dimension", {}, {}, e.what()});
    return r;
  }
  r.merge(verify_leibniz2(W.ops), "i.");

  const std::size_t n0 = W.n0(), N = W.dim();
  const auto labels = W.labels();
  auto b = [&](std::size_t i) { return W.basis(i); };

  // (ii): 𝒟 = 0, so ∘ must be skew on E_0 and the mixed slots must cancel
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) {
      if (i >= n0 && j >= n0) continue;
      r.check(j < n0 ? "ii.E0" : "ii.mixed", {labels[i], labels[j]},
              W.circ(b(i), b(j)) + W.circ(b(j), b(i)), labels);
    }

  // (iii)
  for (std::size_t m = n0; m < N; ++m)
    for (std::size_t n = n0; n < N; ++n)
      r.check_scalar("iii", {labels[m], labels[n]},
                     W.s(W.partial(b(m)), b(n)) - W.s(b(m), W.partial(b(n))));

  // (iv): ρ = 0
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        if (W.degree(i) + W.degree(j) + W.degree(k) != -1) continue;
        r.check_scalar("iv", {labels[i], labels[j], labels[k]},
                       W.s(W.circ(b(i), b(j)), b(k)) + W.s(b(j), W.circ(b(i), b(k))));
      }

  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t c = 0; c < n0; ++c)
      for (std::size_t d = 0; d < n0; ++d) {
        Vec A = b(a), C = b(c), D = b(d);
        for (std::size_t bb = 0; bb < n0; ++bb) {
          Vec B = b(bb);
          // (v)
          r.check_scalar("v", {labels[a], labels[bb], labels[c], labels[d]},
                         W.s(W.omega(A, B, C), D) + W.s(C, W.omega(A, B, D)));
        }
        // Ω is a 3-form
        r.check("omega.alt", {labels[a], labels[c], labels[d]},
                W.omega(A, C, D) + W.omega(C, A, D), labels);
        r.check("omega.alt", {labels[a], labels[c], labels[d]},
                W.omega(A, C, D) + W.omega(A, D, C), labels);
      }
  return r;
}

}  // namespace qp3
