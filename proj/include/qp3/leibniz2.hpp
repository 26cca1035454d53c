#pragma once

// Leibniz 2-algebras V_{-1} --d--> V_0 with a non-skew binary bracket and
// a ternary Jacobiator, as dense structure constants.

#include "qp3/report.hpp"

#include <string>
#include <vector>

namespace qp3 {

struct Leibniz2Structure {
  std::vector<std::string> v0;   // basis of V_0
  std::vector<std::string> v1;   // basis of V_{-1}
  std::vector<Vec> d;            // d[m] in V_0
  std::vector<std::vector<Vec>> l2_00;  // [x][y] in V_0
  std::vector<std::vector<Vec>> l2_01;  // [x][m] in V_{-1}
  std::vector<std::vector<Vec>> l2_10;  // [m][x] in V_{-1}
  std::vector<std::vector<std::vector<Vec>>> l3;  // [x][y][z] in V_{-1}

  static Leibniz2Structure zero(std::vector<std::string> v0, std::vector<std::string> v1) {
    Leibniz2Structure L;
    const std::size_t n0 = v0.size(), n1 = v1.size();
    L.v0 = std::move(v0);
    L.v1 = std::move(v1);
    L.d.assign(n1, zero_vec(n0));
    L.l2_00.assign(n0, std::vector<Vec>(n0, zero_vec(n0)));
    L.l2_01.assign(n0, std::vector<Vec>(n1, zero_vec(n1)));
    L.l2_10.assign(n1, std::vector<Vec>(n0, zero_vec(n1)));
    L.l3.assign(n0, std::vector<std::vector<Vec>>(n0, std::vector<Vec>(n0, zero_vec(n1))));
    return L;
  }

  std::size_t n0() const { return v0.size(); }
  std::size_t n1() const { return v1.size(); }

  void validate() const {
    const std::size_t a = n0(), b = n1();
    auto bad = [](const char* what) { throw StructureError(std::string("leibniz2: bad shape of ") + what); };
    if (d.size() != b) bad("d");
    for (const auto& v : d)
      if (v.size() != a) bad("d");
    if (l2_00.size() != a || l2_01.size() != a || l2_10.size() != b || l3.size() != a) bad("l2/l3");
    for (const auto& r : l2_00) {
      if (r.size() != a) bad("l2_00");
      for (const auto& v : r)
        if (v.size() != a) bad("l2_00");
    }
    for (const auto& r : l2_01) {
      if (r.size() != b) bad("l2_01");
      for (const auto& v : r)
        if (v.size() != b) bad("l2_01");
    }
    for (const auto& r : l2_10) {
      if (r.size() != a) bad("l2_10");
      for (const auto& v : r)
        if (v.size() != b) bad("l2_10");
    }
    for (const auto& p : l3) {
      if (p.size() != a) bad("l3");
      for (const auto& r : p) {
        if (r.size() != a) bad("l3");
        for (const auto& v : r)
          if (v.size() != b) bad("l3");
      }
    }
  }

  // Multilinear extensions to arbitrary vectors.
  Vec D(const Vec& m) const {
    Vec out = zero_vec(n0());
    for (std::size_t i = 0; i < m.size(); ++i) axpy(out, m[i], d[i]);
    return out;
  }

  Vec b00(const Vec& x, const Vec& y) const { return bilinear(l2_00, x, y, n0()); }
  Vec b01(const Vec& x, const Vec& m) const { return bilinear(l2_01, x, m, n1()); }
  Vec b10(const Vec& m, const Vec& x) const { return bilinear(l2_10, m, x, n1()); }

  Vec L3(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out = zero_vec(n1());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        Rational c = x[i] * y[j];
        for (std::size_t k = 0; k < z.size(); ++k)
          if (!z[k].is_zero()) axpy(out, c * z[k], l3[i][j][k]);
      }
    }
    return out;
  }

 private:
  static Vec bilinear(const std::vector<std::vector<Vec>>& t, const Vec& a, const Vec& b,
                      std::size_t out_dim) {
    Vec out = zero_vec(out_dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) axpy(out, a[i] * b[j], t[i][j]);
    }
    return out;
  }
};

/// Checks conditions (a)-(f) on all basis tuples.
inline ViolationReport verify_leibniz2(const Leibniz2Structure& L) {
  L.validate();
  ViolationReport r;
  const std::size_t n0 = L.n0(), n1 = L.n1();
  auto e0 = [&](std::size_t i) { return unit_vec(n0, i); };
  auto e1 = [&](std::size_t i) { return unit_vec(n1, i); };
  const auto& l0 = L.v0;
  const auto& l1 = L.v1;

  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t m = 0; m < n1; ++m) {
      // (a) d l2(x,m) = l2(x,dm)
      r.check("a", {l0[x], l1[m]}, L.D(L.b01(e0(x), e1(m))) - L.b00(e0(x), L.d[m]), l0);
      // (b) d l2(m,x) = l2(dm,x)
      r.check("b", {l1[m], l0[x]}, L.D(L.b10(e1(m), e0(x))) - L.b00(L.d[m], e0(x)), l0);
    }
  for (std::size_t m = 0; m < n1; ++m)
    for (std::size_t n = 0; n < n1; ++n)
      // (c) l2(dm,n) = l2(m,dn)
      r.check("c", {l1[m], l1[n]}, L.b01(L.d[m], e1(n)) - L.b10(e1(m), L.d[n]), l1);

  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t z = 0; z < n0; ++z) {
        Vec X = e0(x), Y = e0(y), Z = e0(z);
        // (d) d l3(x,y,z) = l2(x,l2(y,z)) - l2(l2(x,y),z) - l2(y,l2(x,z))
        Vec jac = L.b00(X, L.b00(Y, Z)) - L.b00(L.b00(X, Y), Z) - L.b00(Y, L.b00(X, Z));
        r.check("d", {l0[x], l0[y], l0[z]}, L.D(L.L3(X, Y, Z)) - jac, l0);
      }

  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t m = 0; m < n1; ++m) {
        Vec X = e0(x), Y = e0(y), M = e1(m);
        Vec dm = L.d[m];
        Vec e1r = L.b01(X, L.b01(Y, M)) - L.b01(L.b00(X, Y), M) - L.b01(Y, L.b01(X, M));
        r.check("e1", {l0[x], l0[y], l1[m]}, L.L3(X, Y, dm) - e1r, l1);
        Vec e2r = L.b01(X, L.b10(M, Y)) - L.b10(L.b01(X, M), Y) - L.b10(M, L.b00(X, Y));
        r.check("e2", {l0[x], l1[m], l0[y]}, L.L3(X, dm, Y) - e2r, l1);
        Vec e3r = L.b10(M, L.b00(X, Y)) - L.b10(L.b10(M, X), Y) - L.b01(X, L.b10(M, Y));
        r.check("e3", {l1[m], l0[x], l0[y]}, L.L3(dm, X, Y) - e3r, l1);
      }

  for (std::size_t w = 0; w < n0; ++w)
    for (std::size_t x = 0; x < n0; ++x)
      for (std::size_t y = 0; y < n0; ++y)
        for (std::size_t z = 0; z < n0; ++z) {
          Vec W = e0(w), X = e0(x), Y = e0(y), Z = e0(z);
          Vec f = L.b01(W, L.L3(X, Y, Z)) - L.b01(X, L.L3(W, Y, Z)) + L.b01(Y, L.L3(W, X, Z)) +
                  L.b10(L.L3(W, X, Y), Z) - L.L3(L.b00(W, X), Y, Z) - L.L3(X, L.b00(W, Y), Z) -
                  L.L3(X, Y, L.b00(W, Z)) + L.L3(W, L.b00(X, Y), Z) + L.L3(W, Y, L.b00(X, Z)) -
                  L.L3(W, X, L.b00(Y, Z));
          r.check("f", {l0[w], l0[x], l0[y], l0[z]}, f, l1);
        }
  return r;
}

}  // namespace qp3
