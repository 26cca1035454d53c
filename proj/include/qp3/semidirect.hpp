#pragma once

// Semidirect product of a Lie 2-algebra g_{-1} -> g_0 with its dual via
// the coadjoint representation:
//   d_0 = g_0 + g_{-1}^*,  d_{-1} = g_{-1} + g_0^*,  ∂ = l1 + l1^*.

#include "qp3/linf.hpp"
#include "qp3/lwx_point.hpp"

namespace qp3 {

inline std::string dual_label(const std::string& l) { return l + "*"; }

inline LWXPointStructure semidirect_double(const LInfStructure& g, bool enforce = true) {
  const GradedSpace& s = g.space;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.degree(i) != 0 && s.degree(i) != -1)
      throw StructureError("semidirect_double: input is not a 2-term structure");
  if (!g.brackets[4].empty()) throw StructureError("semidirect_double: l4 must vanish");
  if (enforce) {
    auto rep = verify_linf(g, 4);
    if (!rep.passed())
      throw StructureError("semidirect_double: input fails the L-infinity identities (" +
                           std::to_string(rep.violations.size()) + " violations)");
  }
  const auto x = s.indices_of_degree(0);
  const auto m = s.indices_of_degree(-1);
  const std::size_t n0 = x.size(), n1 = m.size();

  std::vector<std::string> e0, e1;
  for (auto i : x) e0.push_back(s.label(i));
  for (auto a : m) e0.push_back(dual_label(s.label(a)));
  for (auto a : m) e1.push_back(s.label(a));
  for (auto i : x) e1.push_back(dual_label(s.label(i)));
  LWXPointStructure W = LWXPointStructure::zero(e0, e1);
  auto& L = W.ops;

  // E_0 index: x_i -> i, m_a^* -> n0 + a.  E_{-1} index: m_a -> a, x_i^* -> n1 + i.
  auto l1 = [&](std::size_t a) { return g.brackets[1].eval(s, {m[a]}); };
  auto l2 = [&](std::size_t u, std::size_t v) { return g.brackets[2].eval(s, {u, v}); };
  auto l3 = [&](std::size_t u, std::size_t v, std::size_t w) {
    return g.brackets[3].eval(s, {u, v, w});
  };

  for (std::size_t a = 0; a < n1; ++a) {
    Vec v = l1(a);
    for (std::size_t i = 0; i < n0; ++i) {
      L.d[a][i] = v[x[i]];
      L.d[n1 + i][n0 + a] = v[x[i]];  // <l1^* x_i^*, m_a> = <x_i^*, l1 m_a>
    }
  }
  for (std::size_t i = 0; i < n0; ++i) {
    W.S[i][n1 + i] = 1;
  }
  for (std::size_t a = 0; a < n1; ++a) W.S[n0 + a][a] = 1;

  for (std::size_t i = 0; i < n0; ++i) {
    for (std::size_t j = 0; j < n0; ++j) {
      Vec v = l2(x[i], x[j]);
      for (std::size_t k = 0; k < n0; ++k) L.l2_00[i][j][k] = v[x[k]];
      // x_i ∘ x_j^* = ad0*_{x_i} x_j^*, <., x_k> = -<x_j^*, l2(x_i, x_k)>
      for (std::size_t k = 0; k < n0; ++k) L.l2_01[i][n1 + j][n1 + k] = -l2(x[i], x[k])[x[j]];
    }
    for (std::size_t b = 0; b < n1; ++b) {
      Vec v = l2(x[i], m[b]);
      // x_i ∘ m_b^* = ad0*_{x_i} m_b^*
      for (std::size_t c = 0; c < n1; ++c) {
        Rational coeff = -l2(x[i], m[c])[m[b]];
        L.l2_00[i][n0 + b][n0 + c] = coeff;
        L.l2_00[n0 + b][i][n0 + c] = -coeff;
      }
      for (std::size_t c = 0; c < n1; ++c) L.l2_01[i][b][c] = v[m[c]];
    }
  }
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b)
      // m_a^* ∘ m_b = -ad1*_{m_b} m_a^*, <ad1*_{m_b} m_a^*, x_k> = -<m_a^*, l2(m_b, x_k)>
      for (std::size_t k = 0; k < n0; ++k) L.l2_01[n0 + a][b][n1 + k] = l2(m[b], x[k])[m[a]];
  for (std::size_t u = 0; u < n0 + n1; ++u)
    for (std::size_t v = 0; v < n1 + n0; ++v) L.l2_10[v][u] = Rational(-1) * L.l2_01[u][v];

  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j) {
      for (std::size_t k = 0; k < n0; ++k) {
        Vec v = l3(x[i], x[j], x[k]);
        for (std::size_t c = 0; c < n1; ++c) L.l3[i][j][k][c] = v[m[c]];
      }
      for (std::size_t c = 0; c < n1; ++c) {
        // ad3*_{x_i,x_j} m_c^*, <., x_k> = -<m_c^*, l3(x_i, x_j, x_k)>
        Vec ad = zero_vec(n1 + n0);
        for (std::size_t k = 0; k < n0; ++k) ad[n1 + k] = -l3(x[i], x[j], x[k])[m[c]];
        L.l3[i][j][n0 + c] = ad;   // ad3*_{x,y} zeta
        L.l3[n0 + c][i][j] = ad;   // ad3*_{y,z} alpha
        L.l3[j][n0 + c][i] = ad;   // ad3*_{z,x} beta
      }
    }
  return W;
}

}  // namespace qp3
