#pragma once

// The Lie 3-algebra underlying an LWX 2-algebroid over a point:
// e = e_0 + e_{-1} + e_{-2} with e_{-2} the constants.

#include "qp3/linf.hpp"
#include "qp3/lwx_point.hpp"

namespace qp3 {

/// Label of the basis vector spanning e_{-2}.
inline const std::string kUnitLabel = "1";

inline LInfStructure skew_symmetrize(const LWXPointStructure& W, bool enforce = true) {
  if (enforce) {
    auto rep = verify_lwx_point(W);
    if (!rep.passed())
      throw StructureError("skew_symmetrize: input fails the LWX axioms (" +
                           std::to_string(rep.violations.size()) + " violations)");
  }
  const std::size_t n0 = W.n0(), n1 = W.n1();
  GradedSpace space({{0, W.ops.v0}, {-1, W.ops.v1}, {-2, {kUnitLabel}}});
  LInfStructure L(space);
  const std::size_t unit = n0 + n1;
  auto lift = [&](const Vec& e) {
    Vec v = e;
    v.push_back(0);
    return v;
  };
  auto scalar = [&](const Rational& c) {
    Vec v = zero_vec(space.dim());
    v[unit] = c;
    return v;
  };
  auto b = [&](std::size_t i) { return W.basis(i); };

  for (std::size_t m = n0; m < unit; ++m) L.brackets[1].set(space, {m}, lift(W.partial(b(m))));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < unit; ++j) L.brackets[2].set(space, {i, j}, lift(W.skew(b(i), b(j))));
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j) {
      for (std::size_t k = j + 1; k < n0; ++k)
        L.brackets[3].set(space, {i, j, k}, lift(W.omega(b(i), b(j), b(k))));
      for (std::size_t m = n0; m < unit; ++m)
        L.brackets[3].set(space, {i, j, m}, scalar(-W.T(b(i), b(j), b(m))));
    }
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j)
      for (std::size_t k = j + 1; k < n0; ++k)
        for (std::size_t l = k + 1; l < n0; ++l)
          L.brackets[4].set(space, {i, j, k, l}, scalar(W.s(W.omega(b(i), b(j), b(k)), b(l))));
  return L;
}

}  // namespace qp3
