#pragma once

// Brackets on Sym(𝒜[-2]) for a split Lie 2-algebroid with structure
// function μ. Elements are polynomials in the base coordinates and the
// A_0 (degree 2) and A_{-1} (degree 1) fiber variables, so the symmetric
// degree equals the polynomial degree.
//
//   [P]_S = -{μ2,P}
//   [P,Q]_S = (-1)^{k(l+1)} {Q,{P,μ134}}      k = |P|, l = |Q|
//   [P,Q,R]_S = {R,{Q,{P,μ5}}}

#include "qp3/lie2algebroid.hpp"

namespace qp3 {

class Schouten {
 public:
  explicit Schouten(Lie2Algebroid L) : L_(std::move(L)) {
    const auto& c = L_.chart();
    allowed_.assign(c.env()->size(), false);
    for (auto v : c.base_variables()) allowed_[v] = true;
    for (auto v : L_.a0_vars()) allowed_[v] = true;
    for (auto v : L_.a1_vars()) allowed_[v] = true;
  }

  const Lie2Algebroid& algebroid() const { return L_; }

  /// Symmetric degree; throws on inhomogeneous input or foreign variables.
  int degree(const GPoly& P) const {
    for (const auto& [e, coeff] : P.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] && !allowed_[i])
          throw ShapeError("Schouten argument uses a variable outside Sym(A[-2])", to_string(P));
    if (P.is_zero()) return 0;
    auto parts = P.homogeneous_parts();
    if (parts.size() != 1) {
      std::vector<int> ds;
      for (const auto& [d, part] : parts) ds.push_back(d);
      throw InhomogeneousError(ds);
    }
    return parts.begin()->first;
  }

  GPoly d(const GPoly& P) const {
    degree(P);
    return -poisson(L_.chart(), L_.mu().low(), P);
  }

  GPoly bracket(const GPoly& P, const GPoly& Q) const {
    int k = degree(P), l = degree(Q);
    GPoly r = poisson(L_.chart(), Q, poisson(L_.chart(), P, L_.mu().mid()));
    return (k * (l + 1)) % 2 ? -r : r;
  }

  GPoly triple(const GPoly& P, const GPoly& Q, const GPoly& R) const {
    degree(P);
    degree(Q);
    degree(R);
    const auto& c = L_.chart();
    return poisson(c, R, poisson(c, Q, poisson(c, P, L_.mu().top())));
  }

 private:
  Lie2Algebroid L_;
  std::vector<bool> allowed_;
};

}  // namespace qp3
