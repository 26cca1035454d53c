#pragma once

// Lie algebroids as degree-2 QP structures on T*[2]A[1] with coordinates
// (x, xi^, th_, p): μ = ρ^i_b p_i ξ^b + 1/2 c^a_bc ξ^b ξ^c θ_a.
// Sections of A are th_-linear; [X,Y] = {Y,{X,μ}} and a(X)f = {f,{X,μ}}.

#include "qp3/chart.hpp"
#include "qp3/linf.hpp"
#include "qp3/sections.hpp"

namespace qp3 {

class DerivedLieAlgebroid {
 public:
  DerivedLieAlgebroid(DarbouxChart chart, GPoly mu) : c_(std::move(chart)), mu_(std::move(mu)) {
    if (c_.n() != 2) throw ChartError("Lie algebroid brackets need a degree-2 chart");
    sec_ = c_.variables_of_family("th_");
    if (!mu_.is_zero() && degree_of(mu_) != 3) throw DegreeError("structure function must have degree 3");
  }

  const DarbouxChart& chart() const { return c_; }
  const GPoly& mu() const { return mu_; }
  const std::vector<std::size_t>& section_vars() const { return sec_; }

  bool is_section(const GPoly& f) const { return is_section_of(c_, f, sec_); }

  GPoly bracket(const GPoly& x, const GPoly& y) const {
    need(is_section(x), "bracket", x);
    need(is_section(y), "bracket", y);
    GPoly out = poisson(c_, y, poisson(c_, x, mu_));
    if (!is_section(out)) throw StructureError("bracket: result outside its section class: " + to_string(out));
    return out;
  }

  GPoly anchor(const GPoly& x, const GPoly& f) const {
    need(is_section(x), "anchor", x);
    need(is_function(c_, f), "anchor", f);
    return poisson(c_, f, poisson(c_, x, mu_));
  }

  /// Structure constants of the basis brackets; they must be constant.
  LInfStructure structure_constants() const {
    std::vector<std::string> labels;
    for (auto v : sec_) labels.push_back((*c_.env())[v].name);
    LInfStructure g(GradedSpace({{0, labels}}));
    for (std::size_t i = 0; i < sec_.size(); ++i)
      for (std::size_t j = i + 1; j < sec_.size(); ++j)
        g.set(2, {labels[i], labels[j]},
              constant_coordinates(c_, bracket(GPoly::variable(c_.env(), sec_[i]), GPoly::variable(c_.env(), sec_[j])),
                                   sec_));
    return g;
  }

 private:
  void need(bool ok, const char* op, const GPoly& f) const {
    if (!ok) throw StructureError(std::string(op) + ": argument outside its section class: " + to_string(f));
  }

  DarbouxChart c_;
  GPoly mu_;
  std::vector<std::size_t> sec_;
};

inline DerivedLieAlgebroid derive_lie_algebroid(const DarbouxChart& c, const GPoly& mu,
                                                bool allow_master_failure = false) {
  if (!allow_master_failure) {
    GPoly r = master_residual(c, mu);
    if (!r.is_zero()) throw MasterEquationError("{mu,mu} = " + to_string(r));
  }
  return DerivedLieAlgebroid(c, mu);
}

/// μ = 1/2 c^a_bc ξ^b ξ^c θ_a for a Lie algebra concentrated in degree 0;
/// basis element b corresponds to th_{b+1}.
inline GPoly mu_from_lie_algebra(const DarbouxChart& c, const LInfStructure& g) {
  const auto& s = g.space;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.degree(i) != 0) throw StructureError("mu_from_lie_algebra needs a Lie algebra in degree 0");
  if (c.variables_of_family("th_").size() != s.dim()) throw ChartError("chart rank does not match the algebra");
  auto v = [&](const char* fam, std::size_t k) { return c.var(fam + std::to_string(k + 1)); };
  GPoly mu = c.zero();
  for (std::size_t b = 0; b < s.dim(); ++b)
    for (std::size_t cc = 0; cc < s.dim(); ++cc) {
      Vec val = g.brackets[2].eval(s, {b, cc});
      for (std::size_t a = 0; a < s.dim(); ++a)
        if (!val[a].is_zero()) mu += Rational(1, 2) * val[a] * (v("xi^", b) * v("xi^", cc) * v("th_", a));
    }
  return mu;
}

}  // namespace qp3
