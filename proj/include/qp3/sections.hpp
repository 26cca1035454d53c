#pragma once

// Sections as fiber-linear polynomials: a section of a bundle whose fiber
// coordinates are the variables v_1..v_r is sum_a f_a(q) v_a with
// polynomial coefficients in the base coordinates.

#include "qp3/chart.hpp"
#include "qp3/linalg.hpp"
#include "qp3/report.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace qp3 {

/// True when every monomial uses base variables only.
inline bool is_function(const DarbouxChart& c, const GPoly& f) {
  for (const auto& [e, coeff] : f.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && !c.is_base(i)) return false;
  return true;
}

/// True when every monomial is (base monomial) * v for a single v in `vars`.
inline bool is_section_of(const DarbouxChart& c, const GPoly& f, const std::vector<std::size_t>& vars) {
  std::vector<bool> allowed(c.env()->size(), false);
  for (auto v : vars) allowed[v] = true;
  for (const auto& [e, coeff] : f.terms()) {
    int fiber = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i] || c.is_base(i)) continue;
      if (!allowed[i] || e[i] != 1) return false;
      ++fiber;
    }
    if (fiber != 1) return false;
  }
  return true;
}

/// Coefficient functions f_a of a section, one per variable in `vars`.
inline std::vector<GPoly> section_coefficients(const DarbouxChart& c, const GPoly& f,
                                               const std::vector<std::size_t>& vars) {
  std::vector<GPoly> out(vars.size(), c.zero());
  for (const auto& [e, coeff] : f.terms()) {
    bool found = false;
    for (std::size_t a = 0; a < vars.size() && !found; ++a) {
      if (!e[vars[a]]) continue;
      Exponents base = e;
      base[vars[a]] = 0;
      // the fiber variable sits to the right of every base variable in the
      // product f_a * v_a; base variables are even so no sign appears
      out[a].add_term(base, coeff);
      found = true;
    }
    if (!found) throw StructureError("section_coefficients: term outside the section class");
  }
  return out;
}

/// Constant coordinates of a section with constant coefficients.
inline Vec constant_coordinates(const DarbouxChart& c, const GPoly& f,
                                const std::vector<std::size_t>& vars) {
  Vec out = zero_vec(vars.size());
  auto coeffs = section_coefficients(c, f, vars);
  for (std::size_t a = 0; a < vars.size(); ++a) {
    if (coeffs[a].is_zero()) continue;
    const auto& [e, v] = *coeffs[a].terms().begin();
    if (coeffs[a].size() != 1 || std::any_of(e.begin(), e.end(), [](auto x) { return x != 0; }))
      throw StructureError("constant_coordinates: nonconstant coefficient");
    out[a] = v;
  }
  return out;
}

/// Base monomials of total degree <= bound, lowest degree first.
inline std::vector<GPoly> base_monomials(const DarbouxChart& c, int bound) {
  auto base = c.base_variables();
  std::vector<GPoly> out;
  Exponents e(c.env()->size(), 0);
  for (int d = 0; d <= bound; ++d) {
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
      if (left == 0) {
        out.push_back(GPoly::monomial(c.env(), e, 1));
        return;
      }
      for (std::size_t k = from; k < base.size(); ++k) {
        ++e[base[k]];
        self(self, k, left - 1);
        --e[base[k]];
      }
    };
    rec(rec, 0, d);
  }
  return out;
}

/// Total degree of a base monomial.
inline int base_degree(const GPoly& m) {
  if (m.is_zero()) return 0;
  int d = 0;
  for (auto x : m.terms().begin()->first) d += x;
  return d;
}

/// Basis sections q^m * v with |m| <= bound, tagged with |m|.
struct SampleSection {
  GPoly value;
  int qdeg = 0;
  std::string label;
};

inline std::vector<SampleSection> sample_sections(const DarbouxChart& c, const std::vector<std::size_t>& vars,
                                                  int bound) {
  std::vector<SampleSection> out;
  for (const auto& m : base_monomials(c, bound))
    for (auto v : vars) {
      GPoly s = m * GPoly::variable(c.env(), v);
      std::string ms = to_string(m);
      out.push_back({s, base_degree(m), ms == "1" ? (*c.env())[v].name : ms + " " + (*c.env())[v].name});
    }
  return out;
}

inline std::vector<SampleSection> sample_functions(const DarbouxChart& c, int bound) {
  std::vector<SampleSection> out;
  for (const auto& m : base_monomials(c, bound)) out.push_back({m, base_degree(m), to_string(m)});
  return out;
}

/// Records a polynomial identity instance; the residual is listed term by term.
inline void check_poly(ViolationReport& r, const std::string& id, std::vector<std::string> tuple,
                       const GPoly& residual) {
  ++r.checked;
  if (residual.is_zero()) return;
  Violation v{id, std::move(tuple), {}, to_string(residual)};
  for (const auto& [e, c] : residual.terms()) {
    std::string t = to_string(GPoly::monomial(residual.env(), e, 1));
    v.residual.emplace_back(t, c);
  }
  r.violations.push_back(std::move(v));
}

}  // namespace qp3
