#pragma once

// Shape decomposition of degree-(n+1) Hamiltonians on degree-3 charts.
//
// Families:
//   theta  by fiber degree:   (2)(2) | (1)p, (1)(1)(2) | (1)(1)(1)(1)
//   mu     on the graded chart: xi_ th^ | xi^ p, xi^ xi^ xi_, th_ xi^ th^ | xi^ xi^ xi^ th_
//   gamma  the same with (xi_, xi^) and (th^, th_) exchanged.
// Base coordinates may appear with any exponent.

#include "qp3/chart.hpp"

#include <array>
#include <string>
#include <vector>

namespace qp3 {

enum class Family { theta, mu, gamma };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::theta: return "theta";
    case Family::mu: return "mu";
    case Family::gamma: return "gamma";
  }
  return "?";
}

struct NamedPoly {
  std::string name;
  GPoly value;
};

struct StructureFunction {
  Family family = Family::theta;
  GPoly total;
  /// Low, middle and top parts: (theta2, theta13, theta4) and so on.
  std::array<GPoly, 3> parts;
  std::array<std::string, 3> part_names;
  /// The three master identities; all vanish iff {total, total} = 0.
  std::vector<NamedPoly> identities;

  const GPoly& low() const { return parts[0]; }
  const GPoly& mid() const { return parts[1]; }
  const GPoly& top() const { return parts[2]; }

  bool identities_vanish() const {
    for (const auto& i : identities)
      if (!i.value.is_zero()) return false;
    return true;
  }
};

namespace detail {

/// Role tag of a fiber variable inside a shape signature.
inline std::string shape_tag(const DarbouxChart& c, std::size_t i, Family fam) {
  if (c.is_momentum(i)) return "p";
  if (fam == Family::theta) return std::to_string(c.env()->degree(i));
  return variable_family((*c.env())[i].name);
}

/// Sorted multiset of tags of the fiber part of a monomial.
inline std::vector<std::string> shape_signature(const DarbouxChart& c, const Exponents& e,
                                                Family fam) {
  std::vector<std::string> sig;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i] || c.is_base(i)) continue;
    for (int k = 0; k < e[i]; ++k) sig.push_back(shape_tag(c, i, fam));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

inline std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Returns 0, 1, 2 for the part, or -1 outside the grammar.
inline int classify_shape(const std::vector<std::string>& sig, Family fam) {
  using V = std::vector<std::string>;
  std::array<std::vector<V>, 3> shapes;
  switch (fam) {
    case Family::theta:
      shapes = {std::vector<V>{{"2", "2"}},
                std::vector<V>{{"1", "p"}, {"1", "1", "2"}},
                std::vector<V>{{"1", "1", "1", "1"}}};
      break;
    case Family::mu:
      shapes = {std::vector<V>{{"th^", "xi_"}},
                std::vector<V>{{"p", "xi^"}, {"xi^", "xi^", "xi_"}, {"th^", "th_", "xi^"}},
                std::vector<V>{{"th_", "xi^", "xi^", "xi^"}}};
      break;
    case Family::gamma:
      shapes = {std::vector<V>{{"th^", "xi_"}},
                std::vector<V>{{"p", "th_"}, {"th^", "th_", "th_"}, {"th_", "xi^", "xi_"}},
                std::vector<V>{{"th_", "th_", "th_", "xi^"}}};
      break;
  }
  for (int part = 0; part < 3; ++part)
    for (const auto& s : shapes[part])
      if (sorted(s) == sig) return part;
  return -1;
}

}  // namespace detail

/// Bracket identities of a three-part structure function (low, mid, top):
/// {mid, low}, 1/2 {mid, mid} + {low, top}, {mid, top}.
inline std::vector<NamedPoly> master_identities(const DarbouxChart& c,
                                                const std::array<GPoly, 3>& p,
                                                const std::array<std::string, 3>& names) {
  std::vector<NamedPoly> out;
  out.push_back({"{" + names[1] + "," + names[0] + "}", poisson(c, p[1], p[0])});
  out.push_back({"1/2{" + names[1] + "," + names[1] + "}+{" + names[0] + "," + names[2] + "}",
                 Rational(1, 2) * poisson(c, p[1], p[1]) + poisson(c, p[0], p[2])});
  out.push_back({"{" + names[1] + "," + names[2] + "}", poisson(c, p[1], p[2])});
  return out;
}

inline StructureFunction decompose(const DarbouxChart& c, const GPoly& theta, Family fam) {
  if (theta.env() && theta.env() != c.env())
    throw EnvironmentError("decompose: polynomial not in chart environment");
  if (!theta.is_zero()) {
    int d = degree_of(theta);
    if (d != c.n() + 1)
      throw DegreeError("structure function needs degree " + std::to_string(c.n() + 1) +
                        ", got " + std::to_string(d));
  }
  StructureFunction sf;
  sf.family = fam;
  sf.total = theta.env() ? theta : c.zero();
  std::string base = family_name(fam);
  sf.part_names = {base + "2", base + (fam == Family::theta ? "13" : "134"),
                   base + (fam == Family::theta ? "4" : "5")};
  for (auto& p : sf.parts) p = c.zero();
  for (const auto& [e, coeff] : theta.terms()) {
    int part = detail::classify_shape(detail::shape_signature(c, e, fam), fam);
    if (part < 0)
      throw ShapeError(std::string("monomial outside the ") + family_name(fam) + " shape grammar",
                       to_string(GPoly::monomial(c.env(), e, coeff)));
    sf.parts[part].add_term(e, coeff);
  }
  sf.identities = master_identities(c, sf.parts, sf.part_names);
  return sf;
}

}  // namespace qp3
