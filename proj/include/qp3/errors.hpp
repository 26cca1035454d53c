#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qp3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown variable, duplicate declaration, or operands from different
/// variable environments.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

/// Degree requested of the zero polynomial.
class DegreeUndefined : public Error {
 public:
  DegreeUndefined() : Error("degree undefined: zero polynomial") {}
};

class InhomogeneousError : public Error {
 public:
  explicit InhomogeneousError(std::vector<int> degrees)
      : Error(make_message(degrees)), degrees_(std::move(degrees)) {}
  const std::vector<int>& degrees() const { return degrees_; }

 private:
  static std::string make_message(const std::vector<int>& d) {
    std::string m = "inhomogeneous polynomial: degrees";
    for (int x : d) m += " " + std::to_string(x);
    return m;
  }
  std::vector<int> degrees_;
};

/// A value has the wrong degree for the requested operation.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Chart declarations violating the pairing rules.
class ChartError : public Error {
 public:
  using Error::Error;
};

/// A monomial outside the shape grammar of a decomposition family.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& msg, std::string term)
      : Error(msg + ": " + term), term_(std::move(term)) {}
  const std::string& term() const { return term_; }

 private:
  std::string term_;
};

/// Inconsistent finite structure data (arity, dimensions, degrees).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Term-count cap exceeded during a product.
class TermLimitError : public Error {
 public:
  using Error::Error;
};

/// Derived-bracket construction requested from a Hamiltonian that fails
/// the classical master equation.
class MasterEquationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qp3
