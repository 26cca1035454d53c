#pragma once

#include "qp3/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qp3 {

struct Violation {
  std::string identity;
  std::vector<std::string> tuple;
  /// Nonzero residual components as (basis label, coefficient). Scalar
  /// residuals use the label "1"; polynomial residuals carry their text.
  std::vector<std::pair<std::string, Rational>> residual;
  std::string detail;
};

struct ViolationReport {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  /// Sampling bounds and other caveats stated alongside the verdict.
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }

  void merge(ViolationReport other, const std::string& prefix = {}) {
    checked += other.checked;
    for (auto& v : other.violations) {
      if (!prefix.empty()) v.identity = prefix + v.identity;
      violations.push_back(std::move(v));
    }
    for (auto& n : other.notes) notes.push_back(std::move(n));
  }

  /// Counts one identity instance and records it when the residual is nonzero.
  void check(const std::string& id, std::vector<std::string> tuple, const Vec& residual,
             const std::vector<std::string>& labels) {
    ++checked;
    if (is_zero(residual)) return;
    Violation v{id, std::move(tuple), {}, {}};
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (!residual[i].is_zero()) v.residual.emplace_back(labels[i], residual[i]);
    violations.push_back(std::move(v));
  }

  void check_scalar(const std::string& id, std::vector<std::string> tuple, const Rational& r) {
    ++checked;
    if (r.is_zero()) return;
    violations.push_back({id, std::move(tuple), {{"1", r}}, {}});
  }
};

}  // namespace qp3
