#pragma once

// Text and structured (JSON) forms of polynomials, reports and operator
// tables. The structured form carries the same fields as the text.

#include "qp3/model.hpp"
#include "qp3/report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qp3 {

using Json = nlohmann::ordered_json;

/// "PASS (N identities checked)" or "FAIL (k violations, N identities checked)".
inline std::string report_status(const ViolationReport& r) {
  if (r.passed()) return "PASS (" + std::to_string(r.checked) + " identities checked)";
  return "FAIL (" + std::to_string(r.violations.size()) + " violations, " + std::to_string(r.checked) +
         " identities checked)";
}

inline std::string emit_violation(const Violation& v) {
  std::string out = v.identity;
  if (!v.tuple.empty()) {
    out += "(";
    for (std::size_t i = 0; i < v.tuple.size(); ++i) out += (i ? "," : "") + v.tuple[i];
    out += ")";
  }
  out += ":";
  if (!v.detail.empty()) {
    out += " " + v.detail;
  } else {
    for (const auto& [label, c] : v.residual) out += " " + label + "=" + to_string(c);
  }
  return out;
}

/// Status line, then one indented line per violation and per note.
inline std::string emit_report(const ViolationReport& r, std::size_t max_violations = 50) {
  std::string out = report_status(r) + "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < max_violations; ++i)
    out += "  " + emit_violation(r.violations[i]) + "\n";
  if (r.violations.size() > max_violations)
    out += "  ... " + std::to_string(r.violations.size() - max_violations) + " more\n";
  for (const auto& n : r.notes) out += "  note: " + n + "\n";
  return out;
}

inline Json to_json(const GPoly& f) {
  Json terms = Json::array();
  if (!f.is_zero()) {
    const VarEnv& env = *f.env();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
      Json powers = Json::object();
      for (std::size_t i = 0; i < it->first.size(); ++i)
        if (it->first[i]) powers[env[i].name] = int(it->first[i]);
      terms.push_back({{"coeff", to_string(it->second)}, {"powers", powers}});
    }
  }
  return {{"text", to_string(f)}, {"terms", terms}};
}

inline Json to_json(const Violation& v) {
  Json res = Json::object();
  for (const auto& [label, c] : v.residual) res[label] = to_string(c);
  Json j = {{"identity", v.identity}, {"tuple", v.tuple}, {"residual", res}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

inline Json to_json(const ViolationReport& r, std::size_t max_violations = 50) {
  Json vs = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < max_violations; ++i) vs.push_back(to_json(r.violations[i]));
  return {{"status", r.passed() ? "PASS" : "FAIL"},
          {"checked", r.checked},
          {"violation_count", r.violations.size()},
          {"violations", vs},
          {"notes", r.notes}};
}

/// One row of an operator table: op(args) = value.
struct TableEntry {
  std::string op;
  std::vector<std::string> args;
  std::string value;
};

inline std::string emit_entry(const TableEntry& e) {
  std::string out = e.op + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + e.args[i];
  return out + ") = " + e.value;
}

inline Json to_json(const TableEntry& e) { return {{"op", e.op}, {"args", e.args}, {"value", e.value}}; }

/// Nonzero brackets l1..l4 of a finite L-infinity algebra on basis tuples.
inline std::vector<TableEntry> linf_table(const LInfStructure& L) {
  std::vector<TableEntry> out;
  for (int k = 1; k <= 4; ++k)
    for (const auto& [args, v] : L.brackets[k].entries()) {
      TableEntry e{"l" + std::to_string(k), {}, emit_vector(v, L.space.labels())};
      for (auto a : args) e.args.push_back(L.space.label(a));
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace qp3
