#pragma once

// Batch commands over model documents. A command is a word list such as
// {"verify", "linf", "g"}; the same lists appear as task directives in
// model files. Output is a sequence of records, printed as text or as one
// JSON object per line.

#include "qp3/bialgebroid.hpp"
#include "qp3/degree2.hpp"
#include "qp3/emit.hpp"
#include "qp3/semidirect.hpp"
#include "qp3/skew.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qp3 {

/// Bad command line or unknown name in a command; exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class OutputFormat { text, structured };

struct RunConfig {
  std::vector<std::string> command;
  std::vector<std::string> inputs;
  int nmax = 5;
  int qdeg_bound = 2;
  bool allow_master_failure = false;
  bool warn_only = false;
  OutputFormat format = OutputFormat::text;
  unsigned workers = 1;
};

class RecordWriter {
 public:
  RecordWriter(std::ostream& out, OutputFormat f) : out_(out), f_(f) {}

  void task(const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += (s.empty() ? "" : " ") + w;
    if (text()) out_ << "== " << s << "\n";
    else emit({{"record", "task"}, {"command", words}});
  }

  void poly(const std::string& name, const GPoly& f) {
    if (text()) out_ << name << " = " << to_string(f) << "\n";
    else emit({{"record", "poly"}, {"name", name}, {"value", to_json(f)}});
  }

  void value(const std::string& name, const std::string& v) {
    if (text()) out_ << name << ": " << v << "\n";
    else emit({{"record", "value"}, {"name", name}, {"value", v}});
  }

  void report(const std::string& name, const ViolationReport& r) {
    if (!r.passed()) failed_ = true;
    if (text()) out_ << name << ": " << emit_report(r);
    else emit({{"record", "report"}, {"name", name}, {"report", to_json(r)}});
  }

  void table(const std::string& name, const std::vector<TableEntry>& rows) {
    if (text()) {
      out_ << "table " << name << " (" << rows.size() << " nonzero entries)\n";
      for (const auto& r : rows) out_ << "  " << emit_entry(r) << "\n";
    } else {
      Json j = Json::array();
      for (const auto& r : rows) j.push_back(to_json(r));
      emit({{"record", "table"}, {"name", name}, {"entries", j}});
    }
  }

  void fail() { failed_ = true; }
  bool failed() const { return failed_; }

 private:
  bool text() const { return f_ == OutputFormat::text; }
  void emit(const Json& j) { out_ << j.dump() << "\n"; }

  std::ostream& out_;
  OutputFormat f_;
  bool failed_ = false;
};

namespace cli_detail {

inline std::string name_of(const DarbouxChart& c, std::size_t v) { return (*c.env())[v].name; }

inline void add(std::vector<TableEntry>& t, std::string op, std::vector<std::string> args, const GPoly& v) {
  if (!v.is_zero()) t.push_back({std::move(op), std::move(args), to_string(v)});
}

/// Operators of a derived LWX 2-algebroid on basis sections.
inline std::vector<TableEntry> lwx_table(const DerivedLWX& W) {
  const auto& c = W.chart();
  std::vector<TableEntry> t;
  auto var = [&](std::size_t i) { return GPoly::variable(c.env(), i); };
  std::vector<std::size_t> all = W.e0_vars();
  all.insert(all.end(), W.e1_vars().begin(), W.e1_vars().end());
  for (auto m : W.e1_vars()) add(t, "partial", {name_of(c, m)}, W.partial(var(m)));
  for (auto x : W.e0_vars())
    for (auto q : c.base_variables()) add(t, "rho", {name_of(c, x), name_of(c, q)}, W.rho(var(x), var(q)));
  for (auto q : c.base_variables()) add(t, "D", {name_of(c, q)}, W.D(var(q)));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      add(t, "pair", {name_of(c, all[i]), name_of(c, all[j])}, W.pair(var(all[i]), var(all[j])));
  for (auto a : all)
    for (auto b : all) add(t, "circ", {name_of(c, a), name_of(c, b)}, W.circ(var(a), var(b)));
  for (auto a : W.e0_vars())
    for (auto b : W.e0_vars())
      for (auto d : W.e0_vars())
        add(t, "Omega", {name_of(c, a), name_of(c, b), name_of(c, d)}, W.omega(var(a), var(b), var(d)));
  return t;
}

inline std::vector<TableEntry> lie2_table(const Lie2Algebroid& L) {
  const auto& c = L.chart();
  std::vector<TableEntry> t;
  auto var = [&](std::size_t i) { return GPoly::variable(c.env(), i); };
  std::vector<std::size_t> all = L.a0_vars();
  all.insert(all.end(), L.a1_vars().begin(), L.a1_vars().end());
  for (auto m : L.a1_vars()) add(t, "l1", {name_of(c, m)}, L.l1(var(m)));
  for (auto a : all)
    for (auto b : all) {
      if (L.is_x1(var(a)) && L.is_x1(var(b))) continue;
      add(t, "l2", {name_of(c, a), name_of(c, b)}, L.l2(var(a), var(b)));
    }
  const auto& x = L.a0_vars();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      for (std::size_t k = j + 1; k < x.size(); ++k)
        add(t, "l3", {name_of(c, x[i]), name_of(c, x[j]), name_of(c, x[k])}, L.l3(var(x[i]), var(x[j]), var(x[k])));
  for (auto a : x)
    for (auto q : c.base_variables()) add(t, "anchor", {name_of(c, a), name_of(c, q)}, L.anchor(var(a), var(q)));
  return t;
}

inline std::vector<TableEntry> lie_table(const DerivedLieAlgebroid& A) {
  const auto& c = A.chart();
  std::vector<TableEntry> t;
  auto var = [&](std::size_t i) { return GPoly::variable(c.env(), i); };
  const auto& s = A.section_vars();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      add(t, "bracket", {name_of(c, s[i]), name_of(c, s[j])}, A.bracket(var(s[i]), var(s[j])));
  for (auto a : s)
    for (auto q : c.base_variables()) add(t, "anchor", {name_of(c, a), name_of(c, q)}, A.anchor(var(a), var(q)));
  return t;
}

inline std::vector<TableEntry> point_table(const LWXPointStructure& W) {
  std::vector<TableEntry> t;
  const auto& o = W.ops;
  auto put = [&](const char* op, std::vector<std::string> args, const Vec& v, const std::vector<std::string>& l) {
    if (!is_zero(v)) t.push_back({op, std::move(args), emit_vector(v, l)});
  };
  for (std::size_t m = 0; m < W.n1(); ++m) put("partial", {o.v1[m]}, o.d[m], o.v0);
  for (std::size_t x = 0; x < W.n0(); ++x)
    for (std::size_t y = 0; y < W.n0(); ++y) put("circ", {o.v0[x], o.v0[y]}, o.l2_00[x][y], o.v0);
  for (std::size_t x = 0; x < W.n0(); ++x)
    for (std::size_t m = 0; m < W.n1(); ++m) put("circ", {o.v0[x], o.v1[m]}, o.l2_01[x][m], o.v1);
  for (std::size_t m = 0; m < W.n1(); ++m)
    for (std::size_t x = 0; x < W.n0(); ++x) put("circ", {o.v1[m], o.v0[x]}, o.l2_10[m][x], o.v1);
  for (std::size_t x = 0; x < W.n0(); ++x)
    for (std::size_t y = 0; y < W.n0(); ++y)
      for (std::size_t z = 0; z < W.n0(); ++z) put("Omega", {o.v0[x], o.v0[y], o.v0[z]}, o.l3[x][y][z], o.v1);
  for (std::size_t x = 0; x < W.n0(); ++x)
    for (std::size_t m = 0; m < W.n1(); ++m)
      if (!W.S[x][m].is_zero()) t.push_back({"pair", {o.v0[x], o.v1[m]}, to_string(W.S[x][m])});
  return t;
}

/// Residual and, on degree-3 charts, the decomposition identities of the
/// first shape family that fits.
inline ViolationReport master_report(const DarbouxChart& c, const std::string& name, const GPoly& theta,
                                     RecordWriter& w) {
  ViolationReport r;
  GPoly res = master_residual(c, theta);
  w.poly("{" + name + "," + name + "}", res);
  check_poly(r, "master", {name}, res);
  if (c.n() != 3) return r;
  for (Family fam : {Family::theta, Family::mu, Family::gamma}) {
    StructureFunction sf;
    try {
      sf = decompose(c, theta, fam);
    } catch (const ShapeError&) {
      continue;
    }
    for (int k = 0; k < 3; ++k) w.poly(sf.part_names[k], sf.parts[k]);
    for (const auto& id : sf.identities) check_poly(r, id.name, {name}, id.value);
    r.notes.push_back(std::string("decomposed in the ") + family_name(fam) + " family");
    if (sf.identities_vanish() != res.is_zero()) {
      ++r.checked;
      r.violations.push_back({"identities iff master", {name}, {}, "identities and total residual disagree"});
    }
    return r;
  }
  r.notes.push_back("no decomposition family fits this polynomial");
  return r;
}

}  // namespace cli_detail

class CommandRunner {
 public:
  CommandRunner(const ModelDocument& doc, const RunConfig& cfg, RecordWriter& w) : doc_(doc), cfg_(cfg), w_(w) {}

  void run(const std::vector<std::string>& words) {
    if (words.empty()) throw UsageError("empty command");
    const std::string& cmd = words[0];
    std::vector<std::string> rest(words.begin() + 1, words.end());
    if (cmd == "master") master(rest);
    else if (cmd == "verify") verify(rest);
    else if (cmd == "derive") derive(rest);
    else if (cmd == "skew") skew(rest);
    else if (cmd == "double") make_double(rest);
    else if (cmd == "check-bialgebroid") check_bialgebroid(rest);
    else throw UsageError("unknown command '" + cmd + "'");
  }

 private:
  void arity(const std::vector<std::string>& a, std::size_t n, const char* usage) const {
    if (a.size() != n) throw UsageError(std::string("usage: ") + usage);
  }

  const NamedPolynomial& poly(const std::string& n) const {
    if (auto p = doc_.poly(n)) return *p;
    throw UsageError("no polynomial named '" + n + "'");
  }
  const DarbouxChart& chart_of(const NamedPolynomial& p) const { return *doc_.chart(p.chart); }

  void master(const std::vector<std::string>& a) {
    std::vector<std::string> names = a;
    if (names.empty())
      for (const auto& p : doc_.polys) names.push_back(p.name);
    for (const auto& n : names) {
      const auto& p = poly(n);
      w_.report("master " + n, cli_detail::master_report(chart_of(p), n, p.value, w_));
    }
  }

  void verify(const std::vector<std::string>& a) {
    arity(a, 2, "verify linf|leibniz2|lwx NAME");
    if (a[0] == "linf") {
      auto L = doc_.linf_structure(a[1]);
      if (!L) throw UsageError("no linf structure named '" + a[1] + "'");
      w_.report("linf " + a[1], verify_linf(*L, cfg_.nmax, cfg_.workers));
    } else if (a[0] == "leibniz2") {
      auto L = doc_.leibniz2_structure(a[1]);
      if (!L) throw UsageError("no leibniz2 structure named '" + a[1] + "'");
      w_.report("leibniz2 " + a[1], verify_leibniz2(*L));
    } else if (a[0] == "lwx") {
      auto W = doc_.lwx_structure(a[1]);
      if (!W) throw UsageError("no lwx structure named '" + a[1] + "'");
      w_.report("lwx " + a[1], verify_lwx_point(*W));
    } else {
      throw UsageError("verify expects linf, leibniz2 or lwx");
    }
  }

  void derive(const std::vector<std::string>& a) {
    arity(a, 2, "derive lwx|lie2algebroid|lie-algebroid NAME");
    const auto& p = poly(a[1]);
    const auto& c = chart_of(p);
    if (a[0] == "lwx") {
      auto W = derive_lwx(c, p.value, cfg_.allow_master_failure);
      w_.table("lwx " + a[1], cli_detail::lwx_table(W));
      // the bounded sweep does not see higher coherences such as dΩ = 0
      ViolationReport m;
      check_poly(m, "master", {a[1]}, master_residual(c, p.value));
      w_.report("master " + a[1], m);
      w_.report("sweep " + a[1], lwx_property_sweep(W, cfg_.qdeg_bound, cfg_.workers));
    } else if (a[0] == "lie2algebroid") {
      auto L = derive_lie2algebroid(c, p.value, Lie2Roles::primal(), cfg_.allow_master_failure);
      w_.table("lie2algebroid " + a[1], cli_detail::lie2_table(L));
      ViolationReport r;
      for (const auto& id : L.mu().identities) check_poly(r, id.name, {a[1]}, id.value);
      w_.report("structure identities " + a[1], r);
      if (c.base_variables().empty()) {
        auto g = lie2_algebra_at_point(L);
        w_.report("linf at point " + a[1], verify_linf(g, cfg_.nmax, cfg_.workers));
      }
    } else if (a[0] == "lie-algebroid") {
      auto A = derive_lie_algebroid(c, p.value, cfg_.allow_master_failure);
      w_.table("lie-algebroid " + a[1], cli_detail::lie_table(A));
      ViolationReport r;
      check_poly(r, "master", {a[1]}, master_residual(c, p.value));
      w_.report("master " + a[1], r);
      if (c.base_variables().empty())
        w_.report("jacobi " + a[1], verify_linf(A.structure_constants(), 3, cfg_.workers));
    } else {
      throw UsageError("derive expects lwx, lie2algebroid or lie-algebroid");
    }
  }

  /// Named lwx structure, or a Hamiltonian on a chart without base.
  LWXPointStructure point_structure(const std::string& n) const {
    if (auto W = doc_.lwx_structure(n)) return *W;
    if (auto p = doc_.poly(n)) return derive_lwx(chart_of(*p), p->value, cfg_.allow_master_failure).at_point();
    throw UsageError("no lwx structure or polynomial named '" + n + "'");
  }

  void skew(const std::vector<std::string>& a) {
    arity(a, 1, "skew NAME");
    auto W = point_structure(a[0]);
    auto rep = verify_lwx_point(W);
    w_.report("lwx " + a[0], rep);
    if (!rep.passed()) return;
    auto L = skew_symmetrize(W, false);
    w_.table("skew " + a[0], linf_table(L));
    w_.report("linf skew " + a[0], verify_linf(L, cfg_.nmax, cfg_.workers));
  }

  void make_double(const std::vector<std::string>& a) {
    if (a.empty()) throw UsageError("usage: double semidirect NAME | double bialgebroid MU GAMMA");
    if (a[0] == "semidirect") {
      arity(a, 2, "double semidirect NAME");
      if (auto g = doc_.linf_structure(a[1])) {
        auto in = verify_linf(*g, 4, cfg_.workers);
        w_.report("linf " + a[1], in);
        if (!in.passed()) return;
        auto W = semidirect_double(*g, false);
        w_.table("double " + a[1], cli_detail::point_table(W));
        w_.report("lwx double " + a[1], verify_lwx_point(W));
        return;
      }
      // a split Lie 2-algebroid: A + A*[1] from μ alone
      const auto& p = poly(a[1]);
      const auto& c = chart_of(p);
      auto W = derive_lwx(c, p.value, cfg_.allow_master_failure);
      auto E = stl2a_lwx(c, p.value, cfg_.allow_master_failure);
      w_.table("double " + a[1], cli_detail::lwx_table(W));
      w_.report("sweep double " + a[1], lwx_property_sweep(W, cfg_.qdeg_bound, cfg_.workers));
      w_.report("explicit vs derived " + a[1], compare_lwx(W, E, cfg_.qdeg_bound));
    } else if (a[0] == "bialgebroid") {
      arity(a, 3, "double bialgebroid MU GAMMA");
      const auto &m = poly(a[1]), &g = poly(a[2]);
      if (m.chart != g.chart) throw UsageError("mu and gamma must live on the same chart");
      const auto& c = chart_of(m);
      auto rep = bialgebroid_check(c, m.value, g.value, cfg_.qdeg_bound);
      w_.report("bialgebroid " + a[1] + " " + a[2], rep.summary());
      if (!rep.master_route()) return;
      auto D = bialgebroid_double(c, m.value, g.value, cfg_.qdeg_bound);
      w_.poly("Theta", D.derived.theta().total);
      w_.table("double " + a[1] + " " + a[2], cli_detail::lwx_table(D.derived));
      w_.report("sweep double", lwx_property_sweep(D.derived, cfg_.qdeg_bound, cfg_.workers));
      w_.report("explicit vs derived", compare_lwx(D.derived, D.explicit_ops, cfg_.qdeg_bound));
    } else {
      throw UsageError("double expects semidirect or bialgebroid");
    }
  }

  void check_bialgebroid(const std::vector<std::string>& a) {
    arity(a, 2, "check-bialgebroid MU GAMMA");
    const auto &m = poly(a[0]), &g = poly(a[1]);
    if (m.chart != g.chart) throw UsageError("mu and gamma must live on the same chart");
    auto rep = bialgebroid_check(chart_of(m), m.value, g.value, cfg_.qdeg_bound);
    w_.value("master route", rep.master_route() ? "pass" : "fail");
    w_.value("derivation route", rep.derivation_route() ? "pass" : "fail");
    w_.value("routes agree", rep.routes_agree() ? "yes" : "no");
    w_.report("bialgebroid " + a[0] + " " + a[1], rep.summary());
  }

  const ModelDocument& doc_;
  const RunConfig& cfg_;
  RecordWriter& w_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Executes one invocation. Exit status: 0 all checks pass, 1 violations
/// or a failed construction, 2 usage or parse errors.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RecordWriter w(out, cfg.format);
  try {
    if (cfg.nmax < 1 || cfg.qdeg_bound < 0) throw UsageError("bounds must be positive");
    if (cfg.command.empty()) throw UsageError("no command");
    if (cfg.inputs.empty()) throw UsageError("no input file");
    std::vector<std::pair<std::string, ModelDocument>> docs;
    for (const auto& path : cfg.inputs) {
      try {
        docs.push_back({path, parse_model(read_file(path))});
      } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
      }
    }
    if (cfg.command[0] == "run") {
      for (const auto& [path, doc] : docs)
        for (const auto& t : doc.tasks) {
          w.task(t.words);
          CommandRunner r(doc, cfg, w);
          try {
            r.run(t.words);
          } catch (const UsageError& e) {
            throw UsageError(path + ":" + std::to_string(t.line) + ": " + e.what());
          } catch (const Error& e) {
            err << path << ":" << t.line << ": " << e.what() << "\n";
            w.value("error", e.what());
            w.fail();
          }
        }
    } else {
      if (docs.size() != 1) throw UsageError("exactly one input file expected");
      CommandRunner r(docs[0].second, cfg, w);
      try {
        r.run(cfg.command);
      } catch (const UsageError&) {
        throw;
      } catch (const Error& e) {
        err << e.what() << "\n";
        w.value("error", e.what());
        w.fail();
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (w.failed()) return cfg.warn_only ? 0 : 1;
  return 0;
}

}  // namespace qp3
