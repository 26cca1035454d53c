#pragma once

// Plain-text model format: charts, polynomials, finite structures and task
// directives. Line oriented; '#' starts a comment.
//
//   chart T3 degree 3
//     pair q1:0 p_1:3
//     pairs 2 xi_:2 xi^:1        # xi_1/xi^1, xi_2/xi^2
//   end
//   poly Theta on T3 = xi^1 p_1 + 3/2 * q1^2 xi^2 p_1
//   linf g
//     degree 0: e1 e2
//     l2[e1,e2] = e1
//   end
//   leibniz2 L | lwx W
//     degree 0: x1 x2
//     degree -1: m1
//     d[m1] = x1          l2[x1,m1] = 2 * m1          l3[x1,x2,x1] = m1
//     pair[x1,m1] = 1     (lwx only)
//   end
//   task master Theta
//
// A poly line without "on" uses the last chart declared. A line starting
// with '+' or '-' continues the previous poly.

#include "qp3/chart.hpp"
#include "qp3/linf.hpp"
#include "qp3/lwx_point.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qp3 {

class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_symbol, degree };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        kind_(kind), line_(line), column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_, column_;
};

struct TaskDirective {
  std::vector<std::string> words;
  std::size_t line = 0;
};

template <class T>
struct Named {
  std::string name;
  T value;
};

struct NamedPolynomial {
  std::string name;
  std::string chart;
  GPoly value;
};

struct ModelDocument {
  std::vector<Named<DarbouxChart>> charts;
  std::vector<NamedPolynomial> polys;
  std::vector<Named<LInfStructure>> linf;
  std::vector<Named<Leibniz2Structure>> leibniz2;
  std::vector<Named<LWXPointStructure>> lwx;
  std::vector<TaskDirective> tasks;

  const DarbouxChart* chart(const std::string& n) const { return find(charts, n); }
  const NamedPolynomial* poly(const std::string& n) const {
    for (const auto& p : polys)
      if (p.name == n) return &p;
    return nullptr;
  }
  const LInfStructure* linf_structure(const std::string& n) const { return find(linf, n); }
  const Leibniz2Structure* leibniz2_structure(const std::string& n) const { return find(leibniz2, n); }
  const LWXPointStructure* lwx_structure(const std::string& n) const { return find(lwx, n); }

  bool has_name(const std::string& n) const {
    return chart(n) || poly(n) || linf_structure(n) || leibniz2_structure(n) || lwx_structure(n);
  }

 private:
  template <class T>
  static const T* find(const std::vector<Named<T>>& v, const std::string& n) {
    for (const auto& x : v)
      if (x.name == n) return &x.value;
    return nullptr;
  }
};

namespace model_detail {

struct Token {
  enum Kind { ident, number, sym, end } kind = end;
  std::string text;
  std::size_t col = 0;  // 1-based
};

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^';
}

/// Identifiers may contain '^' (xi^1, and q1^2 is split later against the
/// chart) and end in '*' when not followed by another operand (e1*).
inline std::vector<Token> lex(const std::string& line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.col = i + 1;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      if (j < line.size() && line[j] == '*') {
        std::size_t k = j + 1;
        if (k >= line.size() || !(ident_char(line[k]) || line[k] == '(')) ++j;
      }
      t.kind = Token::ident;
      t.text = line.substr(i, j - i);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      if (j + 1 < line.size() && line[j] == '/' && std::isdigit(static_cast<unsigned char>(line[j + 1]))) {
        ++j;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      }
      t.kind = Token::number;
      t.text = line.substr(i, j - i);
      i = j;
    } else if (std::string_view("+-*()[],=:^").find(c) != std::string_view::npos) {
      t.kind = Token::sym;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError(ParseError::Kind::syntax, lineno, i + 1, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token e;
  e.col = line.size() + 1;
  out.push_back(e);
  return out;
}

class Cursor {
 public:
  Cursor(std::vector<Token> toks, std::size_t line) : t_(std::move(toks)), line_(line) {}

  const Token& peek(std::size_t k = 0) const { return t_[std::min(p_ + k, t_.size() - 1)]; }
  const Token& next() {
    const Token& t = t_[p_];
    if (p_ + 1 < t_.size()) ++p_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::end; }
  bool is_sym(const char* s) const { return peek().kind == Token::sym && peek().text == s; }
  bool accept(const char* s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(ParseError::Kind k, const Token& t, const std::string& msg) const {
    throw ParseError(k, line_, t.col, msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(ParseError::Kind::syntax, peek(), msg); }

  void expect(const char* s) {
    if (!accept(s)) fail(std::string("expected '") + s + "'" + found());
  }
  const Token& expect_ident(const char* what) {
    if (peek().kind != Token::ident) fail(std::string("expected ") + what + found());
    return next();
  }
  long expect_int(const char* what) {
    bool neg = accept("-");
    const Token& t = peek();
    if (t.kind != Token::number || t.text.find('/') != std::string::npos)
      fail(std::string("expected integer ") + what + found());
    next();
    long v = std::stol(t.text);
    return neg ? -v : v;
  }
  Rational expect_rational() {
    bool neg = accept("-");
    const Token& t = peek();
    Rational r;
    if (t.kind != Token::number || !parse_rational(t.text, r)) fail("expected a rational number" + found());
    next();
    return neg ? Rational(-r) : r;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected " + describe(peek()));
  }

  std::string found() const { return ", found " + describe(peek()); }
  static std::string describe(const Token& t) {
    return t.kind == Token::end ? std::string("end of line") : "'" + t.text + "'";
  }

 private:
  std::vector<Token> t_;
  std::size_t p_ = 0;
  std::size_t line_;
};

/// Polynomial expressions: sums of products of rationals, variables,
/// powers and parenthesized sums. Juxtaposition multiplies.
class PolyParser {
 public:
  PolyParser(Cursor& c, const DarbouxChart& chart) : c_(c), ch_(chart) {}

  GPoly expr() {
    GPoly out = ch_.zero();
    bool neg = c_.accept("-");
    if (!neg) c_.accept("+");
    out = term();
    if (neg) out = -out;
    while (c_.is_sym("+") || c_.is_sym("-")) {
      bool minus = c_.next().text == "-";
      GPoly t = term();
      out += minus ? -t : t;
    }
    return out;
  }

 private:
  bool operand_ahead() const {
    const Token& t = c_.peek();
    return t.kind == Token::ident || t.kind == Token::number || (t.kind == Token::sym && t.text == "(");
  }

  GPoly term() {
    if (!operand_ahead()) c_.fail("expected a term" + c_.found());
    GPoly out = factor();
    for (;;) {
      if (c_.accept("*")) {
        if (!operand_ahead()) c_.fail("expected a factor after '*'" + c_.found());
        out = out * factor();
      } else if (operand_ahead()) {
        out = out * factor();
      } else {
        return out;
      }
    }
  }

  GPoly factor() {
    GPoly base = atom();
    if (c_.accept("^")) base = power(base, c_.expect_int("exponent"));
    return base;
  }

  GPoly power(const GPoly& b, long k) {
    if (k < 0) c_.fail("negative exponent");
    GPoly out = ch_.constant(1);
    for (long i = 0; i < k; ++i) out = out * b;
    return out;
  }

  GPoly atom() {
    const Token& t = c_.peek();
    if (t.kind == Token::number) {
      Rational r;
      if (!parse_rational(t.text, r)) c_.fail("malformed rational");
      c_.next();
      return ch_.constant(r);
    }
    if (c_.accept("(")) {
      GPoly e = expr();
      c_.expect(")");
      return e;
    }
    Token id = c_.next();
    return variable(id);
  }

  // q1^2 and xi^1^3 arrive as one identifier; split at a trailing ^k.
  GPoly variable(const Token& id) {
    const VarEnv& env = *ch_.env();
    if (env.find(id.text)) return ch_.var(id.text);
    for (std::size_t pos = id.text.rfind('^'); pos != std::string::npos && pos > 0;
         pos = id.text.rfind('^', pos - 1)) {
      std::string head = id.text.substr(0, pos), tail = id.text.substr(pos + 1);
      bool digits = !tail.empty() && std::all_of(tail.begin(), tail.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      if (digits && env.find(head)) return power(ch_.var(head), std::stol(tail));
      if (pos == 0) break;
    }
    c_.fail(ParseError::Kind::unknown_symbol, id, "unknown variable '" + id.text + "'");
  }

  Cursor& c_;
  const DarbouxChart& ch_;
};

/// Linear combination of basis labels. A bare number multiplies the unit
/// label "1" when the space has one.
inline Vec parse_vector(Cursor& c, const std::vector<std::string>& labels) {
  Vec v = zero_vec(labels.size());
  auto index = [&](const Token& t) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == t.text) return i;
    c.fail(ParseError::Kind::unknown_symbol, t, "unknown basis element '" + t.text + "'");
  };
  auto label_ahead = [&] { return c.peek().kind == Token::ident || c.peek().kind == Token::number; };
  bool first = true;
  for (;;) {
    Rational sign = 1;
    if (c.accept("-")) sign = -1;
    else if (!c.accept("+") && !first) break;
    first = false;
    const Token t = c.peek();
    if (t.kind == Token::number) {
      Rational r = c.expect_rational();
      bool star = c.accept("*");
      if (star || c.peek().kind == Token::ident) {
        if (!label_ahead()) c.fail("expected a basis element" + c.found());
        v[index(c.next())] += sign * r;
      } else if (r == 0 && labels.end() == std::find(labels.begin(), labels.end(), "0")) {
        // explicit zero
      } else {
        Token unit = t;
        unit.text = "1";
        v[index(unit)] += sign * r;
      }
    } else if (t.kind == Token::ident) {
      v[index(c.next())] += sign;
    } else {
      c.fail("expected a vector term" + c.found());
    }
    if (!(c.is_sym("+") || c.is_sym("-"))) break;
  }
  return v;
}

inline std::vector<Token> parse_args(Cursor& c) {
  std::vector<Token> out;
  c.expect("[");
  if (!c.is_sym("]")) {
    do {
      const Token& t = c.peek();
      if (t.kind != Token::ident && t.kind != Token::number) c.fail("expected a basis element" + c.found());
      out.push_back(c.next());
    } while (c.accept(","));
  }
  c.expect("]");
  return out;
}

struct BasisDecl {
  std::vector<std::pair<int, std::vector<std::string>>> comps;
};

}  // namespace model_detail

class ModelParser {
 public:
  ModelDocument parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      lines_.push_back(raw);
    }
    ModelDocument doc;
    for (i_ = 0; i_ < lines_.size(); ++i_) {
      auto c = cursor(i_);
      if (c.at_end()) continue;
      const auto& head = c.peek();
      if (head.kind != model_detail::Token::ident) c.fail("expected a declaration" + c.found());
      std::string kw = c.next().text;
      if (kw == "chart") parse_chart(c, doc);
      else if (kw == "poly") parse_poly(c, doc);
      else if (kw == "linf") parse_linf(c, doc);
      else if (kw == "leibniz2" || kw == "lwx") parse_leibniz(c, doc, kw == "lwx");
      else if (kw == "task") parse_task(c, doc);
      else c.fail(ParseError::Kind::syntax, head, "unknown declaration '" + kw + "'");
    }
    return doc;
  }

 private:
  using Token = model_detail::Token;
  using Cursor = model_detail::Cursor;

  Cursor cursor(std::size_t i) const { return Cursor(model_detail::lex(lines_[i], i + 1), i + 1); }

  std::string declare(Cursor& c, const ModelDocument& doc) {
    const Token& t = c.expect_ident("a name");
    if (doc.has_name(t.text)) c.fail(ParseError::Kind::syntax, t, "duplicate name '" + t.text + "'");
    return t.text;
  }

  /// Collects body lines up to "end"; returns their indices.
  std::vector<std::size_t> block(const char* what) {
    std::size_t start = i_;
    std::vector<std::size_t> body;
    for (++i_; i_ < lines_.size(); ++i_) {
      auto c = cursor(i_);
      if (c.at_end()) continue;
      if (c.peek().kind == Token::ident && c.peek().text == "end") {
        c.next();
        c.expect_end();
        return body;
      }
      body.push_back(i_);
    }
    throw ParseError(ParseError::Kind::syntax, start + 1, 1, std::string("unterminated ") + what + " block");
  }

  void parse_chart(Cursor& c, ModelDocument& doc) {
    std::string name = declare(c, doc);
    const Token& kw = c.expect_ident("'degree'");
    if (kw.text != "degree") c.fail(ParseError::Kind::syntax, kw, "expected 'degree'");
    const Token degtok = c.peek();
    long n = c.expect_int("symplectic degree");
    if (n < 1) c.fail(ParseError::Kind::degree, degtok, "symplectic degree must be >= 1");
    c.expect_end();
    std::vector<PairDecl> decls;
    std::set<std::string> seen;
    for (auto li : block("chart")) {
      auto b = cursor(li);
      const Token& kw2 = b.expect_ident("'pair' or 'pairs'");
      long count = 0;
      if (kw2.text == "pairs") {
        const Token ct = b.peek();
        count = b.expect_int("pair count");
        if (count < 1) b.fail(ParseError::Kind::syntax, ct, "pair count must be positive");
      } else if (kw2.text != "pair") {
        b.fail(ParseError::Kind::syntax, kw2, "expected 'pair' or 'pairs'");
      }
      auto side = [&](Token& tok) {
        tok = b.expect_ident("a variable name");
        b.expect(":");
        const Token dt = b.peek();
        long d = b.expect_int("degree");
        if (d < 0) b.fail(ParseError::Kind::degree, dt, "negative degree");
        return int(d);
      };
      Token ut, st;
      int du = side(ut);
      int ds = side(st);
      b.expect_end();
      if (du + ds != n)
        b.fail(ParseError::Kind::degree, st,
               "degree-sum violation: " + std::to_string(du) + " + " + std::to_string(ds) + " != " + std::to_string(n));
      auto add = [&](const Token& t, const std::string& nm) {
        if (!seen.insert(nm).second) b.fail(ParseError::Kind::syntax, t, "duplicate variable '" + nm + "'");
      };
      if (count == 0) {
        add(ut, ut.text);
        add(st, st.text);
        decls.push_back({{ut.text, du}, {st.text, ds}});
      } else {
        for (long k = 1; k <= count; ++k) {
          std::string a = ut.text + std::to_string(k), s = st.text + std::to_string(k);
          add(ut, a);
          add(st, s);
          decls.push_back({{a, du}, {s, ds}});
        }
      }
    }
    try {
      doc.charts.push_back({name, make_chart(decls, int(n))});
    } catch (const ChartError& e) {
      throw ParseError(ParseError::Kind::degree, c.line(), 1, e.what());
    }
    last_chart_ = name;
  }

  void parse_poly(Cursor& c, ModelDocument& doc) {
    std::string name = declare(c, doc);
    std::string chart = last_chart_;
    if (c.peek().kind == Token::ident && c.peek().text == "on") {
      c.next();
      const Token& ct = c.expect_ident("a chart name");
      if (!doc.chart(ct.text)) c.fail(ParseError::Kind::unknown_symbol, ct, "unknown chart '" + ct.text + "'");
      chart = ct.text;
    }
    if (chart.empty()) c.fail("poly declared before any chart");
    c.expect("=");
    // Continuation lines start with '+' or '-'.
    std::string text = lines_[i_];
    std::size_t offset = text.size();
    std::vector<std::pair<std::size_t, std::size_t>> spans{{i_, 0}};
    while (i_ + 1 < lines_.size()) {
      auto nc = cursor(i_ + 1);
      if (nc.at_end() || !(nc.is_sym("+") || nc.is_sym("-"))) break;
      ++i_;
      text += " ";
      spans.push_back({i_, offset + 1});
      text += lines_[i_];
      offset = text.size();
    }
    try {
      Cursor joined(model_detail::lex(text, spans[0].first + 1), spans[0].first + 1);
      while (!joined.is_sym("=")) joined.next();
      joined.next();
      model_detail::PolyParser pp(joined, *doc.chart(chart));
      GPoly value = pp.expr();
      joined.expect_end();
      doc.polys.push_back({name, chart, value});
    } catch (const ParseError& e) {
      // map the column of the joined line back to its physical line
      std::size_t col0 = e.column() - 1;
      auto it = spans.rbegin();
      while (it != spans.rend() && it->second > col0) ++it;
      if (it == spans.rend()) it = std::prev(spans.rend());
      std::string msg = e.what();
      msg = msg.substr(msg.find(": ") + 2);
      throw ParseError(e.kind(), it->first + 1, col0 - it->second + 1, msg);
    }
  }

  model_detail::BasisDecl parse_basis_line(Cursor& b, model_detail::BasisDecl decl) {
    const Token dt = b.peek();
    long d = b.expect_int("degree");
    b.expect(":");
    std::vector<std::string> labels;
    while (!b.at_end()) {
      const Token& t = b.peek();
      if (t.kind != Token::ident && t.kind != Token::number) b.fail("expected a basis label" + b.found());
      labels.push_back(b.next().text);
    }
    if (labels.empty()) b.fail("empty basis");
    for (const auto& [deg, l] : decl.comps)
      if (deg == d) b.fail(ParseError::Kind::syntax, dt, "degree " + std::to_string(d) + " declared twice");
    decl.comps.push_back({int(d), labels});
    return decl;
  }

  void parse_linf(Cursor& c, ModelDocument& doc) {
    std::string name = declare(c, doc);
    c.expect_end();
    model_detail::BasisDecl decl;
    std::optional<LInfStructure> L;
    std::size_t first_line = c.line();
    for (auto li : block("linf")) {
      auto b = cursor(li);
      const Token kw = b.expect_ident("'degree' or a bracket entry");
      if (kw.text == "degree") {
        if (L) b.fail(ParseError::Kind::syntax, kw, "basis declared after bracket entries");
        decl = parse_basis_line(b, decl);
        continue;
      }
      if (!L) L = make_space(decl, b, kw);
      int k = 0;
      if (kw.text.size() == 2 && kw.text[0] == 'l' && kw.text[1] >= '1' && kw.text[1] <= '4') k = kw.text[1] - '0';
      else b.fail(ParseError::Kind::syntax, kw, "expected l1..l4, found '" + kw.text + "'");
      auto args = model_detail::parse_args(b);
      if (int(args.size()) != k) b.fail(ParseError::Kind::syntax, kw, kw.text + " takes " + std::to_string(k) + " arguments");
      std::vector<std::size_t> idx;
      for (const auto& a : args) {
        auto i = L->space.find(a.text);
        if (!i) b.fail(ParseError::Kind::unknown_symbol, a, "unknown basis element '" + a.text + "'");
        idx.push_back(*i);
      }
      const Token eq = b.peek();
      b.expect("=");
      Vec v = model_detail::parse_vector(b, L->space.labels());
      b.expect_end();
      if (!is_zero(L->brackets[k].eval(L->space, idx)))
        b.fail(ParseError::Kind::syntax, kw, "duplicate entry for " + kw.text);
      try {
        L->brackets[k].set(L->space, idx, v);
      } catch (const StructureError& e) {
        b.fail(ParseError::Kind::degree, eq, e.what());
      }
    }
    if (!L) {
      Cursor dummy({Token{}}, first_line);
      L = make_space(decl, dummy, Token{Token::end, "", 1});
    }
    doc.linf.push_back({name, std::move(*L)});
  }

  LInfStructure make_space(const model_detail::BasisDecl& decl, Cursor& b, const Token& at) {
    std::vector<GradedSpace::Component> comps;
    for (const auto& [d, l] : decl.comps) comps.push_back({d, l});
    std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) { return x.degree > y.degree; });
    try {
      return LInfStructure(GradedSpace(comps));
    } catch (const StructureError& e) {
      b.fail(ParseError::Kind::degree, at, e.what());
    }
  }

  void parse_leibniz(Cursor& c, ModelDocument& doc, bool lwx) {
    std::string name = declare(c, doc);
    c.expect_end();
    model_detail::BasisDecl decl;
    std::optional<LWXPointStructure> W;
    std::vector<std::string> all;
    std::size_t n0 = 0;
    auto lookup = [&](Cursor& b, const Token& t, int& cls) {
      for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == t.text) {
          cls = i < n0 ? 0 : -1;
          return i < n0 ? i : i - n0;
        }
      b.fail(ParseError::Kind::unknown_symbol, t, "unknown basis element '" + t.text + "'");
    };
    auto init = [&](Cursor& b, const Token& at) {
      std::vector<std::string> v0, v1;
      for (const auto& [d, l] : decl.comps) {
        if (d == 0) v0 = l;
        else if (d == -1) v1 = l;
        else b.fail(ParseError::Kind::degree, at, "2-term structures live in degrees 0 and -1");
      }
      W = LWXPointStructure::zero(v0, v1);
      all = v0;
      all.insert(all.end(), v1.begin(), v1.end());
      n0 = v0.size();
    };
    std::set<std::string> entries;
    for (auto li : block(lwx ? "lwx" : "leibniz2")) {
      auto b = cursor(li);
      const Token kw = b.expect_ident("'degree' or an entry");
      if (kw.text == "degree") {
        if (W) b.fail(ParseError::Kind::syntax, kw, "basis declared after entries");
        const Token dt = b.peek();
        decl = parse_basis_line(b, decl);
        if (decl.comps.back().first != 0 && decl.comps.back().first != -1)
          b.fail(ParseError::Kind::degree, dt, "2-term structures live in degrees 0 and -1");
        continue;
      }
      if (!W) init(b, kw);
      auto args = model_detail::parse_args(b);
      std::vector<int> cls(args.size());
      std::vector<std::size_t> idx;
      for (std::size_t a = 0; a < args.size(); ++a) idx.push_back(lookup(b, args[a], cls[a]));
      const Token eq = b.peek();
      b.expect("=");
      std::string key = kw.text;
      for (auto i : args) key += "," + i.text;
      if (!entries.insert(key).second) b.fail(ParseError::Kind::syntax, kw, "duplicate entry for " + kw.text);
      auto& ops = W->ops;
      auto bad_degree = [&] { b.fail(ParseError::Kind::degree, kw, kw.text + " arguments have the wrong degrees"); };
      auto vec_in = [&](int out_cls) {
        Vec v = model_detail::parse_vector(b, all);
        for (std::size_t i = 0; i < v.size(); ++i)
          if (!v[i].is_zero() && (i < n0 ? 0 : -1) != out_cls)
            b.fail(ParseError::Kind::degree, eq, "value has a component of the wrong degree: " + all[i]);
        return out_cls == 0 ? Vec(v.begin(), v.begin() + n0) : Vec(v.begin() + n0, v.end());
      };
      if (kw.text == "d") {
        if (args.size() != 1) b.fail(ParseError::Kind::syntax, kw, "d takes 1 argument");
        if (cls[0] != -1) bad_degree();
        ops.d[idx[0]] = vec_in(0);
      } else if (kw.text == "l2") {
        if (args.size() != 2) b.fail(ParseError::Kind::syntax, kw, "l2 takes 2 arguments");
        if (cls[0] == 0 && cls[1] == 0) ops.l2_00[idx[0]][idx[1]] = vec_in(0);
        else if (cls[0] == 0 && cls[1] == -1) ops.l2_01[idx[0]][idx[1]] = vec_in(-1);
        else if (cls[0] == -1 && cls[1] == 0) ops.l2_10[idx[0]][idx[1]] = vec_in(-1);
        else bad_degree();
      } else if (kw.text == "l3") {
        if (args.size() != 3) b.fail(ParseError::Kind::syntax, kw, "l3 takes 3 arguments");
        if (cls[0] || cls[1] || cls[2]) bad_degree();
        ops.l3[idx[0]][idx[1]][idx[2]] = vec_in(-1);
      } else if (kw.text == "pair" && lwx) {
        if (args.size() != 2) b.fail(ParseError::Kind::syntax, kw, "pair takes 2 arguments");
        if (cls[0] != 0 || cls[1] != -1) bad_degree();
        W->S[idx[0]][idx[1]] = b.expect_rational();
      } else {
        b.fail(ParseError::Kind::syntax, kw, "unknown entry '" + kw.text + "'");
      }
      b.expect_end();
    }
    if (!W) {
      Cursor dummy({Token{}}, c.line());
      init(dummy, Token{Token::end, "", 1});
    }
    if (lwx) doc.lwx.push_back({name, std::move(*W)});
    else doc.leibniz2.push_back({name, std::move(W->ops)});
  }

  void parse_task(Cursor& c, ModelDocument& doc) {
    TaskDirective t;
    t.line = c.line();
    while (!c.at_end()) {
      const Token& tok = c.next();
      // rejoin "check-bialgebroid" and similar hyphenated words
      if (tok.kind == Token::sym && tok.text == "-" && !t.words.empty() && c.peek().kind == Token::ident) {
        t.words.back() += "-" + c.next().text;
        continue;
      }
      if (tok.kind == Token::sym) c.fail(ParseError::Kind::syntax, tok, "unexpected '" + tok.text + "' in task");
      t.words.push_back(tok.text);
    }
    if (t.words.empty()) c.fail("empty task");
    doc.tasks.push_back(std::move(t));
  }

  std::vector<std::string> lines_;
  std::size_t i_ = 0;
  std::string last_chart_;
};

inline ModelDocument parse_model(const std::string& text) { return ModelParser().parse(text); }

/// Parses a single polynomial against a chart.
inline GPoly parse_poly(const DarbouxChart& chart, const std::string& text) {
  model_detail::Cursor c(model_detail::lex(text, 1), 1);
  model_detail::PolyParser p(c, chart);
  GPoly out = p.expr();
  c.expect_end();
  return out;
}

// ---- emission ------------------------------------------------------------

/// "c * label" terms in basis order; the unit label "1" prints as its
/// coefficient alone.
inline std::string emit_vector(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational mag = v[i] < 0 ? Rational(-v[i]) : v[i];
    out += out.empty() ? (v[i] < 0 ? "-" : "") : (v[i] < 0 ? " - " : " + ");
    if (labels[i] == "1") out += to_string(mag);
    else if (mag == 1) out += labels[i];
    else out += to_string(mag) + " * " + labels[i];
  }
  return out.empty() ? "0" : out;
}

inline std::string emit_chart(const std::string& name, const DarbouxChart& c) {
  std::string out = "chart " + name + " degree " + std::to_string(c.n()) + "\n";
  const VarEnv& env = *c.env();
  for (const auto& p : c.pairs())
    out += "  pair " + env[p.u].name + ":" + std::to_string(env.degree(p.u)) + " " + env[p.u_star].name + ":" +
           std::to_string(env.degree(p.u_star)) + "\n";
  return out + "end\n";
}

inline std::string emit_linf(const std::string& name, const LInfStructure& L) {
  std::string out = "linf " + name + "\n";
  for (const auto& comp : L.space.components()) {
    out += "  degree " + std::to_string(comp.degree) + ":";
    for (const auto& l : comp.labels) out += " " + l;
    out += "\n";
  }
  for (int k = 1; k <= 4; ++k)
    for (const auto& [args, v] : L.brackets[k].entries()) {
      out += "  l" + std::to_string(k) + "[";
      for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + L.space.label(args[i]);
      out += "] = " + emit_vector(v, L.space.labels()) + "\n";
    }
  return out + "end\n";
}

inline std::string emit_leibniz_body(const Leibniz2Structure& L) {
  std::string out;
  auto basis = [&](int d, const std::vector<std::string>& l) {
    if (l.empty()) return;
    out += "  degree " + std::to_string(d) + ":";
    for (const auto& s : l) out += " " + s;
    out += "\n";
  };
  basis(0, L.v0);
  basis(-1, L.v1);
  auto entry = [&](const std::string& op, std::vector<std::string> args, const Vec& v,
                   const std::vector<std::string>& labels) {
    if (is_zero(v)) return;
    out += "  " + op + "[";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + args[i];
    out += "] = " + emit_vector(v, labels) + "\n";
  };
  for (std::size_t m = 0; m < L.n1(); ++m) entry("d", {L.v1[m]}, L.d[m], L.v0);
  for (std::size_t x = 0; x < L.n0(); ++x)
    for (std::size_t y = 0; y < L.n0(); ++y) entry("l2", {L.v0[x], L.v0[y]}, L.l2_00[x][y], L.v0);
  for (std::size_t x = 0; x < L.n0(); ++x)
    for (std::size_t m = 0; m < L.n1(); ++m) entry("l2", {L.v0[x], L.v1[m]}, L.l2_01[x][m], L.v1);
  for (std::size_t m = 0; m < L.n1(); ++m)
    for (std::size_t x = 0; x < L.n0(); ++x) entry("l2", {L.v1[m], L.v0[x]}, L.l2_10[m][x], L.v1);
  for (std::size_t x = 0; x < L.n0(); ++x)
    for (std::size_t y = 0; y < L.n0(); ++y)
      for (std::size_t z = 0; z < L.n0(); ++z) entry("l3", {L.v0[x], L.v0[y], L.v0[z]}, L.l3[x][y][z], L.v1);
  return out;
}

inline std::string emit_leibniz2(const std::string& name, const Leibniz2Structure& L) {
  return "leibniz2 " + name + "\n" + emit_leibniz_body(L) + "end\n";
}

inline std::string emit_lwx(const std::string& name, const LWXPointStructure& W) {
  std::string out = "lwx " + name + "\n" + emit_leibniz_body(W.ops);
  for (std::size_t x = 0; x < W.n0(); ++x)
    for (std::size_t m = 0; m < W.n1(); ++m)
      if (!W.S[x][m].is_zero()) out += "  pair[" + W.ops.v0[x] + "," + W.ops.v1[m] + "] = " + to_string(W.S[x][m]) + "\n";
  return out + "end\n";
}

/// Canonical text of a whole document: charts, polys, structures, tasks.
inline std::string emit_model(const ModelDocument& doc) {
  std::string out;
  for (const auto& c : doc.charts) out += emit_chart(c.name, c.value);
  for (const auto& p : doc.polys) out += "poly " + p.name + " on " + p.chart + " = " + to_string(p.value) + "\n";
  for (const auto& s : doc.linf) out += emit_linf(s.name, s.value);
  for (const auto& s : doc.leibniz2) out += emit_leibniz2(s.name, s.value);
  for (const auto& s : doc.lwx) out += emit_lwx(s.name, s.value);
  for (const auto& t : doc.tasks) {
    out += "task";
    for (const auto& w : t.words) out += " " + w;
    out += "\n";
  }
  return out;
}

}  // namespace qp3
