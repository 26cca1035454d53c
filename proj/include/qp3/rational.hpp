#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace qp3 {

/// Exact arbitrary-precision rational. Every identity in this library is
/// checked with tolerance zero.
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Canonical text form: "a" or "a/b" with b > 0 and gcd(a,b) = 1.
inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Parses "a", "-a" or "a/b". Returns false on malformed input.
inline bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!digits(num)) return false;
  std::string ns(num);
  if (ns[0] == '+') ns.erase(0, 1);
  boost::multiprecision::mpz_int n(ns);
  boost::multiprecision::mpz_int d(1);
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!digits(den) || den[0] == '-' || den[0] == '+') return false;
    d = boost::multiprecision::mpz_int(std::string(den));
    if (d == 0) return false;
  }
  out = Rational(n, d);
  return true;
}

}  // namespace qp3
