#pragma once

// Seeded generators of random homogeneous polynomials for property tests.

#include "qp3/gpoly.hpp"
#include "qp3/sections.hpp"

#include <random>

namespace qp3::proptest {

class PolyGen {
 public:
  PolyGen(Env env, unsigned seed, int max_qdeg = 2) : env_(std::move(env)), rng_(seed), max_qdeg_(max_qdeg) {}

  std::mt19937& rng() { return rng_; }

  /// Random monomial of exact degree d, or zero when the walk fails.
  GPoly monomial(int d) {
    Exponents e(env_->size(), 0);
    int left = d;
    for (int tries = 0; tries < 60 && left > 0; ++tries) {
      std::size_t i = rng_() % env_->size();
      int di = env_->degree(i);
      if (di == 0 || di > left) continue;
      if (env_->odd(i) && e[i]) continue;
      ++e[i];
      left -= di;
    }
    if (left != 0) return GPoly(env_);
    int qbudget = int(rng_() % (max_qdeg_ + 1));
    for (int k = 0; k < qbudget; ++k) {
      std::size_t i = rng_() % env_->size();
      if (env_->degree(i) == 0) ++e[i];
    }
    return GPoly::monomial(env_, e, coefficient());
  }

  GPoly poly(int d, int terms = 4) {
    GPoly f(env_);
    for (int k = 0; k < terms; ++k) f += monomial(d);
    return f;
  }

  /// Nonzero homogeneous polynomial of degree d (retries a bounded number of times).
  GPoly nonzero(int d, int terms = 4) {
    for (int k = 0; k < 50; ++k) {
      GPoly f = poly(d, terms);
      if (!f.is_zero()) return f;
    }
    return GPoly(env_);
  }

  Rational coefficient() {
    int num = int(rng_() % 9) - 4;
    if (num == 0) num = 1;
    return Rational(num, int(rng_() % 3) + 1);
  }

 private:
  Env env_;
  std::mt19937 rng_;
  int max_qdeg_;
};

/// Random polynomial in the base coordinates of degree <= bound.
inline GPoly random_function(const DarbouxChart& c, std::mt19937& rng, int bound = 3) {
  GPoly f = c.zero();
  for (const auto& m : base_monomials(c, bound))
    if (rng() % 3 == 0) f += Rational(int(rng() % 7) - 3, int(rng() % 2) + 1) * m;
  return f;
}

/// Random section sum_a f_a(q) v_a over the given fiber variables.
inline GPoly random_section(const DarbouxChart& c, const std::vector<std::size_t>& vars, std::mt19937& rng,
                            int bound = 2) {
  GPoly s = c.zero();
  for (auto v : vars) s += random_function(c, rng, bound) * GPoly::variable(c.env(), v);
  return s;
}

/// Monomials of exact degree d in the given fiber variables (odd ones at most once).
inline std::vector<GPoly> fiber_monomials(const DarbouxChart& c, const std::vector<std::size_t>& vars, int d) {
  std::vector<GPoly> out;
  Exponents e(c.env()->size(), 0);
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      out.push_back(GPoly::monomial(c.env(), e, 1));
      return;
    }
    for (std::size_t k = from; k < vars.size(); ++k) {
      std::size_t v = vars[k];
      int dv = c.env()->degree(v);
      if (dv > left || (c.env()->odd(v) && e[v])) continue;
      ++e[v];
      self(self, k, left - dv);
      --e[v];
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Random homogeneous element of degree d: a few fiber monomials with random
/// base coefficients.
inline GPoly random_homogeneous(const DarbouxChart& c, const std::vector<std::size_t>& vars, int d,
                                std::mt19937& rng, int bound = 2) {
  auto mons = fiber_monomials(c, vars, d);
  GPoly out = c.zero();
  if (mons.empty()) return out;
  for (int t = 0; t < 3; ++t) out += random_function(c, rng, bound) * mons[rng() % mons.size()];
  return out;
}

}  // namespace qp3::proptest
