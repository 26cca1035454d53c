#pragma once

// Finite L-infinity algebras given by structure constants, and the
// exhaustive check of the higher Jacobi identities
//
//   sum_{i+j=n+1} (-1)^{i(j-1)} sum_sigma sgn(sigma) Ksgn(sigma)
//       l_j(l_i(x_s(1..i)), x_s(i+1..n)) = 0
//
// over (i, n-i)-unshuffles.

#include "qp3/report.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace qp3 {

class GradedSpace {
 public:
  struct Component {
    int degree = 0;
    std::vector<std::string> labels;
  };

  GradedSpace() = default;
  explicit GradedSpace(std::vector<Component> comps) : comps_(std::move(comps)) {
    for (const auto& c : comps_) {
      if (c.degree > 0) throw StructureError("graded space degrees must be <= 0");
      for (const auto& l : c.labels) {
        if (!index_.emplace(l, labels_.size()).second)
          throw StructureError("duplicate basis label " + l);
        labels_.push_back(l);
        degrees_.push_back(c.degree);
      }
    }
  }

  std::size_t dim() const { return labels_.size(); }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Component>& components() const { return comps_; }

  std::optional<std::size_t> find(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const std::string& l) const {
    if (auto i = find(l)) return *i;
    throw StructureError("unknown basis element " + l);
  }

  int min_degree() const { return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end()); }
  int max_degree() const { return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end()); }

  std::vector<std::size_t> indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (degrees_[i] == d) out.push_back(i);
    return out;
  }

 private:
  std::vector<Component> comps_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Koszul sign of reordering (x_1..x_n) into (x_p[0]..x_p[n-1]): each
/// inversion of two elements of degrees a, b contributes (-1)^{ab}.
inline int koszul_sign(const std::vector<int>& degrees, const std::vector<std::size_t>& perm) {
  if (perm.size() != degrees.size()) throw StructureError("koszul_sign: length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw StructureError("koszul_sign: not a permutation");
    seen[p] = true;
  }
  int s = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b] && (degrees[perm[a]] * degrees[perm[b]]) % 2 != 0) s = -s;
  return s;
}

/// Graded-antisymmetric multilinear map stored on canonically ordered
/// (ascending) basis tuples.
class MultiBracket {
 public:
  MultiBracket() = default;
  explicit MultiBracket(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  int shift() const { return 2 - arity_; }
  const std::map<std::vector<std::size_t>, Vec>& entries() const { return table_; }
  bool empty() const { return table_.empty(); }

  /// Sorts args in place; returns the antisymmetry sign, or 0 when the
  /// tuple is forced to vanish (repeated element of even degree).
  static int canonicalize(const GradedSpace& s, std::vector<std::size_t>& args) {
    int sign = 1;
    for (std::size_t i = 1; i < args.size(); ++i)
      for (std::size_t j = i; j > 0 && args[j - 1] >= args[j]; --j) {
        if (args[j - 1] == args[j]) {
          if (s.degree(args[j]) % 2 == 0) return 0;
          break;
        }
        // adjacent swap of x, y: -(-1)^{|x||y|}
        if ((s.degree(args[j - 1]) * s.degree(args[j])) % 2 == 0) sign = -sign;
        std::swap(args[j - 1], args[j]);
      }
    for (std::size_t i = 1; i < args.size(); ++i)
      if (args[i - 1] == args[i] && s.degree(args[i]) % 2 == 0) return 0;
    return sign;
  }

  /// Stores value at args (any order), validating the degree shift.
  void set(const GradedSpace& s, std::vector<std::size_t> args, const Vec& value) {
    if (int(args.size()) != arity_) throw StructureError("bracket arity mismatch");
    if (value.size() != s.dim()) throw StructureError("bracket value dimension mismatch");
    int in_deg = 0;
    for (auto a : args) {
      if (a >= s.dim()) throw StructureError("bracket argument out of range");
      in_deg += s.degree(a);
    }
    for (std::size_t k = 0; k < value.size(); ++k)
      if (!value[k].is_zero() && s.degree(k) != in_deg + shift())
        throw StructureError("bracket entry violates degree shift: l" + std::to_string(arity_) +
                             " output " + s.label(k));
    int sign = canonicalize(s, args);
    if (sign == 0) {
      if (!is_zero(value)) throw StructureError("nonzero value on a tuple forced to vanish");
      return;
    }
    Vec v = value;
    if (sign < 0)
      for (auto& x : v) x = -x;
    if (is_zero(v))
      table_.erase(args);
    else
      table_[args] = std::move(v);
  }

  Vec eval(const GradedSpace& s, std::vector<std::size_t> args) const {
    if (int(args.size()) != arity_) throw StructureError("bracket arity mismatch");
    int sign = canonicalize(s, args);
    if (sign == 0) return zero_vec(s.dim());
    auto it = table_.find(args);
    if (it == table_.end()) return zero_vec(s.dim());
    return sign > 0 ? it->second : Rational(-1) * it->second;
  }

  /// Linear extension in the first slot: l(v, rest...).
  Vec eval_first(const GradedSpace& s, const Vec& v, const std::vector<std::size_t>& rest) const {
    Vec out = zero_vec(s.dim());
    if (table_.empty()) return out;
    std::vector<std::size_t> args(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), args.begin() + 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      args[0] = k;
      axpy(out, v[k], eval(s, args));
    }
    return out;
  }

 private:
  int arity_ = 0;
  std::map<std::vector<std::size_t>, Vec> table_;
};

struct LInfStructure {
  GradedSpace space;
  /// brackets[k] is l_k for k = 1..4; index 0 unused.
  std::array<MultiBracket, 5> brackets{MultiBracket(0), MultiBracket(1), MultiBracket(2),
                                       MultiBracket(3), MultiBracket(4)};

  LInfStructure() = default;
  explicit LInfStructure(GradedSpace s) : space(std::move(s)) {}

  void set(int k, const std::vector<std::string>& args, const Vec& value) {
    std::vector<std::size_t> idx;
    for (const auto& a : args) idx.push_back(space.index_of(a));
    brackets.at(k).set(space, idx, value);
  }

  Vec vec(const std::vector<std::pair<std::string, Rational>>& terms) const {
    Vec v = zero_vec(space.dim());
    for (const auto& [l, c] : terms) v[space.index_of(l)] += c;
    return v;
  }
};

/// l_k on labelled basis arguments.
inline Vec evaluate_bracket(const LInfStructure& L, int k, const std::vector<std::string>& args) {
  if (k < 1 || k > 4) throw StructureError("bracket arity out of range");
  std::vector<std::size_t> idx;
  for (const auto& a : args) idx.push_back(L.space.index_of(a));
  return L.brackets[k].eval(L.space, idx);
}

namespace detail {

/// Residual of the n-ary higher Jacobi identity on a basis tuple.
inline Vec linf_residual(const LInfStructure& L, const std::vector<std::size_t>& x) {
  const GradedSpace& s = L.space;
  const std::size_t n = x.size();
  Vec total = zero_vec(s.dim());
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t j = n + 1 - i;
    if (i > 4 || j > 4) continue;
    const MultiBracket& li = L.brackets[i];
    const MultiBracket& lj = L.brackets[j];
    if (li.empty() || lj.empty()) continue;
    int pre = ((i * (j - 1)) % 2) ? -1 : 1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::size_t(__builtin_popcount(mask)) != i) continue;
      std::vector<std::size_t> in, rest;
      int sign = pre;
      for (std::size_t a = 0; a < n; ++a) {
        if (mask & (1u << a)) {
          // moving x_a in front of every unselected element before it
          for (std::size_t b = 0; b < a; ++b)
            if (!(mask & (1u << b)) && (s.degree(x[a]) * s.degree(x[b])) % 2 == 0) sign = -sign;
          in.push_back(x[a]);
        } else {
          rest.push_back(x[a]);
        }
      }
      Vec inner = li.eval(s, in);
      if (is_zero(inner)) continue;
      axpy(total, sign, lj.eval_first(s, inner, rest));
    }
  }
  return total;
}

template <class F>
void enumerate_tuples(const GradedSpace& s, std::size_t n, std::size_t first, F&& f) {
  std::vector<std::size_t> t{first};
  auto rec = [&](auto&& self) -> void {
    if (t.size() == n) {
      f(t);
      return;
    }
    std::size_t last = t.back();
    std::size_t start = (s.degree(last) % 2 != 0) ? last : last + 1;
    for (std::size_t k = start; k < s.dim(); ++k) {
      t.push_back(k);
      self(self);
      t.pop_back();
    }
  };
  rec(rec);
}

}  // namespace detail

/// Exhaustive check of the identities for n = 1..nmax on all canonical
/// basis tuples. Tuples whose output degree lies outside the space are
/// identically zero and skipped. workers > 1 partitions by first element.
inline ViolationReport verify_linf(const LInfStructure& L, int nmax = 5, unsigned workers = 1) {
  if (nmax < 1) throw StructureError("nmax must be >= 1");
  const GradedSpace& s = L.space;
  const int lo = s.min_degree(), hi = s.max_degree();
  ViolationReport total;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<ViolationReport> parts(s.dim());
    auto work = [&](std::size_t first) {
      detail::enumerate_tuples(s, std::size_t(n), first, [&](const std::vector<std::size_t>& t) {
        int deg = 0;
        for (auto k : t) deg += s.degree(k);
        int out = deg + 3 - n;
        if (out < lo || out > hi) return;
        Vec r = detail::linf_residual(L, t);
        std::vector<std::string> labels;
        for (auto k : t) labels.push_back(s.label(k));
        parts[first].check("linf.n=" + std::to_string(n), labels, r, s.labels());
      });
    };
    if (workers <= 1 || s.dim() < 2) {
      for (std::size_t f = 0; f < s.dim(); ++f) work(f);
    } else {
      std::vector<std::thread> pool;
      std::atomic_size_t next{0};
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t f; (f = next++) < s.dim();) work(f);
        });
      for (auto& th : pool) th.join();
    }
    for (auto& p : parts) total.merge(std::move(p));
  }
  return total;
}

}  // namespace qp3
