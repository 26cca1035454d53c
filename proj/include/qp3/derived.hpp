#pragma once

// LWX 2-algebroid operations of a degree-3 QP-manifold, by derived brackets:
//
//   ∂α = {α,θ2}            ρ(X)f = {f,{X,θ13}}
//   X∘Y = {Y,{X,θ13}}      X∘α = {α,{X,θ13}}      α∘X = -{X,{α,θ13}}
//   Ω(X,Y,Z) = {Z,{Y,{X,θ4}}}                      S(X+α,Y+β) = {X,β}+{Y,α}
//
// E_0 sections are linear in the degree-2 fiber coordinates, E_{-1}
// sections in the degree-1 ones. Every call checks that its arguments and
// its result lie in the expected section class.

#include "qp3/decompose.hpp"
#include "qp3/lwx_point.hpp"
#include "qp3/sections.hpp"

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qp3 {

class DerivedLWX {
 public:
  DerivedLWX(DarbouxChart chart, StructureFunction theta) : c_(std::move(chart)), th_(std::move(theta)) {
    if (c_.n() != 3) throw ChartError("LWX operations need a degree-3 chart");
    for (std::size_t i = 0; i < c_.env()->size(); ++i) {
      if (!c_.is_fiber(i)) continue;
      int d = c_.env()->degree(i);
      if (d == 2) e0_.push_back(i);
      else if (d == 1) e1_.push_back(i);
      else throw ChartError("fiber coordinate of degree " + std::to_string(d) + " on a degree-3 chart");
    }
  }

  const DarbouxChart& chart() const { return c_; }
  const StructureFunction& theta() const { return th_; }
  const std::vector<std::size_t>& e0_vars() const { return e0_; }
  const std::vector<std::size_t>& e1_vars() const { return e1_; }

  bool in_e0(const GPoly& f) const { return is_section_of(c_, f, e0_); }
  bool in_e1(const GPoly& f) const { return is_section_of(c_, f, e1_); }
  bool in_e(const GPoly& f) const {
    for (const auto& [d, p] : f.homogeneous_parts())
      if (!((d == 2 && in_e0(p)) || (d == 1 && in_e1(p)))) return false;
    return true;
  }

  GPoly e0_part(const GPoly& e) const { return part(e, 2); }
  GPoly e1_part(const GPoly& e) const { return part(e, 1); }

  GPoly partial(const GPoly& a) const {
    need(in_e1(a), "partial", a);
    return result(poisson(c_, a, th_.low()), 0, "partial");
  }

  /// ρ of the E_0 component, applied to a function.
  GPoly rho(const GPoly& e, const GPoly& f) const {
    need(in_e(e), "rho", e);
    need(is_function(c_, f), "rho", f);
    GPoly out = poisson(c_, f, poisson(c_, e0_part(e), th_.mid()));
    need_out(is_function(c_, out), "rho", out);
    return out;
  }

  GPoly pair(const GPoly& a, const GPoly& b) const {
    need(in_e(a), "pair", a);
    need(in_e(b), "pair", b);
    GPoly out = poisson(c_, e0_part(a), e1_part(b)) + poisson(c_, e0_part(b), e1_part(a));
    need_out(is_function(c_, out), "pair", out);
    return out;
  }

  /// 𝒟f, determined by S(𝒟f, X) = ρ(X)f.
  GPoly D(const GPoly& f) const {
    need(is_function(c_, f), "D", f);
    GPoly out = c_.zero();
    for (auto v : e0_) {
      GPoly x = GPoly::variable(c_.env(), v);
      GPoly r = rho(x, f);
      if (r.is_zero()) continue;
      out += r * GPoly::variable(c_.env(), c_.partner(v), Rational(c_.omega(v)));
    }
    return out;
  }

  GPoly circ(const GPoly& a, const GPoly& b) const {
    need(in_e(a), "circ", a);
    need(in_e(b), "circ", b);
    GPoly a0 = e0_part(a), a1 = e1_part(a), b0 = e0_part(b), b1 = e1_part(b);
    GPoly out = c_.zero();
    if (!a0.is_zero()) {
      GPoly h = poisson(c_, a0, th_.mid());
      out += poisson(c_, b0, h) + poisson(c_, b1, h);
    }
    if (!a1.is_zero() && !b0.is_zero()) out -= poisson(c_, b0, poisson(c_, a1, th_.mid()));
    need_out(in_e(out), "circ", out);
    return out;
  }

  /// ⟦a,b⟧ = a∘b - 1/2 𝒟S(a,b).
  GPoly skew(const GPoly& a, const GPoly& b) const {
    return circ(a, b) - Rational(1, 2) * D(pair(a, b));
  }

  GPoly omega(const GPoly& a, const GPoly& b, const GPoly& c) const {
    need(in_e0(a), "omega", a);
    need(in_e0(b), "omega", b);
    need(in_e0(c), "omega", c);
    return result(poisson(c_, c, poisson(c_, b, poisson(c_, a, th_.top()))), 1, "omega");
  }

  /// Dense structure constants; the chart must have no base coordinates.
  LWXPointStructure at_point() const {
    if (!c_.base_variables().empty())
      throw StructureError("point extraction needs a chart without base coordinates");
    std::vector<std::string> l0, l1;
    for (auto v : e0_) l0.push_back((*c_.env())[v].name);
    for (auto v : e1_) l1.push_back((*c_.env())[v].name);
    auto W = LWXPointStructure::zero(l0, l1);
    auto x = [&](std::size_t i) { return GPoly::variable(c_.env(), e0_[i]); };
    auto m = [&](std::size_t i) { return GPoly::variable(c_.env(), e1_[i]); };
    auto co0 = [&](const GPoly& f) { return constant_coordinates(c_, f, e0_); };
    auto co1 = [&](const GPoly& f) { return constant_coordinates(c_, f, e1_); };
    const std::size_t n0 = e0_.size(), n1 = e1_.size();
    for (std::size_t j = 0; j < n1; ++j) W.ops.d[j] = co0(partial(m(j)));
    for (std::size_t i = 0; i < n0; ++i) {
      for (std::size_t j = 0; j < n1; ++j) {
        W.S[i][j] = pair(x(i), m(j)).coefficient(Exponents(c_.env()->size(), 0));
        W.ops.l2_01[i][j] = co1(circ(x(i), m(j)));
        W.ops.l2_10[j][i] = co1(circ(m(j), x(i)));
      }
      for (std::size_t k = 0; k < n0; ++k) {
        W.ops.l2_00[i][k] = co0(circ(x(i), x(k)));
        for (std::size_t l = 0; l < n0; ++l) W.ops.l3[i][k][l] = co1(omega(x(i), x(k), x(l)));
      }
    }
    return W;
  }

 private:
  GPoly part(const GPoly& e, int d) const {
    auto parts = e.homogeneous_parts();
    auto it = parts.find(d);
    return it == parts.end() ? c_.zero() : it->second;
  }

  void need(bool ok, const char* op, const GPoly& f) const {
    if (!ok) throw StructureError(std::string(op) + ": argument outside its section class: " + to_string(f));
  }
  void need_out(bool ok, const char* op, const GPoly& f) const {
    if (!ok) throw StructureError(std::string(op) + ": result outside its section class: " + to_string(f));
  }
  GPoly result(GPoly f, int cls, const char* op) const {
    need_out(cls == 0 ? in_e0(f) : in_e1(f), op, f);
    return f;
  }

  DarbouxChart c_;
  StructureFunction th_;
  std::vector<std::size_t> e0_, e1_;
};

/// Builds the derived operations; throws MasterEquationError when
/// {Θ,Θ} ≠ 0 unless allow_master_failure is set.
inline DerivedLWX derive_lwx(const DarbouxChart& c, const GPoly& theta, bool allow_master_failure = false) {
  if (c.n() != 3) throw ChartError("derive_lwx needs a degree-3 chart");
  auto sf = decompose(c, theta, Family::theta);
  if (!allow_master_failure) {
    GPoly r = master_residual(c, sf.total);
    if (!r.is_zero()) throw MasterEquationError("{Theta,Theta} = " + to_string(r));
  }
  return DerivedLWX(c, std::move(sf));
}

namespace detail {

/// Calls f on every tuple drawn from `sets` whose combined base degree is
/// at most `bound`.
template <class F>
void for_each_bounded(const std::vector<const std::vector<SampleSection>*>& sets, int bound, F&& f) {
  std::vector<const SampleSection*> t;
  auto rec = [&](auto&& self, std::size_t k, int used) -> void {
    if (k == sets.size()) {
      f(t);
      return;
    }
    for (const auto& s : *sets[k]) {
      if (used + s.qdeg > bound) continue;
      t.push_back(&s);
      self(self, k + 1, used + s.qdeg);
      t.pop_back();
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<std::string> labels_of(const std::vector<const SampleSection*>& t) {
  std::vector<std::string> out;
  for (auto* s : t) out.push_back(s->label);
  return out;
}

}  // namespace detail

/// Lemma identities of the derived operations on basis sections q^m v and
/// test functions q^m, over tuples whose combined q-degree is <= qdeg_bound.
inline ViolationReport lwx_property_sweep(const DerivedLWX& W, int qdeg_bound = 2, unsigned workers = 1) {
  const auto& c = W.chart();
  auto s0 = sample_sections(c, W.e0_vars(), qdeg_bound);
  auto s1 = sample_sections(c, W.e1_vars(), qdeg_bound);
  auto all = s0;
  all.insert(all.end(), s1.begin(), s1.end());
  auto fn = sample_functions(c, qdeg_bound);

  using T = std::vector<const SampleSection*>;
  using Check = std::function<void(ViolationReport&, const T&)>;
  struct Job {
    std::vector<const std::vector<SampleSection>*> sets;
    Check run;
  };
  std::vector<Job> jobs;
  auto id = [](const char* name) { return std::string(name); };

  jobs.push_back({{&all, &all}, [&](ViolationReport& r, const T& t) {
                    GPoly e = t[0]->value + t[1]->value;
                    check_poly(r, id("ii"), detail::labels_of(t),
                               W.circ(e, e) - Rational(1, 2) * W.D(W.pair(e, e)));
                  }});
  jobs.push_back({{&all, &all, &fn}, [&](ViolationReport& r, const T& t) {
                    const GPoly &a = t[0]->value, &b = t[1]->value, &f = t[2]->value;
                    check_poly(r, id("anchor1"), detail::labels_of(t),
                               W.circ(a, f * b) - f * W.circ(a, b) - W.rho(a, f) * b);
                    check_poly(r, id("anchor2"), detail::labels_of(t),
                               W.circ(f * a, b) - f * W.circ(a, b) + W.rho(b, f) * a - W.pair(a, b) * W.D(f));
                  }});
  jobs.push_back({{&s0, &s0, &fn}, [&](ViolationReport& r, const T& t) {
                    const GPoly &x = t[0]->value, &y = t[1]->value, &g = t[2]->value;
                    check_poly(r, id("relation2"), detail::labels_of(t),
                               W.rho(W.circ(x, y), g) - W.rho(x, W.rho(y, g)) + W.rho(y, W.rho(x, g)));
                  }});
  jobs.push_back({{&s1, &fn}, [&](ViolationReport& r, const T& t) {
                    check_poly(r, id("relation1"), detail::labels_of(t), W.rho(W.partial(t[0]->value), t[1]->value));
                  }});
  jobs.push_back({{&fn}, [&](ViolationReport& r, const T& t) {
                    check_poly(r, id("relation3"), detail::labels_of(t), W.partial(W.D(t[0]->value)));
                  }});
  jobs.push_back({{&s0, &fn}, [&](ViolationReport& r, const T& t) {
                    const GPoly &x = t[0]->value, Df = W.D(t[1]->value);
                    check_poly(r, id("DFright"), detail::labels_of(t), W.circ(x, Df) - W.D(W.pair(x, Df)));
                    check_poly(r, id("DFleft"), detail::labels_of(t), W.circ(Df, x));
                  }});
  jobs.push_back({{&s1, &s1}, [&](ViolationReport& r, const T& t) {
                    const GPoly &a = t[0]->value, &b = t[1]->value;
                    check_poly(r, id("iii"), detail::labels_of(t), W.pair(W.partial(a), b) - W.pair(a, W.partial(b)));
                  }});
  jobs.push_back({{&all, &all, &all}, [&](ViolationReport& r, const T& t) {
                    const GPoly &a = t[0]->value, &b = t[1]->value, &d = t[2]->value;
                    check_poly(r, id("inv2"), detail::labels_of(t),
                               W.rho(a, W.pair(b, d)) - W.pair(W.circ(a, b), d) - W.pair(b, W.circ(a, d)));
                  }});
  jobs.push_back({{&s0, &s0, &s0}, [&](ViolationReport& r, const T& t) {
                    const GPoly &x = t[0]->value, &y = t[1]->value, &z = t[2]->value;
                    check_poly(r, id("jacobi"), detail::labels_of(t),
                               W.circ(x, W.circ(y, z)) - W.circ(W.circ(x, y), z) - W.circ(y, W.circ(x, z)) -
                                   W.partial(W.omega(x, y, z)));
                  }});
  jobs.push_back({{&s0, &s0, &s0, &s0}, [&](ViolationReport& r, const T& t) {
                    const GPoly &x = t[0]->value, &y = t[1]->value, &z = t[2]->value, &w = t[3]->value;
                    check_poly(r, id("inv3"), detail::labels_of(t),
                               W.pair(W.omega(x, y, z), w) + W.pair(z, W.omega(x, y, w)));
                  }});

  // Partition each job by its first argument.
  struct Task {
    std::size_t job, first;
  };
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < jobs.size(); ++j)
    for (std::size_t k = 0; k < jobs[j].sets[0]->size(); ++k) tasks.push_back({j, k});
  std::vector<ViolationReport> parts(tasks.size());
  auto work = [&](std::size_t ti) {
    const Job& job = jobs[tasks[ti].job];
    const SampleSection& first = (*job.sets[0])[tasks[ti].first];
    if (first.qdeg > qdeg_bound) return;
    std::vector<const SampleSection*> head{&first};
    std::vector<const std::vector<SampleSection>*> rest(job.sets.begin() + 1, job.sets.end());
    detail::for_each_bounded(rest, qdeg_bound - first.qdeg, [&](const T& tail) {
      T t = head;
      t.insert(t.end(), tail.begin(), tail.end());
      job.run(parts[ti], t);
    });
  };
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::atomic_size_t next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < tasks.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }
  ViolationReport out;
  for (auto& p : parts) out.merge(std::move(p));
  out.notes.push_back("sampled on basis sections and test functions with combined q-degree <= " +
                      std::to_string(qdeg_bound));
  return out;
}

}  // namespace qp3
