// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic,
// tolerance zero. Exit status 0 only when every criterion passes.

#include "qp3/bialgebroid.hpp"
#include "qp3/degree2.hpp"
#include "qp3/model.hpp"
#include "qp3/semidirect.hpp"
#include "qp3/skew.hpp"
#include "support/algebroid_fixtures.hpp"
#include "support/point_fixtures.hpp"
#include "support/random_poly.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using namespace qp3;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

unsigned workers() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

ModelDocument load(const std::string& file) {
  std::ifstream in(std::string(QP3_FIXTURE_DIR) + "/" + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

const NamedPolynomial& poly(const ModelDocument& d, const char* name) { return *d.poly(name); }

GPoly standard_theta(const DarbouxChart& c, int m) {
  GPoly t = c.zero();
  for (int i = 1; i <= m; ++i) t += c.var("xi^" + std::to_string(i)) * c.var("p_" + std::to_string(i));
  return t;
}

// 1. antisymmetry, Leibniz and Jacobi of the bracket on random homogeneous input
Outcome poisson_laws() {
  Outcome o;
  std::size_t cases = 0, live = 0;
  for (auto c : {charts::t3_graded(2, 1, 1), charts::t2a1(2, 2)}) {
    if (c.env()->size() > 8) o.require(false, "chart has more than 8 variables");
    proptest::PolyGen g(c.env(), 20 + c.n(), 4);
    const int n = c.n();
    for (int t = 0; t < 200; ++t, ++cases) {
      int df = int(g.rng()() % (n + 3)), dg = int(g.rng()() % (n + 3)), dh = int(g.rng()() % (n + 2));
      GPoly f = g.nonzero(df, 3), k = g.nonzero(dg, 3), h = g.nonzero(dh, 3);
      live += !poisson(c, f, poisson(c, k, h)).is_zero();
      Rational s1 = (((df - n) * (dg - n)) % 2) ? -1 : 1;
      Rational s2 = (((df - n) * dg) % 2) ? -1 : 1;
      o.require((poisson(c, f, k) + s1 * poisson(c, k, f)).is_zero(), "antisymmetry");
      o.require((poisson(c, f, k * h) - poisson(c, f, k) * h - s2 * (k * poisson(c, f, h))).is_zero(), "Leibniz");
      o.require((poisson(c, f, poisson(c, k, h)) - poisson(c, poisson(c, f, k), h) -
                 s1 * poisson(c, k, poisson(c, f, h)))
                    .is_zero(),
                "Jacobi");
    }
  }
  o.detail = o.pass ? std::to_string(cases) + " random triples on a degree-3 and a degree-2 chart, " +
                             std::to_string(live) + " with a nonzero double bracket" : o.detail;
  return o;
}

// 2. master equation fixtures and the decomposition identities
Outcome master_fixtures() {
  Outcome o;
  auto dorf = load("dorfman.model"), four = load("four_form.model"), twist = load("twist5.model");
  struct Case {
    const DarbouxChart* chart;
    GPoly theta;
    std::string name;
  };
  std::vector<Case> all = {{dorf.chart("T3"), poly(dorf, "Theta").value, "dorfman"},
                           {four.chart("T3"), poly(four, "Theta").value, "four_form"},
                           {twist.chart("T3"), poly(twist, "Theta").value, "twist5"}};
  o.require(master_residual(*all[0].chart, all[0].theta).is_zero(), "dorfman residual");
  o.require(master_residual(*all[1].chart, all[1].theta).is_zero(), "four_form residual");
  o.require(!master_residual(*all[2].chart, all[2].theta).is_zero(), "twist5 residual vanishes");
  std::vector<fixtures::ChartFunction> extra = fixtures::lie2_algebroids();
  for (const auto& b : fixtures::bialgebroid_cases()) {
    auto sm = decompose(b.chart, b.mu, Family::mu);
    extra.push_back({b.name, b.chart, b.mu + b.gamma - sm.low()});
  }
  for (auto& e : extra) all.push_back({&e.chart, e.mu, e.name});
  std::size_t nonzero = 0;
  for (const auto& k : all) {
    auto sf = decompose(*k.chart, k.theta, Family::theta);
    bool res = master_residual(*k.chart, k.theta).is_zero();
    nonzero += !res;
    o.require(sf.identities_vanish() == res, "identities disagree with residual on " + k.name);
  }
  if (o.pass)
    o.detail = std::to_string(all.size()) + " fixtures, " + std::to_string(nonzero) +
               " with nonzero residual; identities agree on all";
  return o;
}

// 3. derived bracket of xi^i p_i against the Dorfman bracket on R^2
Outcome dorfman() {
  Outcome o;
  auto c = charts::t3a2(2, 2);
  auto W = derive_lwx(c, standard_theta(c, 2));
  std::mt19937 rng(4242);
  auto fn = [&] {
    GPoly f = c.zero();
    for (const auto& m : base_monomials(c, 3))
      if (rng() % 3 == 0) f += Rational(int(rng() % 7) - 3, int(rng() % 2) + 1) * m;
    return f;
  };
  auto dq = [](const GPoly& f, int i) { return derivative(f, "q" + std::to_string(i), Side::left); };
  auto xi_ = [&](int i) { return c.var("xi_" + std::to_string(i + 1)); };
  auto xi = [&](int i) { return c.var("xi^" + std::to_string(i + 1)); };
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    GPoly X[2], A[2], Y[2], B[2];
    for (int i = 0; i < 2; ++i) X[i] = fn(), A[i] = fn(), Y[i] = fn(), B[i] = fn();
    GPoly a = c.zero(), b = c.zero(), want = c.zero();
    for (int i = 0; i < 2; ++i) {
      a += X[i] * xi_(i) + A[i] * xi(i);
      b += Y[i] * xi_(i) + B[i] * xi(i);
    }
    for (int i = 0; i < 2; ++i) {
      GPoly v = c.zero(), w = c.zero();
      for (int j = 0; j < 2; ++j) {
        v += X[j] * dq(Y[i], j + 1) - Y[j] * dq(X[i], j + 1);  // [X,Y]
        w += X[j] * dq(B[i], j + 1) + B[j] * dq(X[j], i + 1);  // L_X β
        w -= Y[j] * (dq(A[i], j + 1) - dq(A[j], i + 1));       // ι_Y dα
      }
      want += v * xi_(i) + w * xi(i);
    }
    o.require(W.circ(a, b) == want, "trial " + std::to_string(t));
  }
  if (o.pass) o.detail = std::to_string(trials) + " random section pairs, exact equality";
  return o;
}

// 4. property sweep of the derived operations on every Q-structure fixture
Outcome sweep() {
  Outcome o;
  std::vector<std::pair<std::string, DerivedLWX>> cases;
  auto dorf = load("dorfman.model"), four = load("four_form.model");
  cases.push_back({"dorfman", derive_lwx(*dorf.chart("T3"), poly(dorf, "Theta").value)});
  cases.push_back({"four_form", derive_lwx(*four.chart("T3"), poly(four, "Theta").value)});
  {
    auto c = charts::t3a2(1, 1);
    cases.push_back({"rank1", derive_lwx(c, c.var("q1") * c.var("q1") * c.var("xi^1") * c.var("p_1"))});
  }
  for (const auto& k : fixtures::lie2_algebroids()) cases.push_back({k.name, derive_lwx(k.chart, k.mu)});
  for (const auto& b : fixtures::bialgebroid_cases())
    if (b.expected) cases.push_back({std::string(b.name) + "_double", bialgebroid_double(b.chart, b.mu, b.gamma).derived});
  std::size_t checked = 0;
  for (const auto& [name, W] : cases) {
    auto r = lwx_property_sweep(W, 2, workers());
    checked += r.checked;
    o.require(r.passed(), name + ": " + (r.passed() ? "" : r.violations[0].identity));
  }
  if (o.pass)
    o.detail = std::to_string(cases.size()) + " fixtures, " + std::to_string(checked) +
               " identity instances at q-degree <= 2";
  return o;
}

// Coadjoint double of a Lie algebra from its structure constants; returns
// T(x, y, ξ) = 1/6 (S(x,[y,ξ]) + S(ξ,[x,y]) + S(y,[ξ,x])) on basis elements.
Rational t_oracle(const LInfStructure& g, std::size_t x, std::size_t y, std::size_t xi) {
  const std::size_t n = g.space.dim();
  auto br = [&](std::size_t a, std::size_t b) { return g.brackets[2].eval(g.space, {a, b}); };
  // elements of g + g* as (vector part, covector part)
  using El = std::pair<Vec, Vec>;
  auto e = [&](std::size_t i) { return El{unit_vec(n, i), zero_vec(n)}; };
  auto f = [&](std::size_t i) { return El{zero_vec(n), unit_vec(n, i)}; };
  // [x, η] = ad*_x η with (ad*_x η)(z) = -η([x, z])
  auto bracket = [&](const El& a, const El& b) {
    El out{zero_vec(n), zero_vec(n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!a.first[i].is_zero() && !b.first[j].is_zero()) axpy(out.first, a.first[i] * b.first[j], br(i, j));
        for (std::size_t z = 0; z < n; ++z) {
          Rational v = br(i, z)[j];
          if (!a.first[i].is_zero() && !b.second[j].is_zero()) out.second[z] -= a.first[i] * b.second[j] * v;
          if (!b.first[i].is_zero() && !a.second[j].is_zero()) out.second[z] += b.first[i] * a.second[j] * v;
        }
      }
    return out;
  };
  auto S = [&](const El& a, const El& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < n; ++i) r += a.first[i] * b.second[i] + b.first[i] * a.second[i];
    return r;
  };
  El X = e(x), Y = e(y), Xi = f(xi);
  return Rational(1, 6) * (S(X, bracket(Y, Xi)) + S(Xi, bracket(X, Y)) + S(Y, bracket(Xi, X)));
}

// 5. skew-symmetrization of the point doubles is a Lie 3-algebra
Outcome skew() {
  Outcome o;
  std::string times;
  auto run = [&](const std::string& name, const LInfStructure& g) {
    auto t0 = std::chrono::steady_clock::now();
    auto L = skew_symmetrize(semidirect_double(g));
    auto r = verify_linf(L, 5, workers());
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(r.passed(), name + " fails verify_linf");
    o.require(s < 5.0, name + " took longer than 5 s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.2fs", name.c_str(), s);
    times += (times.empty() ? "" : ", ") + std::string(buf);
    return L;
  };
  run("abelian", fixtures::abelian11());
  auto g = fixtures::nonabelian2();
  auto L = run("nonabelian2", g);
  run("l3only", fixtures::l3only());
  o.require(evaluate_bracket(L, 3, {"e1", "e2", "e1*"}) == L.vec({{"1", Rational(-1, 2)}}), "l3(e1,e2,e1*) != -1/2");
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t xi = 0; xi < 2; ++xi) {
        Vec got = evaluate_bracket(L, 3, {g.space.label(x), g.space.label(y), dual_label(g.space.label(xi))});
        o.require(got == L.vec({{"1", -t_oracle(g, x, y, xi)}}), "l3 differs from the T oracle");
      }
  if (o.pass) o.detail = "l3(e1,e2,e1*) = -1/2; " + times;
  return o;
}

// 6. semidirect doubles and the explicit formulas for split Lie 2-algebroids
Outcome semidirect() {
  Outcome o;
  for (const auto& g : {fixtures::nonabelian2(), fixtures::abelian11(), fixtures::l3only(), fixtures::crossed2()})
    o.require(verify_lwx_point(semidirect_double(g)).passed(), "semidirect double fails verify_lwx_point");
  std::size_t checked = 0;
  auto k = fixtures::crossed2_point();
  auto r = compare_lwx(derive_lwx(k.chart, k.mu), stl2a_lwx(k.chart, k.mu), 0);
  checked += r.checked;
  o.require(r.passed(), "explicit formulas disagree on crossed2_point");
  for (const auto& f : fixtures::lie2_algebroids()) {
    auto rr = compare_lwx(derive_lwx(f.chart, f.mu), stl2a_lwx(f.chart, f.mu), 2);
    checked += rr.checked;
    o.require(rr.passed(), std::string("explicit formulas disagree on ") + f.name);
  }
  if (o.pass) o.detail = "4 doubles verified; " + std::to_string(checked) + " explicit/derived comparisons agree";
  return o;
}

// 7. total master equation versus the derivation conditions
Outcome bialgebroid() {
  Outcome o;
  std::string seen;
  for (const auto& b : {fixtures::trivial_dual(), fixtures::gamma2_mismatch(), fixtures::compatibility_violation()}) {
    auto r = bialgebroid_check(b.chart, b.mu, b.gamma, 2);
    o.require(r.routes_agree(), std::string("routes disagree on ") + b.name);
    o.require(r.master_route() == b.expected, std::string("unexpected verdict on ") + b.name);
    seen += (seen.empty() ? "" : ", ") + std::string(b.name) + (r.master_route() ? " pass" : " fail");
  }
  if (o.pass) o.detail = "routes agree: " + seen;
  return o;
}

// 8. Lie algebras on T*[2]A[1]
Outcome degree_two() {
  Outcome o;
  LInfStructure so3(GradedSpace({{0, {"e1", "e2", "e3"}}}));
  so3.set(2, {"e1", "e2"}, so3.vec({{"e3", 1}}));
  so3.set(2, {"e2", "e3"}, so3.vec({{"e1", 1}}));
  so3.set(2, {"e3", "e1"}, so3.vec({{"e2", 1}}));
  for (const auto& g : {so3, fixtures::nonabelian2()}) {
    const std::size_t n = g.space.dim();
    auto c = charts::t2a1(0, int(n));
    GPoly mu = mu_from_lie_algebra(c, g);
    o.require(master_residual(c, mu).is_zero(), "{mu,mu} != 0");
    auto A = derive_lie_algebroid(c, mu);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GPoly want = c.zero();
        Vec v = g.brackets[2].eval(g.space, {i, j});
        for (std::size_t k = 0; k < n; ++k) want += v[k] * c.var("th_" + std::to_string(k + 1));
        o.require(A.bracket(c.var("th_" + std::to_string(i + 1)), c.var("th_" + std::to_string(j + 1))) == want,
                  "bracket differs from the structure constants");
      }
  }
  if (o.pass) o.detail = "so(3) and the 2-dim nonabelian algebra reproduced";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit;  // seconds, 0 for none
  };
  std::vector<Criterion> all = {
      {1, "Poisson law suite", poisson_laws, 10},
      {2, "master fixtures and decomposition", master_fixtures, 0},
      {3, "Dorfman reproduction", dorfman, 30},
      {4, "derived-operation property sweep", sweep, 0},
      {5, "skew-symmetrization to Lie 3-algebras", skew, 0},
      {6, "semidirect doubles and explicit formulas", semidirect, 0},
      {7, "bialgebroid route equivalence", bialgebroid, 0},
      {8, "degree-2 regression", degree_two, 0},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && s >= c.limit) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(int(c.limit)) + " s limit)";
    }
    failures += !o.pass;
    std::printf("criterion %d %-42s %s  %.2fs  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
