#include "qp3/gpoly.hpp"

#include <gtest/gtest.h>

#include "support/random_poly.hpp"

using namespace qp3;

namespace {

Env small_env() {
  return make_env({{"q", 0}, {"th1", 1}, {"th2", 1}, {"xi1", 2}});
}

GPoly v(const Env& e, const char* n) { return GPoly::variable(e, n); }

}  // namespace

TEST(Normalize, OddTransposition) {
  auto e = small_env();
  auto f = normalize(e, {{1, {"th2", "th1"}}});
  EXPECT_EQ(f, -(v(e, "th1") * v(e, "th2")));
  EXPECT_EQ(to_string(f), "-th1 th2");
}

TEST(Normalize, OddSquareVanishes) {
  auto e = small_env();
  EXPECT_TRUE(normalize(e, {{1, {"th1", "th1"}}}).is_zero());
}

TEST(Normalize, EvenCommute) {
  auto e = small_env();
  auto f = normalize(e, {{2, {"xi1", "q"}}, {3, {"q", "xi1"}}});
  EXPECT_EQ(f, Rational(5) * (v(e, "q") * v(e, "xi1")));
}

TEST(Normalize, UnknownVariable) {
  auto e = small_env();
  EXPECT_THROW(normalize(e, {{1, {"zz"}}}), EnvironmentError);
}

TEST(Multiply, OddAnticommute) {
  auto e = small_env();
  auto a = v(e, "th1") * v(e, "th2");
  auto b = v(e, "th2") * v(e, "th1");
  EXPECT_EQ(a, -b);
  EXPECT_FALSE(a.is_zero());
}

TEST(Multiply, KillsSquare) {
  auto e = small_env();
  auto f = (v(e, "q") + v(e, "th1") * v(e, "th2")) * v(e, "th1");
  EXPECT_EQ(f, v(e, "q") * v(e, "th1"));
}

TEST(Multiply, OddDegreeThreeAndOne) {
  auto e = make_env({{"xi^1", 1}, {"p_1", 3}});
  auto a = v(e, "xi^1") * v(e, "p_1");
  auto b = v(e, "p_1") * v(e, "xi^1");
  EXPECT_EQ(a, -b);
  EXPECT_EQ(to_string(a), "xi^1 p_1");
}

TEST(Multiply, TermLimit) {
  auto e = make_env({{"a", 0}, {"b", 0}});
  GPoly f(e), g(e);
  for (int i = 0; i < 20; ++i) {
    f += GPoly::monomial(e, {std::uint8_t(i), 0}, 1);
    g += GPoly::monomial(e, {0, std::uint8_t(i)}, 1);
  }
  EXPECT_THROW(multiply(f, g, 100), TermLimitError);
  EXPECT_EQ(multiply(f, g).size(), 400u);
}

TEST(Multiply, EnvironmentMismatch) {
  auto e1 = small_env();
  auto e2 = small_env();
  EXPECT_THROW(v(e1, "q") * v(e2, "q"), EnvironmentError);
}

TEST(Derivative, Examples) {
  auto e = small_env();
  auto t12 = v(e, "th1") * v(e, "th2");
  EXPECT_EQ(derivative(t12, "th2", Side::left), -v(e, "th1"));
  EXPECT_EQ(derivative(t12, "th2", Side::right), v(e, "th1"));
  auto f = v(e, "q") * v(e, "q") * v(e, "xi1");
  EXPECT_EQ(derivative(f, "q", Side::left), Rational(2) * v(e, "q") * v(e, "xi1"));
}

TEST(Degree, Examples) {
  auto e = make_env({{"q", 0}, {"xi_1", 2}, {"xi^1", 1}, {"th_1", 1}, {"p_1", 3}});
  EXPECT_EQ(degree_of(v(e, "xi^1") * v(e, "p_1")), 4);
  auto q = v(e, "q");
  EXPECT_EQ(degree_of(q * q * q * q * q), 0);
  try {
    degree_of(v(e, "xi_1") + v(e, "th_1"));
    FAIL() << "expected InhomogeneousError";
  } catch (const InhomogeneousError& err) {
    EXPECT_EQ(err.degrees(), (std::vector<int>{1, 2}));
  }
  EXPECT_THROW(degree_of(GPoly(e)), DegreeUndefined);
}

TEST(Env, RejectsDuplicates) {
  EXPECT_THROW(make_env({{"a", 1}, {"a", 2}}), EnvironmentError);
  EXPECT_THROW(make_env({{"a", -1}}), EnvironmentError);
}

TEST(GPolyLaws, CommutativityAssociativityLeibniz) {
  auto env = make_env({{"q1", 0}, {"q2", 0}, {"a", 1}, {"b", 1}, {"c", 1}, {"x", 2}, {"y", 2}, {"p", 3}});
  proptest::PolyGen g(env, 7, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int df = 1 + int(g.rng()() % 5), dg = 1 + int(g.rng()() % 5), dh = 1 + int(g.rng()() % 4);
    GPoly f = g.poly(df), k = g.poly(dg), h = g.poly(dh);
    Rational s = ((df * dg) % 2) ? -1 : 1;
    EXPECT_TRUE((f * k - s * (k * f)).is_zero());
    EXPECT_EQ((f * k) * h, f * (k * h));
    for (std::size_t var = 0; var < env->size(); ++var) {
      Rational sv = ((env->degree(var) * df) % 2) ? -1 : 1;
      GPoly lhs = derivative(f * k, var, Side::left);
      GPoly rhs = derivative(f, var, Side::left) * k + sv * (f * derivative(k, var, Side::left));
      EXPECT_EQ(lhs, rhs);
    }
  }
}
