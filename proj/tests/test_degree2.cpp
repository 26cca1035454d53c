#include "qp3/degree2.hpp"
#include "support/point_fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

namespace qp3 {
namespace {

/// so(3): [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2.
LInfStructure so3() {
  LInfStructure L(GradedSpace({{0, {"e1", "e2", "e3"}}}));
  L.set(2, {"e1", "e2"}, L.vec({{"e3", 1}}));
  L.set(2, {"e2", "e3"}, L.vec({{"e1", 1}}));
  L.set(2, {"e3", "e1"}, L.vec({{"e2", 1}}));
  return L;
}

void expect_same_lie_brackets(const LInfStructure& a, const LInfStructure& b) {
  ASSERT_EQ(a.space.dim(), b.space.dim());
  for (std::size_t i = 0; i < a.space.dim(); ++i)
    for (std::size_t j = 0; j < a.space.dim(); ++j)
      EXPECT_EQ(a.brackets[2].eval(a.space, {i, j}), b.brackets[2].eval(b.space, {i, j})) << i << " " << j;
}

TEST(Degree2, LieAlgebraReadback) {
  for (const auto& g : {so3(), fixtures::nonabelian2()}) {
    auto c = charts::t2a1(0, int(g.space.dim()));
    GPoly mu = mu_from_lie_algebra(c, g);
    EXPECT_TRUE(master_residual(c, mu).is_zero());
    auto A = derive_lie_algebroid(c, mu);
    expect_same_lie_brackets(A.structure_constants(), g);
  }
}

TEST(Degree2, NonabelianBracketValue) {
  auto c = charts::t2a1(0, 2);
  auto A = derive_lie_algebroid(c, mu_from_lie_algebra(c, fixtures::nonabelian2()));
  EXPECT_EQ(A.bracket(c.var("th_1"), c.var("th_2")), c.var("th_1"));
  EXPECT_EQ(A.bracket(c.var("th_2"), c.var("th_1")), -c.var("th_1"));
}

TEST(Degree2, TangentBundle) {
  auto c = charts::t2a1(2, 2);
  GPoly mu = c.var("p_1") * c.var("xi^1") + c.var("p_2") * c.var("xi^2");
  auto A = derive_lie_algebroid(c, mu);
  GPoly x = c.var("x1"), y = c.var("x2");
  EXPECT_EQ(A.anchor(c.var("th_1"), x * y), y);
  // [x1^2 ∂_2, ∂_1] = -2 x1 ∂_2
  EXPECT_EQ(A.bracket(x * x * c.var("th_2"), c.var("th_1")), Rational(-2) * x * c.var("th_2"));
  EXPECT_THROW(A.bracket(x, c.var("th_1")), StructureError);
}

TEST(Degree2, MasterEquationIffJacobi) {
  std::mt19937 rng(31);
  int valid = 0, invalid = 0;
  for (int t = 0; t < 60; ++t) {
    LInfStructure g(GradedSpace({{0, {"e1", "e2", "e3"}}}));
    for (auto [i, j] : {std::pair{"e1", "e2"}, {"e1", "e3"}, {"e2", "e3"}}) {
      Vec v = zero_vec(3);
      for (auto& x : v)
        if (rng() % 3 == 0) x = Rational(int(rng() % 3) - 1);
      g.set(2, {i, j}, v);
    }
    auto c = charts::t2a1(0, 3);
    bool jacobi = verify_linf(g, 3).passed();
    bool master = master_residual(c, mu_from_lie_algebra(c, g)).is_zero();
    EXPECT_EQ(jacobi, master) << "trial " << t;
    (master ? valid : invalid)++;
  }
  EXPECT_GT(valid, 0);
  EXPECT_GT(invalid, 0);
}

TEST(Degree2, RejectsWrongInput) {
  auto c = charts::t2a1(0, 2);
  EXPECT_THROW(derive_lie_algebroid(charts::t3a2(1, 1), GPoly(charts::t3a2(1, 1).env())), ChartError);
  EXPECT_THROW(DerivedLieAlgebroid(c, c.var("xi^1")), DegreeError);
  auto A = derive_lie_algebroid(c, mu_from_lie_algebra(c, fixtures::nonabelian2()));
  EXPECT_THROW(A.bracket(c.var("xi^1"), c.var("th_1")), StructureError);
}

}  // namespace
}  // namespace qp3
