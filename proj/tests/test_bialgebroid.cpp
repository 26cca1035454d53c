#include "qp3/bialgebroid.hpp"
#include "qp3/semidirect.hpp"
#include "support/algebroid_fixtures.hpp"

#include <gtest/gtest.h>

namespace qp3 {
namespace {

TEST(Bialgebroid, RoutesAgreeOnFixtures) {
  for (const auto& k : fixtures::bialgebroid_cases()) {
    auto b = bialgebroid_check(k.chart, k.mu, k.gamma);
    EXPECT_EQ(b.master_route(), k.expected) << k.name;
    EXPECT_EQ(b.derivation_route(), k.expected) << k.name;
    EXPECT_TRUE(b.routes_agree()) << k.name;
    EXPECT_GT(b.derivation.checked, 0u) << k.name;
  }
}

TEST(Bialgebroid, TrivialDualHasNoResiduals) {
  auto k = fixtures::trivial_dual();
  auto b = bialgebroid_check(k.chart, k.mu, k.gamma);
  EXPECT_TRUE(b.summary().passed());
}

TEST(Bialgebroid, Gamma2MismatchRejected) {
  auto k = fixtures::gamma2_mismatch();
  auto b = bialgebroid_check(k.chart, k.mu, k.gamma);
  EXPECT_FALSE(b.gamma2_matches());
  EXPECT_EQ(b.gamma2_difference, -k.chart.var("xi_1") * k.chart.var("th^1"));
  auto s = b.summary();
  ASSERT_FALSE(s.violations.empty());
  EXPECT_EQ(s.violations[0].identity, "gamma2=mu2");
  EXPECT_THROW(bialgebroid_double(k.chart, k.mu, k.gamma), StructureError);
}

TEST(Bialgebroid, CompatibilityViolationLocated) {
  auto k = fixtures::compatibility_violation();
  auto b = bialgebroid_check(k.chart, k.mu, k.gamma);
  EXPECT_TRUE(b.gamma2_matches());
  for (const auto& n : b.mu_own) EXPECT_TRUE(n.value.is_zero()) << n.name;
  for (const auto& n : b.gamma_own) EXPECT_TRUE(n.value.is_zero()) << n.name;
  ASSERT_EQ(b.compatibility.size(), 3u);
  EXPECT_TRUE(b.compatibility[0].value.is_zero());
  EXPECT_FALSE(b.compatibility[1].value.is_zero());
  EXPECT_EQ(b.compatibility[1].name, "{mu134,gamma5}");
  EXPECT_TRUE(b.compatibility[2].value.is_zero());
  EXPECT_EQ(b.total_residual, Rational(2) * b.compatibility[1].value);
  EXPECT_FALSE(b.derivation.passed());
}

TEST(Bialgebroid, ExplicitFormulasAgreeWithDerived) {
  for (const auto& k : fixtures::bialgebroid_cases()) {
    if (!k.expected) continue;
    auto d = bialgebroid_double(k.chart, k.mu, k.gamma);
    auto r = compare_lwx(d.derived, d.explicit_ops, 2);
    EXPECT_TRUE(r.passed()) << k.name << ": " << r.violations.size() << " mismatches, first "
                            << (r.violations.empty() ? "" : r.violations[0].identity + " " + r.violations[0].detail);
    EXPECT_TRUE(lwx_property_sweep(d.derived, 1).passed()) << k.name;
  }
}

TEST(Bialgebroid, TrivialDualReducesToSemidirect) {
  auto k = fixtures::trivial_dual();
  auto d = bialgebroid_double(k.chart, k.mu, k.gamma);
  auto r = compare_lwx(derive_lwx(k.chart, k.mu), d.explicit_ops, 0);
  EXPECT_TRUE(r.passed());
  auto A = d.derived.at_point();
  auto B = semidirect_double(fixtures::crossed2());
  EXPECT_EQ(A.S, B.S);
  EXPECT_EQ(A.ops.d, B.ops.d);
  EXPECT_EQ(A.ops.l2_00, B.ops.l2_00);
  EXPECT_EQ(A.ops.l2_01, B.ops.l2_01);
  EXPECT_EQ(A.ops.l2_10, B.ops.l2_10);
  EXPECT_EQ(A.ops.l3, B.ops.l3);
}

TEST(Bialgebroid, PartialIsSumOfDifferentials) {
  auto k = fixtures::trivial_dual_scaling();
  auto d = bialgebroid_double(k.chart, k.mu, k.gamma);
  const auto& c = k.chart;
  GPoly q = c.var("q1");
  GPoly x1 = q * c.var("th_1"), a0 = q * q * c.var("xi^2");
  const auto& L = d.explicit_ops.primal();
  const auto& D = *d.explicit_ops.dual();
  EXPECT_EQ(d.derived.partial(x1 + a0), L.l1(x1) + D.l1(a0));
  EXPECT_EQ(D.l1(a0), L.l1_star(a0));
}

}  // namespace
}  // namespace qp3
