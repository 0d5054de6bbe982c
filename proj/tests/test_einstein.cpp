#include <gtest/gtest.h>

#include <cmath>

#include "homspace/einstein.hpp"
#include "homspace/error.hpp"
#include "support.hpp"

namespace homspace {
namespace {

using testing::space;

TEST(Quadratic, TwoSimpleRoots) {
  const QuadraticRoots q = solve_quadratic(-4, 6, -2, 1e-12);
  ASSERT_EQ(q.roots.size(), 2u);
  EXPECT_NEAR(q.roots[0], 0.5, 1e-15);
  EXPECT_NEAR(q.roots[1], 1.0, 1e-15);
  EXPECT_NEAR(q.discriminant, 4.0, 1e-14);
}

TEST(Quadratic, DoubleRootAndNoRealRoots) {
  const QuadraticRoots d = solve_quadratic(1, -2, 1, 1e-12);
  ASSERT_EQ(d.roots.size(), 2u);
  EXPECT_DOUBLE_EQ(d.roots[0], 1.0);
  EXPECT_DOUBLE_EQ(d.roots[1], 1.0);
  EXPECT_TRUE(solve_quadratic(1, 0, 1, 1e-12).roots.empty());
}

TEST(Quadratic, DegenerateAndIdenticallyZero) {
  const QuadraticRoots lin = solve_quadratic(0, 2, -1, 1e-12);
  EXPECT_TRUE(lin.degenerate);
  ASSERT_EQ(lin.roots.size(), 1u);
  EXPECT_DOUBLE_EQ(lin.roots[0], 0.5);
  const QuadraticRoots zero = solve_quadratic(1e-15, -1e-15, 0, 1e-12);
  EXPECT_TRUE(zero.identically_zero);
  EXPECT_TRUE(zero.roots.empty());
}

TEST(Quadratic, RootsAreAccurateWithoutCancellation) {
  const QuadraticRoots q = solve_quadratic(1, -1e8, 1, 1e-30);
  ASSERT_EQ(q.roots.size(), 2u);
  EXPECT_NEAR(q.roots[0], 1e-8, 1e-20);
}

TEST(SkewRoots, EqualCasimirsWithNonzeroCGiveZeroAndTwo) {
  for (double cc : {-3.0, 0.5, 7.0}) {
    const QuadraticRoots q = skew_einstein_roots(cc, 0.0);
    ASSERT_EQ(q.roots.size(), 2u) << cc;
    EXPECT_NEAR(q.roots[0], 0.0, 1e-14);
    EXPECT_NEAR(q.roots[1], 2.0, 1e-14);
  }
}

TEST(SkewRoots, NegativeDiscriminantHasNoRoots) {
  // cc > 0 and cc + 4 dcas < 0.
  const QuadraticRoots q = skew_einstein_roots(1.0, -1.0);
  EXPECT_LT(q.discriminant, 0.0);
  EXPECT_TRUE(q.roots.empty());
}

TEST(SkewRoots, GeneralRootsAreOnePlusMinusSqrt) {
  const double cc = 2.0, dcas = 0.3;
  const QuadraticRoots q = skew_einstein_roots(cc, dcas);
  ASSERT_EQ(q.roots.size(), 2u);
  const double w = std::sqrt((cc + 4 * dcas) / cc);
  EXPECT_NEAR(q.roots[0], 1 - w, 1e-14);
  EXPECT_NEAR(q.roots[1], 1 + w, 1e-14);
}

TEST(Riemannian, Cp3Coefficients) {
  const QuadraticReport r = riemannian_quadratic(space("cp3"));
  EXPECT_NEAR(r.alpha, -4.0, 1e-10);
  EXPECT_NEAR(r.beta, 6.0, 1e-10);
  EXPECT_NEAR(r.gamma, -2.0, 1e-10);
  ASSERT_EQ(r.solution.roots.size(), 2u);
  EXPECT_NEAR(r.solution.roots[0], 0.5, 1e-10);
  EXPECT_NEAR(r.solution.roots[1], 1.0, 1e-10);
  EXPECT_TRUE(r.killing_root);
  EXPECT_TRUE(r.kahler_root);
  EXPECT_EQ(r.positive_roots, 2);
}

TEST(Riemannian, RootsSolveTheCurvatureEinsteinCondition) {
  for (const char* id : {"cp3", "flag-C(2,1)", "flag-D(4,3)", "flag-C(5,3)"}) {
    const QuadraticReport r = riemannian_quadratic(space(id));
    ASSERT_FALSE(r.solution.roots.empty()) << id;
    for (double res : r.root_residuals) EXPECT_LT(res, 1e-9) << id;
    EXPECT_LT(r.spread, 1e-8) << id;
  }
}

TEST(Riemannian, EqualCasimirsMakeTheKillingMetricEinstein) {
  for (const char* id : {"cp3", "flag-D(4,3)", "flag-B(5,4)"}) {
    const CasimirData c = casimir(space(id));
    EXPECT_NEAR(c.constants[0], c.constants[1], 1e-9) << id;
    EXPECT_TRUE(riemannian_quadratic(space(id)).killing_root) << id;
  }
}

TEST(Riemannian, Cp3DiagonalRicciAtKahlerMetric) {
  const DiagonalRicci d = ricci_st_diagonal(space("cp3"), 1.0, 1.0);
  const Vec lambdas = metric_lambdas(space("cp3"), MetricSpec::gt(1.0));
  EXPECT_NEAR(d.r1 / lambdas(0), d.r2 / lambdas(5), 1e-12);
}

TEST(Riemannian, CanonicalRicciAtKillingMetricIsCasimir) {
  const DiagonalRicci d = ricci_st_diagonal(space("cp3"), 0.0, 0.5);
  EXPECT_NEAR(d.r1, 2.0, 1e-12);
  EXPECT_NEAR(d.r2, 2.0, 1e-12);
}

TEST(Riemannian, NeedsTwoSummands) {
  EXPECT_THROW(riemannian_quadratic(space("sphere-s7")), InvalidArgument);
}

// With Cas1 = Cas2 the skew equation vanishes identically: cc = 2 (Cas2 - Cas1).
TEST(SkewEinstein, Cp3QuadraticVanishesAndEverySSolves) {
  const ReductiveSpace& s = space("cp3");
  const QuadraticReport r = skew_einstein_quadratic(s);
  EXPECT_NEAR(r.cc, 0.0, 1e-12);
  EXPECT_NEAR(r.dcas, 0.0, 1e-12);
  EXPECT_TRUE(r.solution.identically_zero);
  for (double sp : {-1.0, 0.0, 0.7, 2.0, 5.0}) EXPECT_LT(std::abs(skew_einstein_defect(s, sp)), 1e-12) << sp;
}

TEST(SkewEinstein, CoefficientIsTwiceTheCasimirGap) {
  for (const char* id : {"cp3", "flag-C(2,1)", "flag-D(4,3)", "flag-C(5,3)", "flag-C(3,1)", "flag-B(3,2)"}) {
    const QuadraticReport r = skew_einstein_quadratic(space(id));
    EXPECT_NEAR(r.cc, -2.0 * r.dcas, 1e-10) << id;
  }
}

TEST(SkewEinstein, DefectIsTheQuadraticUpToScale) {
  // On a space with Cas1 != Cas2 the curvature-trace defect must be a fixed
  // multiple of cc s^2 - 2 cc s - 4 dcas.
  const ReductiveSpace& s = space("flag-C(3,1)");
  const QuadraticReport r = skew_einstein_quadratic(s);
  ASSERT_GT(std::abs(r.dcas), 1e-6);
  auto poly = [&](double sp) { return r.cc * sp * sp - 2 * r.cc * sp - 4 * r.dcas; };
  const double ratio = skew_einstein_defect(s, 0.0) / poly(0.0);
  for (double sp : {-1.0, 0.5, 2.0, 3.0}) {
    EXPECT_NEAR(skew_einstein_defect(s, sp), ratio * poly(sp), 1e-9) << sp;
  }
}

TEST(NablaAlphaEinstein, IsotropyIrreducibleSpaces) {
  for (const char* id : {"sphere-s6", "sphere-s7", "berger"}) {
    for (double alpha : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      EXPECT_LT(nabla_alpha_einstein_residual(space(id), alpha), 1e-7) << id << " " << alpha;
    }
    EXPECT_LT(std::abs(casimir_bracket_identity(space(id)).residual), 1e-7) << id;
  }
}

TEST(NablaAlphaEinstein, IdentityTermsUnderKillingNormalization) {
  // With ip = B the Killing trace on m equals n.
  const CasimirBracketIdentity s7 = casimir_bracket_identity(space("sphere-s7"));
  EXPECT_NEAR(s7.killing_trace, 7.0, 1e-10);
  EXPECT_NEAR(2 * 7 * s7.cas + s7.bracket_sum, 7.0, 1e-10);
}

TEST(NablaAlphaEinstein, PlusMinusOneRicciIsCasimirTimesKilling) {
  const ReductiveSpace& s = space("sphere-s7");
  const double cas = casimir(s).constants[0];
  for (double alpha : {-1.0, 1.0}) {
    EXPECT_LT(testing::max_abs_diff(ricci_alpha_closed(s, alpha).ric, cas * Mat::Identity(7, 7)), 1e-12);
  }
}

TEST(NablaAlphaEinstein, IdentityRejectsReducibleSpaces) {
  EXPECT_THROW(casimir_bracket_identity(space("cp3")), InvalidArgument);
}

}  // namespace
}  // namespace homspace
