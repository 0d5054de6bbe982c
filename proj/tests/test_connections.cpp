#include <gtest/gtest.h>

#include <cmath>

#include "homspace/connections.hpp"
#include "homspace/curvature.hpp"
#include "homspace/error.hpp"
#include "support.hpp"

namespace homspace {
namespace {

using testing::space;

double array_diff(const Array3& a, const Array3& b) { return max_abs_diff(a, b); }

TEST(Connections, AlphaMapsAreMetricAndEquivariant) {
  for (const char* id : {"cp3", "sphere-s6", "sphere-s7", "berger"}) {
    for (double alpha : {-2.0, -1.0, 0.0, 0.5, 3.0}) {
      const NomizuMap m = nomizu_alpha(space(id), alpha);
      EXPECT_TRUE(is_metric(m, space(id)).ok) << id << " alpha=" << alpha;
      EXPECT_TRUE(equivariance(m, space(id)).ok) << id << " alpha=" << alpha;
    }
  }
}

TEST(Connections, AlphaZeroIsLeviCivitaOfTheNormalMetric) {
  for (const char* id : {"sphere-s6", "sphere-s7", "cp3", "lie-group(su3)"}) {
    const ReductiveSpace& s = space(id);
    const NomizuMap lc = nomizu_levi_civita(s, nomizu_alpha(s, 0.0).metric);
    EXPECT_LT(array_diff(nomizu_alpha(s, 0.0).coeffs, lc.coeffs), 1e-12) << id;
  }
}

TEST(Connections, KoszulAndBlockRulesAgreeOnGt) {
  const ReductiveSpace& s = space("cp3");
  for (double t : {0.3, 0.5, 1.0, 2.5}) {
    const NomizuMap block = nomizu_levi_civita_gt(s, t);
    const NomizuMap koszul = nomizu_levi_civita(s, MetricSpec::gt(t));
    EXPECT_LT(array_diff(block.coeffs, koszul.coeffs), 1e-12) << "t=" << t;
  }
}

TEST(Connections, LeviCivitaIsTorsionFreeAndMetric) {
  for (const char* id : {"cp3", "flag-C(2,1)"}) {
    const ReductiveSpace& s = space(id);
    for (double t : {0.3, 0.9}) {
      const NomizuMap lc = nomizu_levi_civita_gt(s, t);
      EXPECT_LT(torsion(lc, s).t.max_abs(), 1e-12) << id << " t=" << t;
      EXPECT_TRUE(is_metric(lc, s).ok);
      EXPECT_TRUE(equivariance(lc, s).ok);
    }
  }
}

TEST(Connections, StFamilyScalesTheLeviCivitaMap) {
  const ReductiveSpace& s = space("cp3");
  const NomizuMap lc = nomizu_levi_civita_gt(s, 0.8);
  const NomizuMap st = nomizu_st(s, 2.5, 0.8);
  double worst = 0.0;
  for (std::size_t i = 0; i < lc.coeffs.data().size(); ++i) {
    worst = std::max(worst, std::abs(st.coeffs.data()[i] - 2.5 * lc.coeffs.data()[i]));
  }
  EXPECT_LT(worst, 1e-14);
  EXPECT_TRUE(nomizu_st(s, 0.0, 0.8).coeffs.max_abs() == 0.0);
}

TEST(Connections, GtNeedsTwoSummandsAndPositiveT) {
  EXPECT_THROW(nomizu_levi_civita_gt(space("sphere-s7"), 0.5), InvalidArgument);
  EXPECT_THROW(metric_lambdas(space("cp3"), MetricSpec::gt(-1.0)), InvalidArgument);
}

TEST(Connections, OrthonormalRoundTrip) {
  const ReductiveSpace& s = space("cp3");
  const Vec lambdas = metric_lambdas(s, MetricSpec::gt(0.7));
  const Array3& c = nomizu_levi_civita_gt(s, 0.7).coeffs;
  EXPECT_LT(array_diff(from_orthonormal(to_orthonormal(c, lambdas), lambdas), c), 1e-14);
}

TEST(Connections, BiinvariantFamilyOnSo4UsesEachIdeal) {
  // so(4) = su(2) + su(2): self-dual and anti-self-dual combinations of E_ij.
  const ReductiveSpace s = [] {
    LieAlgebra a = build_so(4);
    const int d = a.dim();
    return decompose("so4", std::move(a), b_prime(build_so(4)), Mat(d, 0));
  }();
  // Basis order E12, E13, E14, E23, E24, E34.
  Mat plus = Mat::Zero(6, 3), minus = Mat::Zero(6, 3);
  const double r = 1.0 / std::sqrt(2.0);
  plus(0, 0) = r, plus(5, 0) = r;
  plus(1, 1) = r, plus(4, 1) = -r;
  plus(2, 2) = r, plus(3, 2) = r;
  minus(0, 0) = r, minus(5, 0) = -r;
  minus(1, 1) = r, minus(4, 1) = r;
  minus(2, 2) = r, minus(3, 2) = -r;
  const NomizuMap m = biinvariant_family(s, {plus, minus}, {1.0, -1.0});
  EXPECT_TRUE(is_metric(m, s).ok);
  EXPECT_TRUE(is_derivation(m, s).ok);
  // alpha = 1 on the first ideal kills it; alpha = -1 gives the full bracket on the second.
  const Vec x = s.m_basis.transpose() * s.ip.gram * plus.col(0);
  const Vec y = s.m_basis.transpose() * s.ip.gram * plus.col(1);
  Vec lam = Vec::Zero(6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) lam(c) += x(a) * y(b) * m.coeffs(a, b, c);
  EXPECT_LT(lam.cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(biinvariant_family(s, {plus}, {1.0, 2.0}), InvalidArgument);
}

TEST(Connections, ExoticUnMapsHaveTheExpectedSymmetry) {
  for (int n : {2, 3}) {
    const ExoticMaps e = exotic_un_maps(n);
    const int d = e.space.n();
    auto sym = [d](const Array3& c, double sign) {
      double worst = 0.0;
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
          for (int k = 0; k < d; ++k) worst = std::max(worst, std::abs(c(a, b, k) - sign * c(b, a, k)));
      return worst;
    };
    EXPECT_LT(sym(e.eta1.coeffs, 1.0), 1e-12);
    EXPECT_LT(sym(e.eta2.coeffs, 1.0), 1e-12);
    EXPECT_LT(sym(e.eta3.coeffs, 1.0), 1e-12);
    EXPECT_LT(sym(e.mu.coeffs, -1.0), 1e-12);
  }
}

TEST(Connections, ExoticUnMapsAreAdInvariant) {
  // [Z, eta(X, Y)] = eta([Z, X], Y) + eta(X, [Z, Y]) for Z in u(n).
  const ExoticMaps e = exotic_un_maps(2);
  const ReductiveSpace& s = e.space;
  const int d = s.n();
  for (const BilinearMap* m : {&e.eta1, &e.eta2, &e.eta3, &e.mu}) {
    double worst = 0.0;
    for (int z = 0; z < d; ++z)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
          for (int c = 0; c < d; ++c) {
            double lhs = 0.0, rhs = 0.0;
            for (int w = 0; w < d; ++w) {
              lhs += m->coeffs(x, y, w) * s.cm(z, w, c);
              rhs += s.cm(z, x, w) * m->coeffs(w, y, c) + s.cm(z, y, w) * m->coeffs(x, w, c);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
          }
    EXPECT_LT(worst, 1e-12) << m->kind;
  }
}

TEST(Connections, ExoticMapsFailStc) {
  for (int n : {2, 3}) {
    const ExoticMaps e = exotic_un_maps(n);
    for (const BilinearMap* m : {&e.eta1, &e.eta2, &e.eta3})
      EXPECT_FALSE(satisfies_stc(as_nomizu(*m)).ok) << m->kind << " n=" << n;
    EXPECT_TRUE(satisfies_stc(as_nomizu(e.mu)).ok);
  }
}

TEST(Connections, Eta1Eta2AndMuAreNotDerivations) {
  for (int n : {2, 3}) {
    const ExoticMaps e = exotic_un_maps(n);
    for (const BilinearMap* m : {&e.eta1, &e.eta2, &e.mu})
      EXPECT_FALSE(is_derivation(as_nomizu(*m), e.space).ok) << m->kind << " n=" << n;
  }
}

// eta3 takes values in the centre and tr[X, Y] = 0, so every term of the
// Leibniz defect vanishes: it is a derivation, though a degenerate one.
TEST(Connections, Eta3IsACentralDerivation) {
  for (int n : {2, 3}) {
    const ExoticMaps e = exotic_un_maps(n);
    EXPECT_LT(is_derivation(as_nomizu(e.eta3), e.space).residual, 1e-12) << "n=" << n;
  }
}

TEST(Connections, StcSolutionSpaceIsSpannedByMu) {
  for (int n : {2, 3}) {
    const StcRank r = linear_combination_stc_rank(n);
    ASSERT_EQ(r.solution_dim, 1) << "n=" << n;
    const Vec v = r.solution_basis.col(0);
    EXPECT_LT(v.head(3).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_NEAR(std::abs(v(3)), 1.0, 1e-10);
  }
}

TEST(Connections, StcOnTheCenterAloneLeavesThreeDimensions) {
  // At X = iI: eta1 = -2 iI, eta2 = -n iI, eta3 = -n^2 iI, mu = 0, so one
  // linear equation in four unknowns.
  EXPECT_EQ(linear_combination_stc_rank(2, false).solution_dim, 3);
}

}  // namespace
}  // namespace homspace
