#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "homspace/error.hpp"
#include "homspace/liealg.hpp"
#include "support.hpp"

namespace homspace {
namespace {

using testing::commutator;
using testing::so_unit;

struct Builder {
  const char* name;
  LieAlgebra (*make)();
  int dim;
};

const Builder kBuilders[] = {
    {"so3", [] { return build_so(3); }, 3},   {"so5", [] { return build_so(5); }, 10},
    {"so7", [] { return build_so(7); }, 21},  {"su2", [] { return build_su(2); }, 3},
    {"su3", [] { return build_su(3); }, 8},   {"u2", [] { return build_u(2); }, 4},
    {"u3", [] { return build_u(3); }, 9},     {"sp1", [] { return build_sp(1); }, 3},
    {"sp2", [] { return build_sp(2); }, 10},  {"g2", [] { return build_g2(); }, 14},
};

class AlgebraProperties : public ::testing::TestWithParam<Builder> {};

TEST_P(AlgebraProperties, DimensionMatchesClosedForm) { EXPECT_EQ(GetParam().make().dim(), GetParam().dim); }

TEST_P(AlgebraProperties, StructureConstantsAreAntisymmetricAndSatisfyJacobi) {
  const LieAlgebra a = GetParam().make();
  EXPECT_LT(antisymmetry_residual(a), 1e-12);
  EXPECT_LT(jacobi_residual(a), 1e-12);
  EXPECT_LT(killing_invariance_residual(a), 1e-10);
}

TEST_P(AlgebraProperties, KillingFormMatchesTraceOfNestedCommutators) {
  // K(Z_i, Z_j) = sum_k coordinate_k([Z_i, [Z_j, Z_k]]), computed on the matrices.
  const LieAlgebra a = GetParam().make();
  const int d = a.dim();
  Mat k = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        const Mat inner = commutator(a.basis()[j], a.basis()[l]);
        k(i, j) += a.coordinates(commutator(a.basis()[i], inner))(l);
      }
  EXPECT_LT(testing::max_abs_diff(k, a.killing()), 1e-10);
}

TEST_P(AlgebraProperties, BracketAgreesWithMatrixCommutator) {
  const LieAlgebra a = GetParam().make();
  std::mt19937 rng(3);
  std::normal_distribution<double> normal;
  Vec x(a.dim()), y(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    x(i) = normal(rng);
    y(i) = normal(rng);
  }
  const Mat expected = commutator(a.to_matrix(x), a.to_matrix(y));
  EXPECT_LT((a.to_matrix(bracket(a, x, y)) - expected).cwiseAbs().maxCoeff(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Builders, AlgebraProperties, ::testing::ValuesIn(kBuilders),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(Liealg, KillingOfSoIsMultipleOfBPrime) {
  // -K = 2(n-2) B' on so(n).
  for (int n : {3, 4, 5, 7}) {
    const LieAlgebra a = build_so(n);
    const Mat bp = b_prime(a).gram;
    EXPECT_LT(testing::max_abs_diff(-a.killing(), 2.0 * (n - 2) * bp), 1e-10) << "so(" << n << ")";
  }
}

TEST(Liealg, SoUnitsAreBPrimeOrthonormal) {
  const LieAlgebra a = build_so(5);
  EXPECT_LT(testing::max_abs_diff(b_prime(a).gram, Mat::Identity(10, 10)), 1e-14);
  EXPECT_LT((a.basis()[0] - so_unit(5, 1, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Liealg, G2AnnihilatesTheThreeForm) {
  const LieAlgebra g2 = build_g2();
  for (const Mat& x : g2.basis()) {
    double worst = 0.0;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k) {
          double v = 0.0;
          for (int l = 0; l < 7; ++l) {
            v += x(l, i) * g2_three_form(l, j, k) + x(l, j) * g2_three_form(i, l, k) +
                 x(l, k) * g2_three_form(i, j, l);
          }
          worst = std::max(worst, std::abs(v));
        }
    EXPECT_LT(worst, 1e-12);
  }
  EXPECT_EQ(g2_coordinates_in_so7().cols(), 14);
}

TEST(Liealg, ThreeFormIsTotallyAntisymmetric) {
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) {
        EXPECT_EQ(g2_three_form(i, j, k), -g2_three_form(j, i, k));
        EXPECT_EQ(g2_three_form(i, j, k), -g2_three_form(i, k, j));
      }
  EXPECT_EQ(g2_three_form(0, 1, 2), 1.0);
  EXPECT_EQ(g2_three_form(1, 4, 6), -1.0);
}

TEST(Liealg, SimplicityDistinguishesFactorsAndCenters) {
  EXPECT_TRUE(is_simple(build_su(2)));
  EXPECT_TRUE(is_simple(build_su(3)));
  EXPECT_TRUE(is_simple(build_so(5)));
  EXPECT_TRUE(is_simple(build_g2()));
  EXPECT_TRUE(is_simple(build_sp(2)));
  EXPECT_FALSE(is_simple(build_so(4)));  // su(2) + su(2)
  EXPECT_FALSE(is_simple(build_u(2)));   // center
}

TEST(Liealg, CenterOfUnIsOneDimensional) {
  EXPECT_EQ(center(build_u(3)).cols(), 1);
  EXPECT_EQ(center(build_su(3)).cols(), 0);
}

TEST(Liealg, StabilizerOfAVectorInSoN) {
  const LieAlgebra so5 = build_so(5);
  Vec v = Vec::Zero(5);
  v(4) = 1.0;
  const Mat st = stabilizer_subalgebra(so5, [&](const Mat& x) -> Vec { return x * v; });
  EXPECT_EQ(st.cols(), 6);  // so(4)
}

TEST(Liealg, NegativeKillingRejectsDegenerateForms) {
  EXPECT_THROW(negative_killing(build_u(2)), InvalidArgument);
  EXPECT_NO_THROW(b_prime(build_u(2)));
}

TEST(Liealg, FromBasisRejectsNonClosedSpan) {
  std::vector<Mat> basis{so_unit(3, 1, 2), so_unit(3, 1, 3)};
  EXPECT_THROW(LieAlgebra::from_basis("open", basis), InvariantViolation);
}

TEST(Liealg, BracketRejectsLengthMismatch) {
  const LieAlgebra a = build_su(2);
  EXPECT_THROW(bracket(a, Vec::Zero(3), Vec::Zero(2)), InvalidArgument);
}

TEST(Linalg, NullspaceOfRankDeficientMatrix) {
  Mat a(3, 4);
  a << 1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1;
  const NullspaceResult ns = nullspace(a);
  EXPECT_EQ(ns.rank, 2);
  ASSERT_EQ(ns.basis.cols(), 2);
  EXPECT_LT((a * ns.basis).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((ns.basis.transpose() * ns.basis - Mat::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(ns.gap, 1e10);
}

TEST(Linalg, GramSchmidtAgainstAForm) {
  Mat g(2, 2);
  g << 2, 0.5, 0.5, 1;
  const Mat q = gram_schmidt(Mat::Identity(2, 2), g);
  EXPECT_LT((q.transpose() * g * q - Mat::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
  Mat dep(2, 2);
  dep << 1, 2, 1, 2;
  EXPECT_THROW(gram_schmidt(dep, g), InvalidArgument);
}

}  // namespace
}  // namespace homspace
