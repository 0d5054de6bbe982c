#include <gtest/gtest.h>

#include "homspace/equivariant.hpp"
#include "homspace/error.hpp"
#include "support.hpp"

namespace homspace {
namespace {

using testing::space;

struct Expected {
  const char* id;
  int dimension;
  int skew;
};

class HomDimension : public ::testing::TestWithParam<Expected> {};

TEST_P(HomDimension, MatchesAndIsWellSeparated) {
  const auto [id, dim, skew] = GetParam();
  const HomResult r = hom_dimension(space(id));
  EXPECT_EQ(r.dimension, dim);
  EXPECT_EQ(r.skew, skew);
  EXPECT_EQ(r.symmetric, dim - skew);
  EXPECT_GE(r.gap, 1e3);
  EXPECT_LT(r.max_residual, 1e-10);
  EXPECT_LT(group_spot_check(r, space(id)), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Spheres, HomDimension,
                         ::testing::Values(Expected{"sphere-s7", 1, 1}, Expected{"sphere-s6", 2, 2},
                                           Expected{"sphere-s4", 0, 0}),
                         [](const auto& info) {
                           std::string n = info.param.id;
                           n.erase(0, 7);
                           return n;
                         });

TEST(Equivariant, BracketSpansTheSevenSphereSolutions) {
  const HomResult r = hom_dimension(space("sphere-s7"));
  const BracketCertificate c = certify_bracket_span(r, space("sphere-s7"));
  EXPECT_TRUE(c.bracket_solves);
  EXPECT_TRUE(c.bracket_in_span);
  EXPECT_EQ(c.complement_dim, 0);
}

TEST(Equivariant, SixSphereHasOneMapBeyondTheBracket) {
  const HomResult r = hom_dimension(space("sphere-s6"));
  const BracketCertificate c = certify_bracket_span(r, space("sphere-s6"));
  EXPECT_TRUE(c.bracket_in_span);
  EXPECT_EQ(c.complement_dim, 1);
}

TEST(Equivariant, SolutionsAreSkewWhenFlagged) {
  const HomResult r = hom_dimension(space("sphere-s6"));
  for (int k = 0; k < r.skew; ++k) {
    const Array3& eta = r.basis[static_cast<std::size_t>(k)];
    double worst = 0.0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) worst = std::max(worst, std::abs(eta(a, b, c) + eta(b, a, c)));
    EXPECT_LT(worst, 1e-12);
  }
}

TEST(Equivariant, DefectDetectsANonEquivariantMap) {
  Array3 eta(7, 7, 7);
  eta(0, 1, 2) = 1.0;
  eta(1, 0, 2) = -1.0;
  EXPECT_GT(equivariance_defect(space("sphere-s7"), eta), 1e-3);
  EXPECT_LT(equivariance_defect(space("sphere-s7"), space("sphere-s7").cm), 1e-12);
}

TEST(Equivariant, LargeMIsRejected) {
  EXPECT_THROW(hom_dimension(space("flag-C(5,3)")), InvalidArgument);
}

}  // namespace
}  // namespace homspace
