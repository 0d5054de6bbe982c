#pragma once

#include <vector>

#include "homspace/reductive.hpp"

namespace homspace {

struct HomResult {
  int dimension = 0;
  int skew = 0;
  int symmetric = 0;
  // Skew solutions first, then symmetric ones; eta(a, b, c) is the Z_c
  // coefficient of eta(Z_a, Z_b).
  std::vector<Array3> basis;
  Vec singular_values;
  double gap = 0.0;
  double max_residual = 0.0;  // of the returned basis in the linear system
};

// The linear system has n^3 unknowns; larger m is rejected.
inline constexpr int kHomDimensionMaxN = 12;

// Ad(K)-equivariant bilinear maps m x m -> m, solved from
// ad(W) eta(X, Y) = eta(ad(W) X, Y) + eta(X, ad(W) Y) for W in the k basis.
// Throws NumericalError when the singular-value gap is below min_gap and
// InvalidArgument when dim m exceeds kHomDimensionMaxN.
HomResult hom_dimension(const ReductiveSpace& s, double rel_threshold = 1e-7, double min_gap = 1e3);

// max |equivariance defect| of one bilinear map.
double equivariance_defect(const ReductiveSpace& s, const Array3& eta);

struct BracketCertificate {
  bool bracket_solves = false;
  bool bracket_in_span = false;
  double system_residual = 0.0;
  double projection_residual = 0.0;
  int complement_dim = 0;  // solutions independent of the bracket
};
BracketCertificate certify_bracket_span(const HomResult& r, const ReductiveSpace& s, double tol = kDefaultTol);

// Group-level check g eta(X, Y) = eta(g X, g Y) for g = exp(ad W) with
// seeded random W in k; returns the largest defect over samples and basis maps.
double group_spot_check(const HomResult& r, const ReductiveSpace& s, int samples = 10, unsigned seed = 1);

}  // namespace homspace
