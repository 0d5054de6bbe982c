#pragma once

#include <Eigen/Dense>

namespace homspace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

struct NullspaceResult {
  Mat basis;            // orthonormal columns spanning ker(A)
  Vec singular_values;  // descending
  int rank = 0;
  // Ratio between the smallest kept and the largest discarded singular
  // value; infinity when nothing was discarded.
  double gap = 0.0;
};

// Kernel by SVD; singular values below rel_threshold * sigma_max count as zero.
NullspaceResult nullspace(const Mat& A, double rel_threshold = 1e-7);

// Orthonormal basis of range(A) using the same rank rule.
Mat column_span(const Mat& A, double rel_threshold = 1e-9);

// Gram-Schmidt of the columns of `vectors` against the form `gram`.
// Throws InvalidArgument when a column is dependent on its predecessors
// (relative pivot below tol).
Mat gram_schmidt(const Mat& vectors, const Mat& gram, double tol = kDefaultTol);

// max_ij |M_ij - M_ji|.
double asymmetry(const Mat& M);

}  // namespace homspace
