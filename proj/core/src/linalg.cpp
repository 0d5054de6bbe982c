#include "homspace/linalg.hpp"

#include <cmath>
#include <limits>

#include "homspace/error.hpp"

namespace homspace {

NullspaceResult nullspace(const Mat& A, double rel_threshold) {
  const Eigen::Index cols = A.cols();
  NullspaceResult out;
  if (cols == 0) {
    out.basis = Mat(0, 0);
    out.gap = std::numeric_limits<double>::infinity();
    return out;
  }
  if (A.rows() == 0) {
    out.basis = Mat::Identity(cols, cols);
    out.gap = std::numeric_limits<double>::infinity();
    return out;
  }

  // Tall systems are compressed to their R factor first; singular values
  // and right singular vectors are unchanged.
  Mat work;
  if (A.rows() > 2 * cols) {
    Eigen::HouseholderQR<Mat> qr(A);
    work = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  } else {
    work = A;
  }

  Eigen::BDCSVD<Mat> svd(work, Eigen::ComputeFullV);
  out.singular_values = svd.singularValues();
  const Eigen::Index nsv = out.singular_values.size();
  const double smax = nsv > 0 ? out.singular_values(0) : 0.0;

  int rank = 0;
  if (smax > 0.0) {
    for (Eigen::Index i = 0; i < nsv; ++i) {
      if (out.singular_values(i) > rel_threshold * smax) ++rank;
    }
  }
  out.rank = rank;

  if (rank == 0 || rank >= nsv) {
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    const double kept = out.singular_values(rank - 1);
    const double dropped = out.singular_values(rank);
    out.gap = dropped > 0.0 ? kept / dropped : std::numeric_limits<double>::infinity();
  }
  out.basis = svd.matrixV().rightCols(cols - rank);
  return out;
}

Mat column_span(const Mat& A, double rel_threshold) {
  if (A.cols() == 0 || A.rows() == 0) return Mat(A.rows(), 0);
  Eigen::BDCSVD<Mat> svd(A, Eigen::ComputeThinU);
  const Vec& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (smax > 0.0 && s(i) > rel_threshold * smax) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

Mat gram_schmidt(const Mat& vectors, const Mat& gram, double tol) {
  Mat out(vectors.rows(), vectors.cols());
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Vec v = vectors.col(j);
    const double original = std::sqrt(std::abs(v.dot(gram * v)));
    // Two passes keep orthogonality at machine level for nearly parallel input.
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        v -= out.col(i).dot(gram * v) * out.col(i);
      }
    }
    const double norm2 = v.dot(gram * v);
    if (!(norm2 > 0.0) || std::sqrt(norm2) <= tol * std::max(original, 1.0)) {
      throw InvalidArgument("gram_schmidt: vector " + std::to_string(j) +
                            " is dependent on the preceding ones");
    }
    out.col(j) = v / std::sqrt(norm2);
  }
  return out;
}

double asymmetry(const Mat& M) {
  if (M.size() == 0) return 0.0;
  return (M - M.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace homspace
