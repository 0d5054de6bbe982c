#include "homspace/equivariant.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "homspace/error.hpp"

namespace homspace {

namespace {

inline Eigen::Index idx3(int n, int a, int b, int c) { return (Eigen::Index(a) * n + b) * n + c; }

Array3 unflatten(const Vec& v, int n) {
  Array3 out(n, n, n);
  for (Eigen::Index i = 0; i < v.size(); ++i) out.data()[static_cast<std::size_t>(i)] = v(i);
  return out;
}

Vec flatten(const Array3& a) {
  return Eigen::Map<const Vec>(a.data().data(), static_cast<Eigen::Index>(a.data().size()));
}

Mat equivariance_system(const ReductiveSpace& s) {
  const int n = s.n();
  const Eigen::Index n3 = Eigen::Index(n) * n * n;
  Mat sys = Mat::Zero(s.p() * n3, n3);
  for (int q = 0; q < s.p(); ++q) {
    const Mat& w = s.adk[q];
    const Eigen::Index base = q * n3;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const Eigen::Index row = base + idx3(n, a, b, c);
          for (int d = 0; d < n; ++d) {
            sys(row, idx3(n, a, b, d)) += w(c, d);
            sys(row, idx3(n, d, b, c)) -= w(d, a);
            sys(row, idx3(n, a, d, c)) -= w(d, b);
          }
        }
  }
  return sys;
}

// Orthonormal columns spanning P x for x in span(basis), P swapping (a, b) with sign.
Mat project_swap(const Mat& basis, int n, double sign) {
  Mat out(basis.rows(), basis.cols());
  for (Eigen::Index k = 0; k < basis.cols(); ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          out(idx3(n, a, b, c), k) = 0.5 * (basis(idx3(n, a, b, c), k) + sign * basis(idx3(n, b, a, c), k));
  // Columns of `basis` are orthonormal, so singular values are compared
  // against 1 rather than against the largest one.
  Eigen::BDCSVD<Mat> svd(out, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-7) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

HomResult hom_dimension(const ReductiveSpace& s, double rel_threshold, double min_gap) {
  const int n = s.n();
  if (n > kHomDimensionMaxN) {
    throw InvalidArgument("hom_dimension: dim m = " + std::to_string(n) + " exceeds the dense solver limit " +
                          std::to_string(kHomDimensionMaxN));
  }
  const Eigen::Index n3 = Eigen::Index(n) * n * n;
  HomResult out;
  Mat sol;
  if (s.p() == 0) {
    sol = Mat::Identity(n3, n3);
    out.gap = std::numeric_limits<double>::infinity();
  } else {
    const NullspaceResult ns = nullspace(equivariance_system(s), rel_threshold);
    out.singular_values = ns.singular_values;
    out.gap = ns.gap;
    if (ns.gap < min_gap) {
      throw NumericalError("hom_dimension: indeterminate rank (singular-value gap " + std::to_string(ns.gap) + ")");
    }
    sol = ns.basis;
  }
  const Mat skew = sol.cols() > 0 ? project_swap(sol, n, -1.0) : Mat(n3, 0);
  const Mat sym = sol.cols() > 0 ? project_swap(sol, n, 1.0) : Mat(n3, 0);
  out.dimension = static_cast<int>(sol.cols());
  out.skew = static_cast<int>(skew.cols());
  out.symmetric = static_cast<int>(sym.cols());
  if (out.skew + out.symmetric != out.dimension) {
    throw NumericalError("hom_dimension: skew and symmetric parts do not add up to the solution dimension");
  }
  for (Eigen::Index k = 0; k < skew.cols(); ++k) out.basis.push_back(unflatten(skew.col(k), n));
  for (Eigen::Index k = 0; k < sym.cols(); ++k) out.basis.push_back(unflatten(sym.col(k), n));
  for (const Array3& eta : out.basis) out.max_residual = std::max(out.max_residual, equivariance_defect(s, eta));
  return out;
}

double equivariance_defect(const ReductiveSpace& s, const Array3& eta) {
  if (s.p() == 0) return 0.0;
  const Vec r = equivariance_system(s) * flatten(eta);
  return r.size() ? r.cwiseAbs().maxCoeff() : 0.0;
}

BracketCertificate certify_bracket_span(const HomResult& r, const ReductiveSpace& s, double tol) {
  BracketCertificate out;
  out.system_residual = equivariance_defect(s, s.cm);
  out.bracket_solves = out.system_residual <= tol;

  const Vec br = flatten(s.cm);
  Mat basis(br.size(), static_cast<Eigen::Index>(r.basis.size()));
  for (std::size_t k = 0; k < r.basis.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = flatten(r.basis[k]);
  const Mat q = basis.cols() > 0 ? column_span(basis, 1e-9) : Mat(br.size(), 0);
  const Vec proj = q.cols() > 0 ? Vec(q * (q.transpose() * br)) : Vec::Zero(br.size());
  out.projection_residual = (br - proj).norm();
  const double scale = std::max(1.0, br.norm());
  out.bracket_in_span = out.projection_residual <= tol * scale;
  const bool bracket_nonzero = br.norm() > tol;
  out.complement_dim = static_cast<int>(q.cols()) - ((out.bracket_in_span && bracket_nonzero) ? 1 : 0);
  return out;
}

double group_spot_check(const HomResult& r, const ReductiveSpace& s, int samples, unsigned seed) {
  const int n = s.n();
  if (s.p() == 0 || r.basis.empty()) return 0.0;
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    Mat w = Mat::Zero(n, n);
    for (int q = 0; q < s.p(); ++q) w += normal(rng) * s.adk[q];
    const Mat g = w.exp();
    for (const Array3& eta : r.basis) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c) {
            double lhs = 0.0, rhs = 0.0;
            for (int d = 0; d < n; ++d) lhs += g(c, d) * eta(a, b, d);
            for (int a2 = 0; a2 < n; ++a2) {
              if (g(a2, a) == 0.0) continue;
              for (int b2 = 0; b2 < n; ++b2) rhs += g(a2, a) * g(b2, b) * eta(a2, b2, c);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
          }
    }
  }
  return worst;
}

}  // namespace homspace
