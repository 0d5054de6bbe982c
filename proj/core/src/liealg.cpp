#include "homspace/liealg.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "homspace/error.hpp"

namespace homspace {

namespace {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

Eigen::Map<const Vec> flatten(const Mat& m) { return Eigen::Map<const Vec>(m.data(), m.size()); }

Mat unflatten(const Vec& v, int n) { return Eigen::Map<const Mat>(v.data(), n, n); }

// Quaternion units 0..3 = 1, i, j, k. Returns (sign, unit) of u * v.
std::pair<int, int> quaternion_product(int u, int v) {
  if (u == 0) return {1, v};
  if (v == 0) return {1, u};
  if (u == v) return {-1, 0};
  // Cyclic order i -> j -> k -> i gives +, the reverse gives -.
  const int w = 6 - u - v;
  const bool cyclic = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
  return {cyclic ? 1 : -1, w};
}

// Matrix of left multiplication by a quaternion unit on H = R^4.
Eigen::Matrix4d quaternion_left(int unit) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  for (int c = 0; c < 4; ++c) {
    const auto [sign, w] = quaternion_product(unit, c);
    m(w, c) = sign;
  }
  return m;
}

void set_complex_block(Mat& m, int a, int b, double re, double im) {
  m(2 * a, 2 * b) = re;
  m(2 * a, 2 * b + 1) = -im;
  m(2 * a + 1, 2 * b) = im;
  m(2 * a + 1, 2 * b + 1) = re;
}

Vec g2_constraint(const Mat& x) {
  Vec out(35);
  int row = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        double s = 0.0;
        for (int m = 0; m < 7; ++m) {
          s += x(m, i) * g2_three_form(m, j, k) + x(m, j) * g2_three_form(i, m, k) +
               x(m, k) * g2_three_form(i, j, m);
        }
        out(row++) = s;
      }
  return out;
}

}  // namespace

LieAlgebra LieAlgebra::from_basis(std::string name, std::vector<Mat> basis, double tol) {
  LieAlgebra a;
  a.name_ = std::move(name);
  a.ambient_ = basis.empty() ? 0 : static_cast<int>(basis.front().rows());
  for (const Mat& m : basis) {
    if (m.rows() != a.ambient_ || m.cols() != a.ambient_) {
      throw InvalidArgument("LieAlgebra: basis matrices must be square of equal size");
    }
  }
  a.basis_ = std::move(basis);
  const int d = a.dim();
  const int n = a.ambient_;

  a.flat_.resize(Eigen::Index(n) * n, d);
  for (int i = 0; i < d; ++i) a.flat_.col(i) = flatten(a.basis_[i]);
  if (d > 0 && column_span(a.flat_).cols() != d) {
    throw InvalidArgument("LieAlgebra '" + a.name_ + "': basis matrices are linearly dependent");
  }
  a.pinv_ = d > 0 ? Mat(a.flat_.completeOrthogonalDecomposition().pseudoInverse()) : Mat(0, Eigen::Index(n) * n);

  a.ad_.assign(d, Mat::Zero(d, d));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const Mat br = a.basis_[i] * a.basis_[j] - a.basis_[j] * a.basis_[i];
      Vec c = a.pinv_ * flatten(br);
      const double res = (a.flat_ * c - flatten(br)).norm();
      if (res > tol * std::max(1.0, br.norm()) * 10.0) {
        throw InvariantViolation("LieAlgebra '" + a.name_ + "': [Z_" + std::to_string(i) + ", Z_" +
                                 std::to_string(j) + "] leaves the span (residual " + std::to_string(res) + ")");
      }
      for (int k = 0; k < d; ++k) {
        if (std::abs(c(k)) < tol) c(k) = 0.0;
      }
      a.ad_[i].col(j) = c;
      a.ad_[j].col(i) = -c;
    }
  }

  a.killing_.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = a.ad_[i].cwiseProduct(a.ad_[j].transpose()).sum();
      a.killing_(i, j) = v;
      a.killing_(j, i) = v;
    }
  return a;
}

Mat LieAlgebra::ad_of(const Vec& x) const {
  Mat m = Mat::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (x(i) != 0.0) m += x(i) * ad_[i];
  }
  return m;
}

Mat LieAlgebra::to_matrix(const Vec& x) const {
  if (x.size() != dim()) throw InvalidArgument("to_matrix: coefficient length mismatch");
  return unflatten(flat_ * x, ambient_);
}

Vec LieAlgebra::coordinates(const Mat& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) throw InvalidArgument("coordinates: wrong matrix size");
  return pinv_ * flatten(m);
}

double LieAlgebra::membership_residual(const Mat& m) const {
  const Vec c = coordinates(m);
  return (flat_ * c - flatten(m)).norm();
}

Vec bracket(const LieAlgebra& a, const Vec& x, const Vec& y) {
  if (x.size() != a.dim() || y.size() != a.dim()) {
    throw InvalidArgument("bracket: expected vectors of length " + std::to_string(a.dim()));
  }
  Vec out = Vec::Zero(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (x(i) != 0.0) out += x(i) * (a.ad(i) * y);
  }
  return out;
}

LieAlgebra build_so(int n) {
  if (n < 2) throw InvalidArgument("build_so: n must be at least 2");
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      e(i, j) = -1.0;
      e(j, i) = 1.0;
      basis.push_back(e);
    }
  return LieAlgebra::from_basis("so(" + std::to_string(n) + ")", std::move(basis));
}

LieAlgebra build_u(int n) {
  if (n < 1) throw InvalidArgument("build_u: n must be at least 1");
  std::vector<Mat> basis;
  for (int a = 0; a < n; ++a) {
    Mat m = Mat::Zero(2 * n, 2 * n);
    set_complex_block(m, a, a, 0.0, 1.0);
    basis.push_back(m);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat re = Mat::Zero(2 * n, 2 * n);
      set_complex_block(re, a, b, 1.0, 0.0);
      set_complex_block(re, b, a, -1.0, 0.0);
      basis.push_back(re);
      Mat im = Mat::Zero(2 * n, 2 * n);
      set_complex_block(im, a, b, 0.0, 1.0);
      set_complex_block(im, b, a, 0.0, 1.0);
      basis.push_back(im);
    }
  return LieAlgebra::from_basis("u(" + std::to_string(n) + ")", std::move(basis));
}

LieAlgebra build_su(int n) {
  if (n < 2) throw InvalidArgument("build_su: n must be at least 2");
  std::vector<Mat> basis;
  for (int a = 0; a + 1 < n; ++a) {
    Mat m = Mat::Zero(2 * n, 2 * n);
    set_complex_block(m, a, a, 0.0, 1.0);
    set_complex_block(m, a + 1, a + 1, 0.0, -1.0);
    basis.push_back(m);
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat re = Mat::Zero(2 * n, 2 * n);
      set_complex_block(re, a, b, 1.0, 0.0);
      set_complex_block(re, b, a, -1.0, 0.0);
      basis.push_back(re);
      Mat im = Mat::Zero(2 * n, 2 * n);
      set_complex_block(im, a, b, 0.0, 1.0);
      set_complex_block(im, b, a, 0.0, 1.0);
      basis.push_back(im);
    }
  return LieAlgebra::from_basis("su(" + std::to_string(n) + ")", std::move(basis));
}

LieAlgebra build_sp(int n) {
  if (n < 1) throw InvalidArgument("build_sp: n must be at least 1");
  const int N = 4 * n;
  std::vector<Mat> basis;
  for (int a = 0; a < n; ++a)
    for (int unit = 1; unit <= 3; ++unit) {
      Mat m = Mat::Zero(N, N);
      m.block<4, 4>(4 * a, 4 * a) = quaternion_left(unit);
      basis.push_back(m);
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Mat re = Mat::Zero(N, N);
      re.block<4, 4>(4 * a, 4 * b) = Eigen::Matrix4d::Identity();
      re.block<4, 4>(4 * b, 4 * a) = -Eigen::Matrix4d::Identity();
      basis.push_back(re);
      for (int unit = 1; unit <= 3; ++unit) {
        Mat m = Mat::Zero(N, N);
        m.block<4, 4>(4 * a, 4 * b) = quaternion_left(unit);
        m.block<4, 4>(4 * b, 4 * a) = quaternion_left(unit);
        basis.push_back(m);
      }
    }
  return LieAlgebra::from_basis("sp(" + std::to_string(n) + ")", std::move(basis));
}

double g2_three_form(int i, int j, int k) {
  static const std::array<std::array<int, 4>, 7> terms = {{
      {0, 1, 2, 1}, {0, 3, 4, 1}, {0, 5, 6, 1}, {1, 3, 5, 1}, {1, 4, 6, -1}, {2, 3, 6, -1}, {2, 4, 5, -1},
  }};
  if (i == j || j == k || i == k) return 0.0;
  // Sort (i, j, k) tracking the permutation sign.
  int idx[3] = {i, j, k};
  int sign = 1;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 2 - p; ++q)
      if (idx[q] > idx[q + 1]) {
        std::swap(idx[q], idx[q + 1]);
        sign = -sign;
      }
  for (const auto& t : terms) {
    if (t[0] == idx[0] && t[1] == idx[1] && t[2] == idx[2]) return sign * t[3];
  }
  return 0.0;
}

Mat g2_coordinates_in_so7() {
  static const Mat coords = [] {
    const LieAlgebra so7 = build_so(7);
    Mat c = stabilizer_subalgebra(so7, g2_constraint);
    if (c.cols() != 14) {
      throw InvariantViolation("build_g2: stabilizer of the 3-form has dimension " + std::to_string(c.cols()) +
                               ", expected 14");
    }
    return c;
  }();
  return coords;
}

LieAlgebra build_g2() {
  const LieAlgebra so7 = build_so(7);
  const Mat c = g2_coordinates_in_so7();
  std::vector<Mat> basis;
  for (int i = 0; i < c.cols(); ++i) basis.push_back(so7.to_matrix(c.col(i)));
  return LieAlgebra::from_basis("g2", std::move(basis));
}

Mat realify_complex_unit(int n) {
  Mat m = Mat::Zero(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) set_complex_block(m, a, a, 0.0, 1.0);
  return m;
}

Mat stabilizer_subalgebra(const LieAlgebra& a, const std::function<Vec(const Mat&)>& constraint, double tol) {
  const int d = a.dim();
  if (d == 0) return Mat(0, 0);
  const Vec first = constraint(a.basis()[0]);
  Mat system(first.size(), d);
  system.col(0) = first;
  for (int i = 1; i < d; ++i) system.col(i) = constraint(a.basis()[i]);

  const Mat sol = nullspace(system, 1e-9).basis;
  for (int i = 0; i < sol.cols(); ++i)
    for (int j = i + 1; j < sol.cols(); ++j) {
      const Vec v = bracket(a, sol.col(i), sol.col(j));
      const double res = (v - sol * (sol.transpose() * v)).norm();
      if (res > tol * std::max(1.0, v.norm())) {
        throw InvariantViolation("stabilizer_subalgebra: solution space is not bracket-closed (residual " +
                                 std::to_string(res) + ")");
      }
    }
  return sol;
}

LieAlgebra subalgebra(const LieAlgebra& a, const Mat& coeffs, std::string name, double tol) {
  std::vector<Mat> basis;
  for (int i = 0; i < coeffs.cols(); ++i) basis.push_back(a.to_matrix(coeffs.col(i)));
  return LieAlgebra::from_basis(std::move(name), std::move(basis), tol);
}

Mat center(const LieAlgebra& a, double tol) {
  const int d = a.dim();
  Mat system = Mat::Zero(Eigen::Index(d) * d, d);
  for (int i = 0; i < d; ++i) system.col(i) = Eigen::Map<const Vec>(a.ad(i).data(), a.ad(i).size());
  (void)tol;
  return nullspace(system, 1e-9).basis;
}

double antisymmetry_residual(const LieAlgebra& a) {
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) r = std::max(r, (a.ad(i).col(j) + a.ad(j).col(i)).cwiseAbs().maxCoeff());
  }
  return r;
}

double jacobi_residual(const LieAlgebra& a) {
  // ad is a derivation: ad([Z_i, Z_j]) = [ad Z_i, ad Z_j].
  double r = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      const Mat lhs = a.ad_of(a.ad(i).col(j));
      const Mat rhs = a.ad(i) * a.ad(j) - a.ad(j) * a.ad(i);
      r = std::max(r, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  return r;
}

double killing_invariance_residual(const LieAlgebra& a) {
  const Mat& k = a.killing();
  double r = 0.0;
  for (int z = 0; z < a.dim(); ++z) {
    // K(ad_z X, Y) + K(X, ad_z Y) = (ad_z^T K + K ad_z)(X, Y)
    const Mat m = a.ad(z).transpose() * k + k * a.ad(z);
    r = std::max(r, m.cwiseAbs().maxCoeff());
  }
  return r;
}

bool is_simple(const LieAlgebra& a, double tol) {
  const int d = a.dim();
  if (d == 0) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(-a.killing());
  if (es.eigenvalues().cwiseAbs().minCoeff() <= tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff())) {
    return false;
  }
  // The complex commutant of ad(g) is one-dimensional exactly when g is
  // simple. Two random elements generate g, and in the eigenbasis of a
  // generic ad(X) any commuting operator is block diagonal over the
  // eigenvalue clusters, which keeps the unknowns near rank^2 + d.
  std::mt19937 rng(20240611u);
  std::normal_distribution<double> normal;
  Vec x(d), y(d);
  for (int i = 0; i < d; ++i) {
    x(i) = normal(rng);
    y(i) = normal(rng);
  }
  Eigen::EigenSolver<Mat> eig(a.ad_of(x));
  const CMat v = eig.eigenvectors();
  const CVec lambda = eig.eigenvalues();
  const CMat yy = v.partialPivLu().solve(a.ad_of(y).cast<std::complex<double>>() * v);

  const double scale = std::max(1.0, lambda.cwiseAbs().maxCoeff());
  std::vector<int> cluster(static_cast<std::size_t>(d), -1);
  int clusters = 0;
  for (int i = 0; i < d; ++i) {
    if (cluster[i] >= 0) continue;
    for (int j = i; j < d; ++j)
      if (cluster[j] < 0 && std::abs(lambda(i) - lambda(j)) <= 1e-7 * scale) cluster[j] = clusters;
    ++clusters;
  }
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (cluster[i] == cluster[j]) unknowns.emplace_back(i, j);

  // (S Y - Y S)(k, l) with S = sum s_ij E_ij.
  CMat system = CMat::Zero(Eigen::Index(d) * d, static_cast<Eigen::Index>(unknowns.size()));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto [i, j] = unknowns[u];
    const auto col = static_cast<Eigen::Index>(u);
    for (int l = 0; l < d; ++l) system(Eigen::Index(i) * d + l, col) += yy(j, l);
    for (int k = 0; k < d; ++k) system(Eigen::Index(k) * d + j, col) -= yy(k, i);
  }
  Eigen::BDCSVD<CMat> svd(system);
  const Vec sv = svd.singularValues();
  const double cut = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int null_dim = static_cast<int>(unknowns.size() - static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= cut) ++null_dim;
  return null_dim == 1;
}

std::string to_string(IpKind k) {
  switch (k) {
    case IpKind::NegativeKilling:
      return "negative-killing";
    case IpKind::BPrime:
      return "b-prime";
    case IpKind::CustomDiagonal:
      return "custom-diagonal";
  }
  return "unknown";
}

void validate(const InnerProduct& ip, double tol) {
  const Mat& g = ip.gram;
  if (g.rows() != g.cols()) throw InvalidArgument("inner product: gram matrix is not square");
  if (g.size() == 0) return;
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (asymmetry(g) > tol * scale) throw InvalidArgument("inner product: gram matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> es(g);
  if (es.eigenvalues().minCoeff() <= tol * scale) {
    throw InvalidArgument("inner product (" + to_string(ip.provenance) + ") is not positive definite");
  }
}

InnerProduct negative_killing(const LieAlgebra& a, double tol) {
  InnerProduct ip{-a.killing(), IpKind::NegativeKilling};
  validate(ip, tol);
  return ip;
}

InnerProduct b_prime(const LieAlgebra& a, double tol) {
  const int d = a.dim();
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = -0.5 * (a.basis()[i].cwiseProduct(a.basis()[j].transpose())).sum();
      g(i, j) = v;
      g(j, i) = v;
    }
  InnerProduct ip{g, IpKind::BPrime};
  validate(ip, tol);
  return ip;
}

InnerProduct custom_diagonal(const Vec& weights, double tol) {
  InnerProduct ip{weights.asDiagonal(), IpKind::CustomDiagonal};
  validate(ip, tol);
  return ip;
}

Mat gram_schmidt(const Mat& vectors, const InnerProduct& ip, double tol) {
  if (vectors.rows() != ip.gram.rows()) throw InvalidArgument("gram_schmidt: vector length mismatch");
  return gram_schmidt(vectors, ip.gram, tol);
}

}  // namespace homspace
