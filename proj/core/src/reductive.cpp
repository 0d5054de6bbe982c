#include "homspace/reductive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "homspace/error.hpp"

namespace homspace {

namespace {

// Largest singular-size block we refine through the commutant of ad(k);
// the symmetric-commutant system has p * g^2 rows and g(g+1)/2 unknowns.
constexpr int kMaxRefineDim = 24;

void check_orthonormal(const Mat& basis, const Mat& gram, const std::string& what, double tol) {
  if (basis.cols() == 0) return;
  const Mat g = basis.transpose() * gram * basis;
  const double dev = (g - Mat::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  if (dev > 10 * tol) {
    throw InvariantViolation(what + " basis is not orthonormal for the inner product (deviation " +
                             std::to_string(dev) + ")");
  }
}

void validate_summands(const std::vector<Summand>& summands, int n) {
  int next = 0;
  for (const Summand& sm : summands) {
    if (sm.offset != next || sm.size <= 0) throw InvalidArgument("summands must be contiguous and non-empty");
    next += sm.size;
  }
  if (!summands.empty() && next != n) throw InvalidArgument("summands must cover m");
}

// Groups sorted eigenvalues whose neighbours differ by at most gap_tol.
std::vector<std::vector<int>> cluster(const Vec& sorted_values, double gap_tol) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < sorted_values.size(); ++i) {
    if (groups.empty() || sorted_values(i) - sorted_values(groups.back().back()) > gap_tol) groups.emplace_back();
    groups.back().push_back(i);
  }
  return groups;
}

Mat columns(const Mat& m, const std::vector<int>& idx) {
  Mat out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = m.col(idx[i]);
  return out;
}

// Splits the ad(k)-invariant subspace spanned by v (orthonormal, n x g)
// into irreducible pieces using symmetric elements of the commutant.
void refine(const ReductiveSpace& s, const Mat& v, std::mt19937& rng, std::vector<Mat>& out) {
  const int g = static_cast<int>(v.cols());
  if (g <= 1 || s.p() == 0) {
    out.push_back(v);
    return;
  }
  std::vector<Mat> restricted;
  for (const Mat& a : s.adk) restricted.push_back(v.transpose() * a * v);

  std::vector<Mat> sym_basis;
  for (int i = 0; i < g; ++i)
    for (int j = i; j < g; ++j) {
      Mat e = Mat::Zero(g, g);
      e(i, j) = 1.0;
      e(j, i) = 1.0;
      sym_basis.push_back(e);
    }
  Mat system(Eigen::Index(s.p()) * g * g, static_cast<Eigen::Index>(sym_basis.size()));
  for (std::size_t e = 0; e < sym_basis.size(); ++e) {
    for (int q = 0; q < s.p(); ++q) {
      const Mat c = sym_basis[e] * restricted[q] - restricted[q] * sym_basis[e];
      system.block(Eigen::Index(q) * g * g, static_cast<Eigen::Index>(e), Eigen::Index(g) * g, 1) =
          Eigen::Map<const Vec>(c.data(), c.size());
    }
  }
  const Mat comm = nullspace(system, 1e-9).basis;
  if (comm.cols() <= 1) {
    out.push_back(v);
    return;
  }

  std::normal_distribution<double> normal;
  Mat probe = Mat::Zero(g, g);
  for (Eigen::Index c = 0; c < comm.cols(); ++c) {
    const double w = normal(rng);
    for (std::size_t e = 0; e < sym_basis.size(); ++e) probe += w * comm(static_cast<Eigen::Index>(e), c) * sym_basis[e];
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(probe);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  const auto groups = cluster(es.eigenvalues(), 1e-8 * scale);
  if (groups.size() == 1) throw NumericalError("split_isotropy: commutant probe failed to separate an invariant subspace");
  for (const auto& grp : groups) refine(s, v * columns(es.eigenvectors(), grp), rng, out);
}

}  // namespace

int ReductiveSpace::summand_of(int a) const {
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (a >= summands[i].offset && a < summands[i].offset + summands[i].size) return static_cast<int>(i);
  }
  return 0;
}

ReductiveSpace assemble(std::string name, LieAlgebra algebra, InnerProduct ip, const Mat& k_basis, const Mat& m_basis,
                        std::vector<Summand> summands, double tol) {
  const int d = algebra.dim();
  if (ip.gram.rows() != d) throw InvalidArgument("assemble: inner product size does not match the algebra");
  if (k_basis.rows() != d || m_basis.rows() != d) throw InvalidArgument("assemble: basis vectors have wrong length");
  if (k_basis.cols() + m_basis.cols() != d) {
    throw InvalidArgument("assemble: dim k + dim m = " + std::to_string(k_basis.cols() + m_basis.cols()) +
                          " but dim g = " + std::to_string(d));
  }
  validate_summands(summands, static_cast<int>(m_basis.cols()));
  const Mat& G = ip.gram;
  check_orthonormal(k_basis, G, "k", tol);
  check_orthonormal(m_basis, G, "m", tol);
  if (k_basis.cols() > 0 && m_basis.cols() > 0) {
    const double cross = (k_basis.transpose() * G * m_basis).cwiseAbs().maxCoeff();
    if (cross > 10 * tol) throw InvariantViolation("assemble: k and m are not orthogonal (" + std::to_string(cross) + ")");
  }

  ReductiveSpace s;
  s.name = std::move(name);
  s.algebra = std::move(algebra);
  s.ip = std::move(ip);
  s.k_basis = k_basis;
  s.m_basis = m_basis;
  s.summands = std::move(summands);

  const int n = s.n();
  const int p = s.p();
  const Mat mproj = m_basis.transpose() * s.ip.gram;  // g coordinates -> m coordinates
  const Mat kproj = k_basis.transpose() * s.ip.gram;
  auto clean = [tol](double v) { return std::abs(v) < tol ? 0.0 : v; };

  for (int q = 0; q < p; ++q) {
    const Mat ad = s.algebra.ad_of(k_basis.col(q));
    const Mat kk = ad * k_basis;
    const double leak = p > 0 && n > 0 ? (mproj * kk).cwiseAbs().maxCoeff() : 0.0;
    if (leak > 10 * tol) {
      throw InvariantViolation("assemble: k is not bracket-closed ([K_" + std::to_string(q) +
                               ", k] has m-component " + std::to_string(leak) + ")");
    }
    const Mat km = ad * m_basis;
    if (n > 0) {
      const Mat kpart = kproj * km;
      Eigen::Index row = 0, col = 0;
      const double bad = kpart.size() ? kpart.cwiseAbs().maxCoeff(&row, &col) : 0.0;
      if (bad > 10 * tol) {
        throw InvariantViolation("assemble: [K_" + std::to_string(q) + ", Z_" + std::to_string(col) +
                                 "] has k-component " + std::to_string(bad) + "; the decomposition is not reductive");
      }
    }
    s.adk.push_back((mproj * km).unaryExpr(clean));
  }

  s.cm = Array3(n, n, n);
  s.ck = Array3(n, n, p);
  for (int a = 0; a < n; ++a) {
    const Mat brk = s.algebra.ad_of(m_basis.col(a)) * m_basis;
    const Mat inm = mproj * brk;
    const Mat ink = kproj * brk;
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) s.cm(a, b, c) = clean(inm(c, b));
      for (int q = 0; q < p; ++q) s.ck(a, b, q) = clean(ink(q, b));
    }
  }
  return s;
}

ReductiveSpace decompose(std::string name, LieAlgebra algebra, InnerProduct ip, const Mat& k_coeffs, double tol) {
  const int d = algebra.dim();
  validate(ip, tol);
  Mat k = k_coeffs.cols() > 0 ? gram_schmidt(k_coeffs, ip, tol) : Mat(d, 0);
  Mat m;
  if (k.cols() == 0) {
    m = gram_schmidt(Mat::Identity(d, d), ip, tol);
  } else {
    const Mat comp = nullspace(k.transpose() * ip.gram, 1e-9).basis;
    m = comp.cols() > 0 ? gram_schmidt(comp, ip, tol) : Mat(d, 0);
  }
  return assemble(std::move(name), std::move(algebra), std::move(ip), k, m, {}, tol);
}

ReductiveSpace with_split(const ReductiveSpace& s, const Mat& new_m, std::vector<Summand> summands, double tol) {
  return assemble(s.name, s.algebra, s.ip, s.k_basis, new_m, std::move(summands), tol);
}

ReductiveSpace split_isotropy(const ReductiveSpace& s, double tol) {
  const int n = s.n();
  if (n == 0) return s;
  if (s.p() == 0) return with_split(s, s.m_basis, {{0, n}}, tol);

  const CasimirData cas = casimir(s);
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (cas.op + cas.op.transpose()));
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  const auto groups = cluster(es.eigenvalues(), 1e-8 * scale);

  std::mt19937 rng(20240611u);
  struct Piece {
    Mat v;
    double cas;
  };
  std::vector<Piece> pieces;
  for (const auto& grp : groups) {
    const Mat v = columns(es.eigenvectors(), grp);
    const double value = es.eigenvalues()(grp.front());
    if (v.cols() > kMaxRefineDim) {
      if (groups.size() == 1) {
        throw NumericalError("split_isotropy: the Casimir operator is scalar on a " + std::to_string(v.cols()) +
                             "-dimensional m; supply the split explicitly");
      }
      pieces.push_back({v, value});
      continue;
    }
    std::vector<Mat> parts;
    refine(s, v, rng, parts);
    for (Mat& part : parts) pieces.push_back({std::move(part), value});
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.v.cols() != b.v.cols()) return a.v.cols() > b.v.cols();
    return a.cas < b.cas;
  });

  Mat local(n, n);
  std::vector<Summand> summands;
  int offset = 0;
  for (const Piece& pc : pieces) {
    local.middleCols(offset, pc.v.cols()) = pc.v;
    summands.push_back({offset, static_cast<int>(pc.v.cols())});
    offset += static_cast<int>(pc.v.cols());
  }
  return with_split(s, s.m_basis * local, std::move(summands), tol);
}

std::vector<InclusionCheck> check_inclusions(const ReductiveSpace& s, double tol) {
  if (!s.two_summands()) throw InvalidArgument("check_inclusions: the space must have exactly two summands");
  const int n = s.n();
  const int p = s.p();
  auto in1 = [&](int a) { return s.summand_of(a) == 0; };

  double inv = 0.0;
  for (const Mat& a : s.adk)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (in1(r) != in1(c)) inv = std::max(inv, std::abs(a(r, c)));

  double m1m1 = 0.0, m1m2 = 0.0, m2m2 = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (in1(a) && in1(b)) {
        for (int c = 0; c < n; ++c)
          if (in1(c)) m1m1 = std::max(m1m1, std::abs(s.cm(a, b, c)));
      } else if (in1(a) && !in1(b)) {
        for (int c = 0; c < n; ++c)
          if (!in1(c)) m1m2 = std::max(m1m2, std::abs(s.cm(a, b, c)));
        for (int q = 0; q < p; ++q) m1m2 = std::max(m1m2, std::abs(s.ck(a, b, q)));
      } else if (!in1(a) && !in1(b)) {
        for (int c = 0; c < n; ++c) m2m2 = std::max(m2m2, std::abs(s.cm(a, b, c)));
      }
    }
  return {
      {"[k,m_i] in m_i", inv <= tol, inv},
      {"[m1,m1] in k+m2", m1m1 <= tol, m1m1},
      {"[m1,m2] in m1", m1m2 <= tol, m1m2},
      {"[m2,m2] in k", m2m2 <= tol, m2m2},
  };
}

Mat default_qk(const ReductiveSpace& s) { return Mat::Identity(s.p(), s.p()); }

CasimirData casimir(const ReductiveSpace& s, const Mat& qk) {
  const int n = s.n();
  const int p = s.p();
  if (qk.rows() != p || qk.cols() != p) throw InvalidArgument("casimir: Q_k has the wrong size");
  CasimirData out;
  out.op = Mat::Zero(n, n);
  if (p > 0) {
    Eigen::FullPivLU<Mat> lu(qk);
    if (!lu.isInvertible()) throw InvalidArgument("casimir: Q_k is degenerate");
    const Mat qinv = lu.inverse();
    // Dual basis K'_q = sum_r qinv(r, q) K_r.
    for (int q = 0; q < p; ++q) {
      Mat dual = Mat::Zero(n, n);
      for (int r = 0; r < p; ++r) dual += qinv(r, q) * s.adk[r];
      out.op -= s.adk[q] * dual;
    }
  }
  std::vector<Summand> blocks = s.summands;
  if (blocks.empty()) blocks.push_back({0, n});
  for (const Summand& b : blocks) {
    const Mat blk = out.op.block(b.offset, b.offset, b.size, b.size);
    const double cas = b.size > 0 ? blk.trace() / b.size : 0.0;
    out.constants.push_back(cas);
    out.deviations.push_back(b.size > 0 ? (blk - cas * Mat::Identity(b.size, b.size)).cwiseAbs().maxCoeff() : 0.0);
  }
  return out;
}

Mat a_form(const ReductiveSpace& s, const Mat& qk) {
  const int n = s.n();
  const int p = s.p();
  Mat a = Mat::Zero(n, n);
  Mat mj(n, p);
  for (int j = 0; j < n; ++j) {
    for (int x = 0; x < n; ++x)
      for (int q = 0; q < p; ++q) mj(x, q) = s.ck(x, j, q);
    a += mj * qk * mj.transpose();
  }
  return a;
}

Mat killing_on_m(const ReductiveSpace& s) { return -s.m_basis.transpose() * s.algebra.killing() * s.m_basis; }

Mat bracket_square_form(const ReductiveSpace& s) {
  const int n = s.n();
  Mat out = Mat::Zero(n, n);
  Mat mi(n, n);
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < n; ++x)
      for (int c = 0; c < n; ++c) mi(x, c) = s.cm(x, i, c);
    out += mi * mi.transpose();
  }
  return out;
}

Use1Residuals verify_use1(const ReductiveSpace& s, const Mat& qk) {
  Use1Residuals r;
  if (s.n() == 0) return r;
  const Mat a = a_form(s, qk);
  const CasimirData cas = casimir(s, qk);
  r.casimir_vs_a = (cas.op - a).cwiseAbs().maxCoeff();
  r.killing_split = (killing_on_m(s) - bracket_square_form(s) - 2.0 * a).cwiseAbs().maxCoeff();
  return r;
}

bool m_generates(const ReductiveSpace& s, double tol) {
  const int n = s.n();
  const int p = s.p();
  if (p == 0) return true;
  Mat kparts(p, Eigen::Index(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int q = 0; q < p; ++q) kparts(q, Eigen::Index(a) * n + b) = s.ck(a, b, q);
  (void)tol;
  return column_span(kparts.transpose(), 1e-9).cols() == p;
}

}  // namespace homspace
