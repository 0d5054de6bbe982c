#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace homspace {

// Dense row-major 3-index array.
class Array3 {
 public:
  Array3() = default;
  Array3(int n0, int n1, int n2) : n0_(n0), n1_(n1), n2_(n2), data_(std::size_t(n0) * n1 * n2, 0.0) {}

  double& operator()(int i, int j, int k) { return data_[(std::size_t(i) * n1_ + j) * n2_ + k]; }
  double operator()(int i, int j, int k) const { return data_[(std::size_t(i) * n1_ + j) * n2_ + k]; }

  int dim(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }
  double norm_sq() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return s;
  }

 private:
  int n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<double> data_;
};

// Dense row-major 4-index array.
class Array4 {
 public:
  Array4() = default;
  Array4(int n0, int n1, int n2, int n3)
      : n0_(n0), n1_(n1), n2_(n2), n3_(n3), data_(std::size_t(n0) * n1 * n2 * n3, 0.0) {}

  double& operator()(int i, int j, int k, int l) {
    return data_[((std::size_t(i) * n1_ + j) * n2_ + k) * n3_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return data_[((std::size_t(i) * n1_ + j) * n2_ + k) * n3_ + l];
  }

  int dim(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : axis == 2 ? n2_ : n3_; }
  const std::vector<double>& data() const { return data_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int n0_ = 0, n1_ = 0, n2_ = 0, n3_ = 0;
  std::vector<double> data_;
};

inline double max_abs_diff(const Array3& a, const Array3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

inline double max_abs_diff(const Array4& a, const Array4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace homspace
