#pragma once

#include <map>
#include <string>

#include "homspace/catalog.hpp"
#include "homspace/reductive.hpp"

namespace homspace::testing {

// Catalog spaces are immutable; build each one once per process.
inline const ReductiveSpace& space(const std::string& id, Normalization norm = Normalization::Default) {
  static std::map<std::pair<std::string, int>, ReductiveSpace> cache;
  const auto key = std::make_pair(id, static_cast<int>(norm));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_space(id, norm)).first;
  return it->second;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  return a.size() ? (a - b).cwiseAbs().maxCoeff() : 0.0;
}

// so(n) unit E_ij = -D_ij + D_ji with 1-based indices, the library's convention.
inline Mat so_unit(int n, int i, int j) {
  Mat e = Mat::Zero(n, n);
  e(i - 1, j - 1) = -1.0;
  e(j - 1, i - 1) = 1.0;
  return e;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

}  // namespace homspace::testing
