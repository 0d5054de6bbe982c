#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "homspace/catalog.hpp"
#include "homspace/connections.hpp"
#include "homspace/curvature.hpp"
#include "homspace/einstein.hpp"
#include "homspace/equivariant.hpp"

namespace hs = homspace;

namespace {

const hs::ReductiveSpace& cached(const std::string& id) {
  static std::map<std::string, hs::ReductiveSpace> cache;
  auto it = cache.find(id);
  if (it == cache.end()) it = cache.emplace(id, hs::build_space(id)).first;
  return it->second;
}

void BM_BuildSpace(benchmark::State& state, const std::string& id) {
  for (auto _ : state) benchmark::DoNotOptimize(hs::build_space(id));
}
BENCHMARK_CAPTURE(BM_BuildSpace, cp3, std::string("cp3"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BuildSpace, flag_C_5_3, std::string("flag-C(5,3)"))->Unit(benchmark::kMillisecond);

void BM_RicciOracle(benchmark::State& state, const std::string& id) {
  const hs::ReductiveSpace& s = cached(id);
  const hs::NomizuMap m = hs::nomizu_st(s, 2.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hs::ricci_oracle(m, s));
}
BENCHMARK_CAPTURE(BM_RicciOracle, cp3, std::string("cp3"));
BENCHMARK_CAPTURE(BM_RicciOracle, flag_C_5_3, std::string("flag-C(5,3)"))->Unit(benchmark::kMillisecond);

void BM_RicciClosed(benchmark::State& state) {
  const hs::ReductiveSpace& s = cached("flag-C(5,3)");
  for (auto _ : state) benchmark::DoNotOptimize(hs::ricci_st_closed(s, 2.0, 0.5));
}
BENCHMARK(BM_RicciClosed)->Unit(benchmark::kMillisecond);

void BM_HomDimension(benchmark::State& state, const std::string& id) {
  const hs::ReductiveSpace& s = cached(id);
  for (auto _ : state) benchmark::DoNotOptimize(hs::hom_dimension(s));
}
BENCHMARK_CAPTURE(BM_HomDimension, s6, std::string("sphere-s6"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_HomDimension, s7, std::string("sphere-s7"))->Unit(benchmark::kMillisecond);

void BM_RiemannianQuadratic(benchmark::State& state) {
  const hs::ReductiveSpace& s = cached("flag-C(5,3)");
  for (auto _ : state) benchmark::DoNotOptimize(hs::riemannian_quadratic(s));
}
BENCHMARK(BM_RiemannianQuadratic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
