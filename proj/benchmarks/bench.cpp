#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "knotres/diagram.hpp"
#include "knotres/exactlinalg.hpp"
#include "knotres/flype.hpp"
#include "knotres/invariants.hpp"
#include "knotres/taitgraph.hpp"

using namespace knotres;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KNOTRES_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const std::string kPd8a2A = slurp("8a2A.pd");

void bm_parse(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(Diagram::parse_pd(kPd8a2A));
}
BENCHMARK(bm_parse);

void bm_pseudoinverse(benchmark::State& state) {
  RationalMatrix L =
      laplacian(tait_graph(Diagram::parse_pd(kPd8a2A)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::pseudoinverse(L));
}
BENCHMARK(bm_pseudoinverse);

void bm_fp(benchmark::State& state) {
  RationalMatrix L =
      laplacian(tait_graph(Diagram::parse_pd(kPd8a2A)));
  for (auto _ : state) benchmark::DoNotOptimize(fp(L));
}
BENCHMARK(bm_fp);

void bm_char_poly(benchmark::State& state) {
  RationalMatrix L =
      laplacian(tait_graph(Diagram::parse_pd(kPd8a2A)));
  for (auto _ : state) benchmark::DoNotOptimize(linalg::char_poly(L));
}
BENCHMARK(bm_char_poly);

void bm_find_flypes(benchmark::State& state) {
  Diagram d = Diagram::parse_pd(kPd8a2A);
  for (auto _ : state) benchmark::DoNotOptimize(find_flypes(d));
}
BENCHMARK(bm_find_flypes);

void bm_orbit_depth2(benchmark::State& state) {
  Diagram d = Diagram::parse_pd(kPd8a2A);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_invariance(d, 2));
}
BENCHMARK(bm_orbit_depth2);

}  // namespace

BENCHMARK_MAIN();
