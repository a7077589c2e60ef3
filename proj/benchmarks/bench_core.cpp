#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qe3/curvature.hpp"
#include "qe3/riccati.hpp"
#include "qe3/solver.hpp"

namespace {

using namespace qe3;

std::vector<MilnorFrame> sample_frames(size_t n) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> d(0.2, 5.0);
  std::vector<MilnorFrame> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    double u = d(rng), v = d(rng), w = d(rng);
    switch (i % 4) {
      case 0: out.push_back(MilnorFrame::make(GroupTag::Nil, {u, 0, 0})); break;
      case 1: out.push_back(MilnorFrame::make(GroupTag::SU2, {u, v, w})); break;
      case 2:
        out.push_back(MilnorFrame::make(GroupTag::SL2R, {u, v, -w}));
        break;
      default:
        out.push_back(MilnorFrame::make(GroupTag::E11, {u, -v, 0}));
        break;
    }
  }
  return out;
}

void BM_RicciTensor(benchmark::State& state) {
  std::vector<MilnorFrame> frames = sample_frames(256);
  size_t i = 0;
  for (auto _ : state) {
    SymTensor3 ric = ricci_tensor(frames[i++ % frames.size()].structure());
    benchmark::DoNotOptimize(ric);
  }
}
BENCHMARK(BM_RicciTensor);

void BM_SolveFixedMetric(benchmark::State& state) {
  std::vector<MilnorFrame> frames = sample_frames(64);
  size_t i = 0;
  for (auto _ : state) {
    auto sols = solve_fixed_metric(
        SolverGeometry::milnor(frames[i++ % frames.size()]), 2.0);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_SolveFixedMetric);

void BM_NumericOracle(benchmark::State& state) {
  SolverGeometry g = SolverGeometry::milnor(
      MilnorFrame::make(GroupTag::SL2R, {2.0, 2.0, -2.0}));
  for (auto _ : state) {
    auto sols = numeric_oracle(g, 2.0, static_cast<int>(state.range(0)), 0);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_NumericOracle)->Arg(20)->Arg(60);

void BM_Rk4Oracle(benchmark::State& state) {
  RiccatiProblem p{-1.0, 1.0, 0.3};
  for (auto _ : state) {
    Trajectory traj = rk4_oracle(p, -5.0, 5.0, 1e-3);
    benchmark::DoNotOptimize(traj);
  }
}
BENCHMARK(BM_Rk4Oracle);

}  // namespace

BENCHMARK_MAIN();
