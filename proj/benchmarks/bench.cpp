#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "planeform/decomposition.hpp"
#include "planeform/formation.hpp"
#include "planeform/generators.hpp"
#include "planeform/geometry.hpp"
#include "planeform/simulation.hpp"
#include "planeform/symmetry.hpp"

namespace {

using namespace planeform;

std::vector<Point3> random_cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto u = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; };
  std::vector<Point3> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back({u(), u(), u()});
  return pts;
}

void BM_smallest_enclosing_ball(benchmark::State& state) {
  const auto pts = random_cloud(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(smallest_enclosing_ball(pts));
}
BENCHMARK(BM_smallest_enclosing_ball)->Arg(10)->Arg(100)->Arg(1000);

void BM_enumerate_rotations_icosahedron(benchmark::State& state) {
  const auto pts = generate_polyhedron("icosahedron");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rotations(pts));
}
BENCHMARK(BM_enumerate_rotations_icosahedron);

void BM_enumerate_rotations_asymmetric(benchmark::State& state) {
  const auto pts = random_cloud(30, 13);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rotations(pts));
}
BENCHMARK(BM_enumerate_rotations_asymmetric);

void BM_gamma_decomposition_icosidodecahedron(benchmark::State& state) {
  const auto pts = generate_polyhedron("icosidodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(gamma_decomposition(pts));
}
BENCHMARK(BM_gamma_decomposition_icosidodecahedron);

void BM_plane_formation_step_dodecahedron(benchmark::State& state) {
  const auto pts = generate_polyhedron("dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(plane_formation_step(pts, 0));
}
BENCHMARK(BM_plane_formation_step_dodecahedron);

void BM_full_run_dodecahedron(benchmark::State& state) {
  const auto pts = generate_polyhedron("dodecahedron");
  const Tolerance tol;
  const Algorithm alg = [tol](std::span<const Point3> obs, std::size_t self) {
    return plane_formation_step(obs, self, tol);
  };
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run(pts, random_frames(pts, seed++), alg, 6));
}
BENCHMARK(BM_full_run_dodecahedron);

}  // namespace

BENCHMARK_MAIN();
