#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tnorm/finite_tomonoid.hpp"
#include "tnorm/spec_io.hpp"
#include "tnorm/verify.hpp"

using namespace tnorm;

namespace {
  LoadedSpec const& spec(int k) {
    static std::vector<LoadedSpec> const all = [] {
      std::vector<LoadedSpec> v;
      for (int i = 1; i <= 4; ++i) {
        v.push_back(load_spec_file(std::filesystem::path(TNORM_SPEC_DIR)
                                   / ("odot" + std::to_string(i) + ".spec")));
      }
      return v;
    }();
    return all.at(k - 1);
  }

  std::vector<double> const& samples() {
    static std::vector<double> const v = [] {
      std::mt19937_64                        rng(7);
      std::uniform_real_distribution<double> unit(0, 1);
      std::vector<double>                    out(4096);
      for (double& x : out) {
        x = unit(rng);
      }
      return out;
    }();
    return v;
  }
}  // namespace

// One evaluation of a built operation at random arguments.
static void BM_Evaluate(benchmark::State& state) {
  TnormFn const              f  = spec(static_cast<int>(state.range(0))).fn();
  std::vector<double> const& xs = samples();
  std::size_t                i  = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f(xs[i % xs.size()], xs[(i + 1) % xs.size()]));
    i += 2;
  }
}
BENCHMARK(BM_Evaluate)->DenseRange(1, 4);

// The closed-form reference at the same arguments.
static void BM_Oracle(benchmark::State& state) {
  std::string const          name = "odot" + std::to_string(state.range(0));
  std::vector<double> const& xs   = samples();
  std::size_t                i    = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle(name, xs[i % xs.size()], xs[(i + 1) % xs.size()]));
    i += 2;
  }
}
BENCHMARK(BM_Oracle)->DenseRange(1, 4);

// Axiom checks on an n-point grid; associativity dominates at n^3.
static void BM_AxiomGrid(benchmark::State& state) {
  TnormFn const     f = spec(3).fn();
  std::size_t const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms_grid(f, n, 1e-9));
  }
}
BENCHMARK(BM_AxiomGrid)->Arg(51)->Arg(101)->Unit(benchmark::kMillisecond);

static void BM_Enumerate(benchmark::State& state) {
  std::size_t const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_tomonoids(n).size());
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ParseSpec(benchmark::State& state) {
  std::string const text = print_spec(read_spec_file(std::filesystem::path(TNORM_SPEC_DIR) / "odot2.spec"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_spec(text));
  }
}
BENCHMARK(BM_ParseSpec);

BENCHMARK_MAIN();
