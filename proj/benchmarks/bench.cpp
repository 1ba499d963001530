#include <benchmark/benchmark.h>

#include "poncelet/suite.hpp"

using namespace poncelet;

namespace {

template <class S>
std::vector<Config<S>> configs(std::size_t check, int n) {
  std::vector<Config<S>> out;
  for (int i = 0; i < n; ++i) out.push_back(sample_config<S>(stream_seed(1, check, i), check));
  return out;
}

template <class S>
void BM_Check(benchmark::State& state) {
  const std::size_t check = static_cast<std::size_t>(state.range(0));
  auto cfgs = configs<S>(check, 64);
  std::size_t i = 0;
  for (auto _ : state) {
    CheckResult r = run_check(check, cfgs[i++ % cfgs.size()]);
    benchmark::DoNotOptimize(r.passed);
  }
  state.SetLabel(std::string(check_registry()[check].id));
}

template <class S>
void BM_Sample(benchmark::State& state) {
  const std::size_t check = static_cast<std::size_t>(state.range(0));
  std::uint64_t trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_config<S>(stream_seed(2, check, trial++), check));
  state.SetLabel(std::string(check_registry()[check].id));
}

template <class S>
void BM_ConicFit(benchmark::State& state) {
  auto cfgs = configs<S>(*find_check("T01"), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const Config<S>& c = cfgs[i++ % cfgs.size()];
    benchmark::DoNotOptimize(rectangular_circumhyperbola(c.triangle.A, c.triangle.B, c.triangle.C, *c.P));
  }
}

void BM_Verify(benchmark::State& state) {
  SuiteOptions o;
  for (std::size_t i = 0; i < check_registry().size(); ++i) o.checks.push_back(i);
  o.trials = static_cast<std::uint64_t>(state.range(1));
  o.backend = state.range(0) ? Backend::kFloat : Backend::kExact;
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(o).ok());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(o.trials * o.checks.size()));
}

// T05 (circle concurrence), T09 (centroid circle), T16 (Fuhrmann antipode), T24 (isogonal line).
#define CHECK_ARGS Arg(4)->Arg(8)->Arg(15)->Arg(23)

BENCHMARK(BM_Check<Rational>)->CHECK_ARGS;
BENCHMARK(BM_Check<double>)->CHECK_ARGS;
BENCHMARK(BM_Sample<Rational>)->CHECK_ARGS;
BENCHMARK(BM_Sample<double>)->CHECK_ARGS;
BENCHMARK(BM_ConicFit<Rational>);
BENCHMARK(BM_ConicFit<double>);
BENCHMARK(BM_Verify)->Args({0, 10})->Args({1, 100})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
