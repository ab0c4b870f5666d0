#include <benchmark/benchmark.h>

#include "mhopf/dcp.hpp"
#include "mhopf/instances.hpp"
#include "mhopf/mha_laws.hpp"

using namespace mhopf;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_CrossedProductTable(benchmark::State& state) {
  auto A = make_instance("grp-S3", Field::rationals());
  auto dual = dual_hopf(*A);
  const AutoPair p = make_pair(A, "inner:1", "inner:2");
  for (auto _ : state) benchmark::DoNotOptimize(crossed_product_table(*A, *dual, p, exec_of(state)));
}
BENCHMARK(BM_CrossedProductTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FirstFailure(benchmark::State& state) {
  auto A = make_instance("sweedler-H4", Field::rationals());
  // script-T o T2 = T4 on random pairs.
  const Probe probe = [&](std::size_t i) {
    Rng rng = Rng::stream(1, "bench#" + std::to_string(i));
    const Vec a = random_element(*A, rng), b = random_element(*A, rng);
    return expect_equal(script_t(*A, t2(*A, a, b)), t4(*A, a, b));
  };
  for (auto _ : state) benchmark::DoNotOptimize(first_failure(exec_of(state), 4096, probe));
}
BENCHMARK(BM_FirstFailure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AxiomSuite(benchmark::State& state) {
  auto A = make_instance("grp-S3", Field::rationals());
  for (auto _ : state) {
    Report r;
    r.seed = 1;
    r.samples = 100;
    LawRunner run(r, exec_of(state));
    mha_axiom_laws(run, *A);
    benchmark::DoNotOptimize(r.laws.size());
  }
}
BENCHMARK(BM_AxiomSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
