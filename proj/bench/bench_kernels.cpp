// Serial reference kernels against their OpenMP versions. Arg(0) is serial,
// Arg(1) parallel.

#include <benchmark/benchmark.h>

#include "qfq/fiber.hpp"
#include "qfq/parallel.hpp"
#include "qfq/qparams.hpp"
#include "qfq/structure_table.hpp"

using namespace qfq;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

const QMatrix& canonical() {
  static const QMatrix n({{{0, 0, 0, 0, 0}, {0, 0, 1, 1, 3}, {0, 4, 0, 2, 4}, {0, 4, 3, 0, 3}, {0, 2, 1, 2, 0}}});
  return n;
}

const StructureTable& canonical_table() {
  static const StructureTable t = build_table(canonical());
  return t;
}

void BM_EnumerateGeneric(benchmark::State& s) {
  for (auto _ : s) {
    auto v = s.range(0) ? enumerate_generic(Exec::parallel) : enumerate_generic_serial();
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_EnumerateGeneric)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildTable(benchmark::State& s) {
  for (auto _ : s) {
    auto t = s.range(0) ? build_table(canonical(), Exec::parallel) : build_table_serial(canonical());
    benchmark::DoNotOptimize(t.exponent_data().data());
  }
}
BENCHMARK(BM_BuildTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifySampled(benchmark::State& s) {
  VerifyOptions o;
  o.mode = VerifyMode::sampled;
  o.samples = 1000000;
  o.seed = 1;
  o.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(verify_associativity(canonical_table(), o).ok);
  s.SetItemsProcessed(s.iterations() * static_cast<std::int64_t>(o.samples));
}
BENCHMARK(BM_VerifySampled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VerifyFull(benchmark::State& s) {
  VerifyOptions o;
  o.mode = VerifyMode::full_triple;
  o.exec = exec_of(s);
  for (auto _ : s) benchmark::DoNotOptimize(verify_associativity(canonical_table(), o).ok);
}
BENCHMARK(BM_VerifyFull)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

void BM_TraceForm(benchmark::State& s) {
  const FiberAlgebra f = specialize(canonical_table(), FiberPoint::parse("1,-1,1,-1,0"));
  for (auto _ : s) {
    auto rows = s.range(0) ? trace_form(f, Exec::parallel) : trace_form_serial(f);
    benchmark::DoNotOptimize(rows.data());
  }
}
BENCHMARK(BM_TraceForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
