#include <benchmark/benchmark.h>

#include "charvar/euler/euler.hpp"
#include "charvar/linkgroup/linkgroup.hpp"
#include "charvar/pipeline/pipeline.hpp"
#include "charvar/poly/gcd.hpp"
#include "charvar/projmodel/projmodel.hpp"
#include "charvar/resolve/resolve.hpp"
#include "charvar/traceelim/traceelim.hpp"

using namespace charvar;

namespace {

const char* kWhitehead = "-w^3*x*y + w^2*x^2*z + w^2*y^2*z - w*x*y*z^2 + u^2*(z^3 - 2*w^2*z)";

Poly nonabelian(int n) {
  RelationPolys rp = relation_polys(surgery_word(n));
  return nonabelian_part(rp.p1, rp.p2).p;
}

void BM_RelationPolys(benchmark::State& state) {
  GroupWord w = surgery_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(relation_polys(w));
}
BENCHMARK(BM_RelationPolys)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RelationGcd(benchmark::State& state) {
  RelationPolys rp = relation_polys(surgery_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gcd_multivariate(rp.p1, rp.p2));
}
BENCHMARK(BM_RelationGcd)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TraceCoords(benchmark::State& state) {
  Poly p = nonabelian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_trace_coords(p));
}
BENCHMARK(BM_TraceCoords)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_ComponentSplit(benchmark::State& state) {
  TracePoly t = to_trace_coords(nonabelian(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(component_split(t));
}
BENCHMARK(BM_ComponentSplit)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SingularPointsWhitehead(benchmark::State& state) {
  BiForm F = BiForm::parse(kWhitehead);
  for (auto _ : state) benchmark::DoNotOptimize(singular_points(F));
}
BENCHMARK(BM_SingularPointsWhitehead)->Unit(benchmark::kMillisecond);

void BM_ResolveWhitehead(benchmark::State& state) {
  BiForm F = BiForm::parse(kWhitehead);
  auto sing = singular_points(F);
  for (auto _ : state) {
    for (const auto& p : sing) benchmark::DoNotOptimize(resolve_point(F, p, sing));
  }
}
BENCHMARK(BM_ResolveWhitehead)->Unit(benchmark::kMillisecond);

void BM_EulerWhitehead(benchmark::State& state) {
  EvenSplit s = split_even(BiForm::parse(kWhitehead));
  for (auto _ : state) benchmark::DoNotOptimize(chi_singular_model(cover_geometry(s)));
}
BENCHMARK(BM_EulerWhitehead)->Unit(benchmark::kMillisecond);

void BM_FullPipeline(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(PipelineSpec::surgery(static_cast<int>(state.range(0)))));
}
BENCHMARK(BM_FullPipeline)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
