#include <benchmark/benchmark.h>

#include "far/baselines.hpp"
#include "far/engine.hpp"
#include "far/evaluation.hpp"
#include "far/grid.hpp"
#include "far/reference.hpp"

namespace {

const far::Rule& rule() {
  static const far::Rule r = far::reference::benchmark_rule();
  return r;
}

const far::MembershipVector& grid_premise() {
  static const far::MembershipVector p =
      far::make_premise_case(1, rule()).premise;
  return p;
}

void BM_ExtendVector(benchmark::State& state) {
  const far::MembershipVector v = rule().consequent;
  for (auto _ : state) {
    auto ext = far::extend_vector(v, 5);
    benchmark::DoNotOptimize(ext.data());
  }
}
BENCHMARK(BM_ExtendVector);

void BM_ForwardDistance(benchmark::State& state) {
  for (auto _ : state) {
    auto trace =
        far::fmp_edm(rule(), rule().antecedent, 1, far::SignForm::three_valued);
    benchmark::DoNotOptimize(trace.conclusion.data());
  }
}
BENCHMARK(BM_ForwardDistance);

void BM_BackwardDistance(benchmark::State& state) {
  const far::MembershipVector premise = far::complement(rule().consequent);
  for (auto _ : state) {
    auto trace = far::fmt_edm(rule(), premise, 6, far::SignForm::three_valued);
    benchmark::DoNotOptimize(trace.conclusion.data());
  }
}
BENCHMARK(BM_BackwardDistance);

void BM_CompositionalForward(benchmark::State& state) {
  for (auto _ : state) {
    auto out = far::cri_fmp_on_grid(rule(), grid_premise(),
                                    far::ResiduatedPair::lukasiewicz);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_CompositionalForward);

void BM_TripleBackward(benchmark::State& state) {
  const far::MembershipVector premise =
      far::make_premise_case(9, rule()).premise;
  for (auto _ : state) {
    auto out =
        far::tip_fmt_on_grid(rule(), premise, far::ResiduatedPair::godel);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_TripleBackward);

void BM_QuintupleForward(benchmark::State& state) {
  for (auto _ : state) {
    auto out =
        far::qip_fmp_on_grid(rule(), grid_premise(), far::ResiduatedPair::r0);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_QuintupleForward);

void BM_SimilarityForward(benchmark::State& state) {
  for (auto _ : state) {
    auto out = far::aars_fmp_on_grid(rule(), grid_premise(),
                                     far::AarsForm::reduction);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_SimilarityForward);

void BM_ClassSuite(benchmark::State& state) {
  far::MethodId edm;
  far::MethodId cri;
  cri.family = far::Family::cri;
  for (auto _ : state) {
    auto report = far::run_class_suite({edm, cri}, rule(), 1);
    benchmark::DoNotOptimize(report.records.data());
  }
}
BENCHMARK(BM_ClassSuite);

void BM_ReproduceForwardTable(benchmark::State& state) {
  for (auto _ : state) {
    auto table = far::reference::reproduce_table(2);
    benchmark::DoNotOptimize(table.cells.data());
  }
}
BENCHMARK(BM_ReproduceForwardTable);

}  // namespace

BENCHMARK_MAIN();
