#include <benchmark/benchmark.h>

#include "inlsfs/eval.hpp"
#include "inlsfs/features.hpp"
#include "inlsfs/mlc.hpp"
#include "inlsfs/sfsgen.hpp"
#include "inlsfs/synth.hpp"

using namespace inlsfs;

namespace {

synth::Project project(int n) {
  synth::ProjectParams pp;
  pp.n_functions = n;
  pp.n_files = std::max(1, n / 40);
  return synth::make_project(42, pp);
}

void BM_Parse(benchmark::State& state) {
  synth::Project p = project(static_cast<int>(state.range(0)));
  size_t bytes = 0;
  for (const auto& [f, text] : p.sources) bytes += text.size();
  for (auto _ : state) benchmark::DoNotOptimize(synth::parse_sources(p.sources));
  state.SetBytesProcessed(static_cast<int64_t>(bytes * state.iterations()));
}
BENCHMARK(BM_Parse)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Featurize(benchmark::State& state) {
  synth::Project p = project(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(featurize_all(p.g, p.facts));
  state.SetItemsProcessed(static_cast<int64_t>(p.g.edges().size() * state.iterations()));
}
BENCHMARK(BM_Featurize)->Arg(1000)->Unit(benchmark::kMillisecond);

// args: functions, ensemble size
void BM_TrainEcocc(benchmark::State& state) {
  synth::Project p = project(static_cast<int>(state.range(0)));
  FeatureTable t = featurize_all(p.g, p.facts);
  LabelMatrix m = synth::oracle_matrix(p.g, p.facts, synth::default_settings());
  MlcParams mp;
  mp.seed = 1;
  mp.ensemble_size = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(train_ecoccj48(t, m, mp));
}
BENCHMARK(BM_TrainEcocc)->Args({200, 10})->Args({1000, 50})->Unit(benchmark::kMillisecond);

void BM_Predict(benchmark::State& state) {
  synth::Project p = project(1000);
  FeatureTable t = featurize_all(p.g, p.facts);
  LabelMatrix m = synth::oracle_matrix(p.g, p.facts, synth::default_settings());
  MlcParams mp;
  mp.seed = 1;
  MlcModel model = train_ecoccj48(t, m, mp);
  for (auto _ : state) benchmark::DoNotOptimize(predict(model, t));
  state.SetItemsProcessed(static_cast<int64_t>(t.rows.size() * state.iterations()));
}
BENCHMARK(BM_Predict)->Unit(benchmark::kMillisecond);

void BM_GenSfs(benchmark::State& state) {
  synth::Project p = project(static_cast<int>(state.range(0)));
  LabelMatrix m = synth::oracle_matrix(p.g, p.facts, synth::default_settings());
  for (auto _ : state) benchmark::DoNotOptimize(generate_for_matrix(p.g, &p.facts, m));
}
BENCHMARK(BM_GenSfs)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_DemoMatch(benchmark::State& state) {
  synth::Project p = project(300);
  auto s = synth::default_settings()[6];
  MappingBundle b = synth::compile(p.g, p.facts, s, synth::inline_decisions(p.g, p.facts, s));
  std::vector<Query> queries = queries_from_ground_truth(ground_truth_sets(b, p.facts), p.facts);
  LabelMatrix m = synth::oracle_matrix(p.g, p.facts, {s});
  std::vector<Sfs> sfss = generate_for_matrix(p.g, &p.facts, m).sfss;
  for (auto _ : state) benchmark::DoNotOptimize(recall_at_k(queries, p.facts, sfss, 1));
}
BENCHMARK(BM_DemoMatch)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
