#include "jumpcalc/arrangement.hpp"
#include "jumpcalc/building_set.hpp"
#include "jumpcalc/engine.hpp"
#include "jumpcalc/lattice.hpp"
#include "jumpcalc/oracle.hpp"
#include "jumpcalc/ring.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

using namespace jumpcalc;

namespace {

ArrangementInput fixture(const std::string& name) {
  std::ifstream in(std::string(JUMPCALC_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_arrangement(text.str());
}

const char* const kThreeLines = "three_concurrent_lines.json";
const char* const kPencil = "two_planes_pencil_a.json";

}  // namespace

static void BM_AnalyzeThreeLines(benchmark::State& state) {
  const auto a = fixture(kThreeLines);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a, {}));
}
BENCHMARK(BM_AnalyzeThreeLines)->Unit(benchmark::kMillisecond);

static void BM_AnalyzePencil(benchmark::State& state) {
  const auto a = fixture(kPencil);
  AnalyzeOptions options;
  options.building_set = state.range(0) ? BuildingSetKind::minimal : BuildingSetKind::full;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(a, options));
}
BENCHMARK(BM_AnalyzePencil)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_TopSlicePencil(benchmark::State& state) {
  const auto a = fixture(kPencil);
  const auto g = make_building_set(cone(a), BuildingSetKind::full);
  const auto p = build_presentation(g);
  for (auto _ : state) benchmark::DoNotOptimize(TopSlice(p));
}
BENCHMARK(BM_TopSlicePencil)->Unit(benchmark::kMillisecond);

static void BM_OracleFourLines(benchmark::State& state) {
  const auto a = fixture("four_concurrent_lines.json");
  for (auto _ : state) benchmark::DoNotOptimize(AffineOracle(a).jumping_set());
}
BENCHMARK(BM_OracleFourLines)->Unit(benchmark::kMillisecond);

static void BM_OraclePencil(benchmark::State& state) {
  const auto a = fixture(kPencil);
  for (auto _ : state) benchmark::DoNotOptimize(AffineOracle(a).jumping_set());
}
BENCHMARK(BM_OraclePencil)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
