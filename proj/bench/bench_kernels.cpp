// Copyright 2026 The cryptext Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Parallel kernels against their serial references.

#include <omp.h>

#include <random>

#include <benchmark/benchmark.h>

#include "cryptext/analytics.hpp"
#include "cryptext/index.hpp"
#include "cryptext/textcore.hpp"
#include "fixtures.hpp"

namespace cryptext {
namespace {

const std::vector<Document>& corpus() {
  static const auto docs = testing::make_round_trip_fixture(7, 1000, 20000, 10).index_corpus;
  return docs;
}

const std::vector<Document>& timeline_docs() {
  static const auto docs = testing::make_timeline_corpus(7, 50000);
  return docs;
}

void BM_Ingest(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ingest(corpus(), {0, 1, 2}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_Ingest)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IngestSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ingest_serial(corpus(), {0, 1, 2}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK(BM_IngestSerial)->Unit(benchmark::kMillisecond);

TimelineQuery weekly_query() {
  TimelineQuery q;
  q.word = "republicans";
  q.granularity = Granularity::kWeek;
  return q;
}

void BM_Timeline(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto index = ingest(timeline_docs(), {1}).indexes.at(1);
  const auto q = weekly_query();
  for (auto _ : state) benchmark::DoNotOptimize(build_timeline(timeline_docs(), index, q));
}
BENCHMARK(BM_Timeline)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TimelineSerial(benchmark::State& state) {
  const auto index = ingest(timeline_docs(), {1}).indexes.at(1);
  const auto q = weekly_query();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_timeline_serial(timeline_docs(), index, q));
  }
}
BENCHMARK(BM_TimelineSerial)->Unit(benchmark::kMillisecond);

std::vector<std::pair<std::string, std::string>> word_pairs() {
  std::mt19937_64 rng(3);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 4096; ++i) {
    pairs.emplace_back(testing::random_word(rng, 6, 14), testing::random_word(rng, 6, 14));
  }
  return pairs;
}

void BM_DistanceBanded(benchmark::State& state) {
  const auto pairs = word_pairs();
  for (auto _ : state) {
    std::size_t hits = 0;
    for (const auto& [a, b] : pairs) hits += within_distance(a, b, 3);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_DistanceBanded);

void BM_DistanceFull(benchmark::State& state) {
  const auto pairs = word_pairs();
  for (auto _ : state) {
    std::size_t hits = 0;
    for (const auto& [a, b] : pairs) hits += levenshtein(a, b) <= 3;
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}
BENCHMARK(BM_DistanceFull);

}  // namespace
}  // namespace cryptext

BENCHMARK_MAIN();
