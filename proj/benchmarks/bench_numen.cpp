// Copyright 2026 The Numen Authors.
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
#include <benchmark/benchmark.h>

#include <map>

#include "numen/crc32.hpp"
#include "numen/encoder.hpp"
#include "numen/index.hpp"
#include "numen/ingest.hpp"

namespace {

const numen::SynthDataset& dataset() {
  static const numen::SynthDataset data = [] {
    numen::SynthSpec spec;
    spec.num_people = 5000;
    spec.seed = 1;
    return numen::generate_synthetic(spec);
  }();
  return data;
}

const std::vector<numen::Document>& documents() {
  static const auto docs = numen::to_documents(dataset().corpus);
  return docs;
}

numen::EncoderConfig config_for(std::int64_t dim) {
  numen::EncoderConfig c;
  c.dimension = static_cast<std::uint32_t>(dim);
  return c;
}

void BM_EncodeDocument(benchmark::State& state) {
  const numen::Encoder encoder(config_for(state.range(0)));
  const auto& docs = documents();
  std::size_t i = 0;
  for (auto _ : state) {
    auto v = encoder.encode(docs[i++ % docs.size()].text);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EncodeDocument)->Arg(4096)->Arg(32768);

void BM_ExtractNgrams(benchmark::State& state) {
  const numen::Encoder encoder(config_for(32768));
  for (auto _ : state) {
    auto grams = encoder.extract_ngrams("extraordinary");
    benchmark::DoNotOptimize(grams);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractNgrams);

void BM_Crc32(benchmark::State& state) {
  const auto variant = static_cast<numen::HashVariant>(state.range(0));
  const std::string bytes(static_cast<std::size_t>(state.range(1)), 'x');
  for (auto _ : state) benchmark::DoNotOptimize(numen::crc32(variant, bytes));
  state.SetBytesProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_Crc32)->Args({0, 5})->Args({1, 5})->Args({0, 4096})->Args({1, 4096});

void BM_BuildIndex(benchmark::State& state) {
  const auto config = config_for(state.range(0));
  const auto& docs = documents();
  for (auto _ : state) {
    auto index = numen::build_index(docs, config, 1);
    benchmark::DoNotOptimize(index);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(docs.size()));
}
BENCHMARK(BM_BuildIndex)->Arg(32768)->Unit(benchmark::kMillisecond);

void BM_TopK(benchmark::State& state) {
  const auto config = config_for(state.range(0));
  static std::map<std::int64_t, numen::VectorIndex> cache;
  auto it = cache.find(state.range(0));
  if (it == cache.end()) {
    it = cache.emplace(state.range(0), numen::build_index(documents(), config)).first;
  }
  const numen::VectorIndex& index = it->second;
  const numen::Encoder encoder(config);
  std::vector<numen::DenseVector> queries;
  for (const auto& q : dataset().queries) queries.push_back(encoder.encode(q.text));
  const auto k = static_cast<std::size_t>(state.range(1));
  std::size_t i = 0;
  for (auto _ : state) {
    auto hits = index.top_k(queries[i++ % queries.size()], k);
    benchmark::DoNotOptimize(hits);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TopK)->Args({4096, 10})->Args({32768, 10})->Args({32768, 100})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
