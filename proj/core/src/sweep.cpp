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
#include <algorithm>
#include <string_view>
#include <unordered_set>

#include "numen/error.hpp"
#include "numen/eval.hpp"
#include "numen/parallel.hpp"

namespace numen {
namespace {

// Caps the dense rows held at once (in floats) during a sweep.
constexpr std::size_t kBatchFloats = std::size_t{1} << 26;

void merge_top(std::vector<SearchResult>& acc, const std::vector<SearchResult>& part,
               std::size_t depth) {
  acc.insert(acc.end(), part.begin(), part.end());
  auto better = [](const SearchResult& a, const SearchResult& b) {
    return a.score != b.score ? a.score > b.score : a.doc_id < b.doc_id;
  };
  const std::size_t keep = std::min(depth, acc.size());
  std::partial_sort(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(keep), acc.end(),
                    better);
  acc.resize(keep);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i].rank = i + 1;
}

}  // namespace

std::vector<SweepRow> dimension_sweep(std::span<const Document> corpus,
                                      std::span<const QueryRecord> queries,
                                      const Qrels& qrels,
                                      std::span<const std::uint32_t> dims,
                                      std::span<const std::size_t> k_values,
                                      const EncoderConfig& base,
                                      const SweepOptions& options) {
  if (dims.empty()) throw InvalidArgument("dimension_sweep: no dimensions");
  if (k_values.empty()) throw InvalidArgument("dimension_sweep: no cutoffs");
  std::vector<std::uint32_t> sorted(dims.begin(), dims.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::uint32_t d : sorted) {
    if (d < 1) throw InvalidArgument("dimension_sweep: dimensions must be >= 1");
  }
  const std::size_t depth =
      std::max<std::size_t>(1, *std::max_element(k_values.begin(), k_values.end()));
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& doc : corpus) {
      if (!seen.insert(doc.id).second) throw FormatError("duplicate doc_id '" + doc.id + "'");
    }
  }

  // n-gram CRCs do not depend on the dimension, so hash everything once.
  const Encoder encoder(base);
  std::vector<std::vector<HashedNgram>> doc_ngrams(corpus.size());
  std::vector<std::vector<HashedNgram>> query_ngrams(queries.size());
  parallel_for(corpus.size(), options.threads, [&](std::size_t i) {
    doc_ngrams[i] = encoder.hashed_ngrams(corpus[i].text);
  });
  parallel_for(queries.size(), options.threads, [&](std::size_t i) {
    query_ngrams[i] = encoder.hashed_ngrams(queries[i].text);
  });
  std::vector<std::string> query_ids;
  query_ids.reserve(queries.size());
  for (const auto& q : queries) query_ids.push_back(q.query_id);

  std::vector<SweepRow> rows;
  for (std::uint32_t d : sorted) {
    try {
      EncoderConfig config = encoder.config();
      config.dimension = d;
      std::vector<DenseVector> qvecs(queries.size());
      parallel_for(queries.size(), options.threads, [&](std::size_t i) {
        qvecs[i] = Encoder::encode_hashed(query_ngrams[i], d);
      });
      // Stream the corpus through bounded batches and merge per-query top
      // lists; a document's score does not depend on its batch, so the merge
      // equals ranking one full index.
      const std::size_t batch_docs = options.max_batch_docs != 0
                                      ? options.max_batch_docs
                                      : std::max<std::size_t>(1, kBatchFloats / d);
      std::vector<std::vector<SearchResult>> results(queries.size());
      std::vector<DenseVector> batch;
      for (std::size_t start = 0; start < corpus.size(); start += batch_docs) {
        const std::size_t n = std::min(batch_docs, corpus.size() - start);
        batch.assign(n, DenseVector());
        parallel_for(n, options.threads, [&](std::size_t i) {
          batch[i] = Encoder::encode_hashed(doc_ngrams[start + i], d);
        });
        VectorIndex index(config);
        index.reserve(n);
        for (std::size_t i = 0; i < n; ++i) index.add(corpus[start + i].id, batch[i]);
        batch.clear();
        const auto part = index.top_k_batch(qvecs, depth, options.threads);
        for (std::size_t q = 0; q < queries.size(); ++q) {
          merge_top(results[q], part[q], depth);
        }
      }
      RecallReport report =
          recall_at_k(to_ranked_lists(query_ids, results), qrels, k_values);
      report.config_fingerprint = config.describe();
      auto dim_rows = rows_from_report(report, d);
      if (options.on_dimension) options.on_dimension(d, dim_rows);
      rows.insert(rows.end(), dim_rows.begin(), dim_rows.end());
    } catch (const Error& e) {
      throw Error("dimension " + std::to_string(d) + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace numen
