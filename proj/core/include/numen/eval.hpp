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
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "numen/encoder.hpp"
#include "numen/index.hpp"
#include "numen/ingest.hpp"
#include "numen/qrels.hpp"

namespace numen {

/// query_id -> doc ids, best first.
using RankedLists = std::map<std::string, std::vector<std::string>>;

RankedLists to_ranked_lists(
    const std::vector<std::string>& query_ids,
    const std::vector<std::vector<SearchResult>>& results);

struct RecallReport {
  std::vector<std::size_t> k_values;
  // query_id -> recall at each k, parallel to k_values.
  std::map<std::string, std::vector<double>> per_query;
  // Unweighted mean over per_query, parallel to k_values.
  std::vector<double> aggregate;
  std::string config_fingerprint;

  double at(std::size_t k) const;  // aggregate at k; throws if k unknown
};

/// Recall@k per query and macro-averaged. Queries whose qrels hold no
/// relevant document are skipped with a warning. Throws InvalidArgument
/// listing result queries that are missing from qrels, or for k == 0.
RecallReport recall_at_k(const RankedLists& results, const Qrels& qrels,
                         std::span<const std::size_t> k_values);
RecallReport recall_at_k(const RankedLists& results, const Qrels& qrels,
                         std::size_t k);

struct Bm25Params {
  double k1 = 0.9;
  double b = 0.75;
};

/// Okapi BM25 over normalize_and_tokenize tokens.
///
///   score(q, d) = sum over query tokens t of
///       idf(t) * tf(t,d) * (k1 + 1) / (tf(t,d) + k1 * (1 - b + b * |d| / avgdl))
///   idf(t) = max(0, ln((N - df(t) + 0.5) / (df(t) + 0.5)))
///
/// Repeated query tokens count once per occurrence.
class Bm25Index {
 public:
  explicit Bm25Index(std::span<const Document> corpus, Bm25Params params = {});

  std::size_t size() const { return ids_.size(); }
  const Bm25Params& params() const { return params_; }
  double average_length() const { return avgdl_; }

  // Score of every document, in corpus order.
  std::vector<double> scores(std::string_view query) const;

  /// Every document (or the best `limit` when non-zero), score descending
  /// then doc_id ascending. Empty when the query has no tokens.
  std::vector<SearchResult> rank(std::string_view query,
                                 std::size_t limit = 0) const;

 private:
  struct Posting {
    std::uint32_t doc;
    std::uint32_t tf;
  };

  Bm25Params params_;
  std::vector<std::string> ids_;
  std::vector<std::uint32_t> lengths_;
  double avgdl_ = 0.0;
  std::map<std::string, std::vector<Posting>, std::less<>> postings_;
};

// Throws InvalidArgument for an empty corpus.
std::vector<SearchResult> bm25_rank(std::span<const Document> corpus,
                                    std::string_view query,
                                    Bm25Params params = {});

/// Birthday approximation 1 - exp(-n^2 / 2d) for "some pair of n hashed
/// items shares a bucket".
double collision_probability(std::uint64_t n_grams, std::uint64_t dimension);

struct CollisionReport {
  std::size_t texts = 0;
  double mean_distinct_ngrams = 0.0;
  // Mean over texts of (colliding distinct pairs) / C(m, 2); texts with
  // m < 2 contribute 0.
  double pairwise_collision_rate = 0.0;
  // Mean over texts of the number of colliding distinct pairs.
  double mean_colliding_pairs = 0.0;
  // Fraction of texts with at least one colliding pair. This is the quantity
  // collision_probability() approximates.
  double any_collision_rate = 0.0;
  // Mean over texts of collision_probability(m, dimension).
  double predicted_any_collision_rate = 0.0;
};

/// Distinct n-grams per text (set semantics), hashed under `config`.
CollisionReport measure_empirical_collisions(std::span<const std::string> texts,
                                             const EncoderConfig& config);

struct SweepRow {
  std::uint32_t dimension = 0;
  std::size_t k = 0;
  double recall = 0.0;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepOptions {
  unsigned threads = 0;  // 0 = all cores
  // Documents encoded per scoring pass; 0 keeps about 256 MiB of rows.
  std::size_t max_batch_docs = 0;
  // Called after each dimension finishes with its rows.
  std::function<void(std::uint32_t, const std::vector<SweepRow>&)> on_dimension;
};

/// For each dimension (ascending, de-duplicated) encodes the corpus with
/// `base` at that dimension in bounded batches, answers every query, and
/// reports aggregate recall at each k. Errors are rethrown prefixed with "dimension <d>: ".
std::vector<SweepRow> dimension_sweep(std::span<const Document> corpus,
                                      std::span<const QueryRecord> queries,
                                      const Qrels& qrels,
                                      std::span<const std::uint32_t> dims,
                                      std::span<const std::size_t> k_values,
                                      const EncoderConfig& base = {},
                                      const SweepOptions& options = {});

// "dimension,k,recall" header, then one row per line; recall with 6 decimals.
void write_recall_csv(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> rows_from_report(const RecallReport& report,
                                       std::uint32_t dimension);
// Fixed-width table: one line per dimension, one column per k (percent).
std::string format_recall_table(std::span<const SweepRow> rows);

}  // namespace numen
