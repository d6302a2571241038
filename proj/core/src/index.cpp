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
#include "numen/index.hpp"

#include <algorithm>
#include <queue>

#include "numen/error.hpp"
#include "numen/parallel.hpp"

namespace numen {
namespace {

struct Candidate {
  double score;
  std::size_t pos;
};

}  // namespace

VectorIndex::VectorIndex(EncoderConfig config)
    : config_(config.normalized()) {}

DenseVector VectorIndex::vector(std::size_t i) const {
  auto r = row(i);
  return DenseVector(std::vector<float>(r.begin(), r.end()));
}

std::size_t VectorIndex::find(std::string_view doc_id) const {
  auto it = positions_.find(std::string(doc_id));
  return it == positions_.end() ? size() : it->second;
}

void VectorIndex::reserve(std::size_t count) {
  ids_.reserve(count);
  data_.reserve(count * dimension());
  positions_.reserve(count);
}

void VectorIndex::add(std::string doc_id, std::span<const float> components) {
  if (components.size() != dimension()) {
    throw DimensionMismatch("vector for '" + doc_id + "' has dimension " +
                            std::to_string(components.size()) +
                            ", index dimension is " +
                            std::to_string(dimension()));
  }
  auto [it, inserted] = positions_.try_emplace(doc_id, ids_.size());
  if (!inserted) throw FormatError("duplicate doc_id '" + doc_id + "'");
  ids_.push_back(std::move(doc_id));
  data_.insert(data_.end(), components.begin(), components.end());
}

void VectorIndex::check_compatible(const EncoderConfig& other) const {
  const EncoderConfig n = other.normalized();
  if (n == config_) return;
  if (n.dimension != config_.dimension) {
    throw DimensionMismatch("index dimension " +
                            std::to_string(config_.dimension) +
                            " != requested dimension " +
                            std::to_string(n.dimension));
  }
  throw DimensionMismatch("encoder config mismatch: index was built with [" +
                          config_.describe() + "], requested [" +
                          n.describe() + "]");
}

std::vector<SearchResult> VectorIndex::top_k(const DenseVector& query,
                                             std::size_t k) const {
  if (k == 0) throw InvalidArgument("top_k: k must be >= 1");
  if (query.dimension() != dimension()) {
    throw DimensionMismatch("query dimension " +
                            std::to_string(query.dimension()) +
                            " != index dimension " +
                            std::to_string(dimension()));
  }
  // Encoded queries are sparse; skipping their zero components leaves the
  // double-precision sum unchanged since every skipped term is exactly 0.
  std::vector<std::uint32_t> nz;
  for (std::uint32_t i = 0; i < dimension(); ++i) {
    if (query[i] != 0.0F) nz.push_back(i);
  }
  const std::size_t want = std::min(k, size());
  // "a before b" in result order.
  auto better = [this](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return ids_[a.pos] < ids_[b.pos];
  };
  // Max-heap under `better` keeps the worst retained candidate on top.
  std::priority_queue<Candidate, std::vector<Candidate>, decltype(better)>
      heap(better);
  for (std::size_t pos = 0; pos < size(); ++pos) {
    const float* r = data_.data() + pos * dimension();
    double s = 0.0;
    for (std::uint32_t i : nz) s += static_cast<double>(query[i]) * r[i];
    Candidate c{s, pos};
    if (heap.size() < want) {
      heap.push(c);
    } else if (want > 0 && better(c, heap.top())) {
      heap.pop();
      heap.push(c);
    }
  }
  std::vector<Candidate> kept;
  kept.reserve(heap.size());
  while (!heap.empty()) {
    kept.push_back(heap.top());
    heap.pop();
  }
  std::reverse(kept.begin(), kept.end());
  std::vector<SearchResult> out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    out.push_back(SearchResult{ids_[kept[i].pos], kept[i].score, i + 1});
  }
  return out;
}

std::vector<std::vector<SearchResult>> VectorIndex::top_k_batch(
    std::span<const DenseVector> queries, std::size_t k,
    unsigned threads) const {
  std::vector<std::vector<SearchResult>> out(queries.size());
  parallel_for(queries.size(), threads,
               [&](std::size_t i) { out[i] = top_k(queries[i], k); });
  return out;
}

VectorIndex build_index(std::span<const Document> documents,
                        const EncoderConfig& config, unsigned threads) {
  const Encoder encoder(config);
  {
    std::unordered_map<std::string_view, std::size_t> seen;
    seen.reserve(documents.size());
    for (std::size_t i = 0; i < documents.size(); ++i) {
      if (!seen.emplace(documents[i].id, i).second) {
        throw FormatError("duplicate doc_id '" + documents[i].id +
                          "' at position " + std::to_string(i));
      }
    }
  }
  VectorIndex index(encoder.config());
  const std::size_t dim = index.dimension();
  index.reserve(documents.size());
  for (std::size_t i = 0; i < documents.size(); ++i) {
    index.positions_.emplace(documents[i].id, i);
    index.ids_.push_back(documents[i].id);
  }
  index.data_.resize(documents.size() * dim);
  parallel_for(documents.size(), threads, [&](std::size_t i) {
    const DenseVector v = encoder.encode(documents[i].text);
    std::copy(v.components().begin(), v.components().end(),
              index.data_.begin() + static_cast<std::ptrdiff_t>(i * dim));
  });
  return index;
}

}  // namespace numen
