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
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "numen/error.hpp"
#include "numen/eval.hpp"

namespace numen {

Bm25Index::Bm25Index(std::span<const Document> corpus, Bm25Params params)
    : params_(params) {
  if (corpus.empty()) throw InvalidArgument("BM25 corpus is empty");
  ids_.reserve(corpus.size());
  lengths_.reserve(corpus.size());
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    ids_.push_back(corpus[d].id);
    const auto tokens = normalize_and_tokenize(corpus[d].text);
    lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    total += tokens.size();
    std::unordered_map<std::string_view, std::uint32_t> tf;
    for (const auto& t : tokens) ++tf[t];
    for (const auto& [term, count] : tf) {
      auto it = postings_.find(term);
      if (it == postings_.end()) {
        it = postings_.emplace(std::string(term), std::vector<Posting>{}).first;
      }
      it->second.push_back(Posting{static_cast<std::uint32_t>(d), count});
    }
  }
  avgdl_ = static_cast<double>(total) / static_cast<double>(corpus.size());
}

std::vector<double> Bm25Index::scores(std::string_view query) const {
  std::vector<double> out(ids_.size(), 0.0);
  const double n = static_cast<double>(ids_.size());
  const double k1 = params_.k1;
  const double b = params_.b;
  for (const auto& term : normalize_and_tokenize(query)) {
    auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double df = static_cast<double>(it->second.size());
    const double idf = std::max(0.0, std::log((n - df + 0.5) / (df + 0.5)));
    if (idf == 0.0) continue;
    for (const Posting& p : it->second) {
      const double tf = p.tf;
      const double norm =
          avgdl_ > 0.0 ? 1.0 - b + b * lengths_[p.doc] / avgdl_ : 1.0;
      out[p.doc] += idf * tf * (k1 + 1.0) / (tf + k1 * norm);
    }
  }
  return out;
}

std::vector<SearchResult> Bm25Index::rank(std::string_view query,
                                          std::size_t limit) const {
  if (normalize_and_tokenize(query).empty()) return {};
  const std::vector<double> s = scores(query);
  std::vector<std::uint32_t> order(ids_.size());
  std::iota(order.begin(), order.end(), 0U);
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    if (s[a] != s[b]) return s[a] > s[b];
    return ids_[a] < ids_[b];
  };
  const std::size_t n =
      (limit == 0 || limit > order.size()) ? order.size() : limit;
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n),
                    order.end(), better);
  std::vector<SearchResult> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(SearchResult{ids_[order[i]], s[order[i]], i + 1});
  }
  return out;
}

std::vector<SearchResult> bm25_rank(std::span<const Document> corpus,
                                    std::string_view query, Bm25Params params) {
  return Bm25Index(corpus, params).rank(query);
}

}  // namespace numen
