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
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "numen/error.hpp"
#include "numen/eval.hpp"

namespace numen {

double collision_probability(std::uint64_t n_grams, std::uint64_t dimension) {
  if (n_grams < 1 || dimension < 1) {
    throw InvalidArgument("collision_probability: n and d must be >= 1");
  }
  const double n = static_cast<double>(n_grams);
  return -std::expm1(-(n * n) / (2.0 * static_cast<double>(dimension)));
}

CollisionReport measure_empirical_collisions(std::span<const std::string> texts,
                                             const EncoderConfig& config) {
  const Encoder encoder(config);
  CollisionReport r;
  r.texts = texts.size();
  if (texts.empty()) return r;
  for (const std::string& text : texts) {
    std::unordered_set<std::string> distinct;
    for (const auto& word : normalize_and_tokenize(text)) {
      for (auto& g : encoder.extract_ngrams(word)) distinct.insert(std::move(g.bytes));
    }
    std::unordered_map<std::uint32_t, std::uint64_t> buckets;
    for (const auto& g : distinct) ++buckets[encoder.hash(g)];
    std::uint64_t colliding = 0;
    for (const auto& [idx, c] : buckets) colliding += c * (c - 1) / 2;
    const double m = static_cast<double>(distinct.size());
    r.mean_distinct_ngrams += m;
    r.mean_colliding_pairs += static_cast<double>(colliding);
    if (distinct.size() >= 2) {
      r.pairwise_collision_rate += static_cast<double>(colliding) / (m * (m - 1) / 2);
      r.predicted_any_collision_rate +=
          collision_probability(distinct.size(), encoder.dimension());
    }
    if (colliding > 0) r.any_collision_rate += 1.0;
  }
  const double n = static_cast<double>(texts.size());
  r.mean_distinct_ngrams /= n;
  r.mean_colliding_pairs /= n;
  r.pairwise_collision_rate /= n;
  r.any_collision_rate /= n;
  r.predicted_any_collision_rate /= n;
  return r;
}

}  // namespace numen
