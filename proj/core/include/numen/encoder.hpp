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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numen/crc32.hpp"

namespace numen {

/// Everything that determines the text -> vector mapping. Two equal configs
/// produce bit-identical encodings of the same text.
struct EncoderConfig {
  std::uint32_t dimension = 32768;
  // Extracted n-gram lengths, in code points, boundary markers included.
  std::vector<std::uint32_t> ngram_sizes{3, 4, 5};
  // n-gram length -> weight. A length with no exact key takes the weight of
  // the largest key below it, so {3:1, 4:5, 5:10} also gives 10 for |g| >= 5.
  std::map<std::uint32_t, double> weight_table{{3, 1.0}, {4, 5.0}, {5, 10.0}};
  HashVariant hash_variant = HashVariant::kCrc32Ieee;

  // Throws ConfigError describing the first violated constraint.
  void validate() const;

  // Sorts and de-duplicates ngram_sizes, then validates.
  EncoderConfig normalized() const;

  // One-line human readable summary, e.g.
  // "dim=32768 ngrams=3,4,5 weights=3:1,4:5,5:10 hash=crc32-ieee".
  std::string describe() const;

  friend bool operator==(const EncoderConfig&, const EncoderConfig&) = default;
};

struct Ngram {
  std::string bytes;  // UTF-8, including '^' / '$' markers
  std::uint32_t length_class = 0;

  friend bool operator==(const Ngram&, const Ngram&) = default;
};

/// Fixed-length float32 vector; the encoded form of one text.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t dimension) : components_(dimension, 0.0F) {}
  explicit DenseVector(std::vector<float> components)
      : components_(std::move(components)) {}

  std::size_t dimension() const { return components_.size(); }
  std::span<const float> components() const { return components_; }
  std::span<float> components() { return components_; }
  float operator[](std::size_t i) const { return components_[i]; }
  float& operator[](std::size_t i) { return components_[i]; }

  double norm() const;
  std::size_t nonzero_count() const;
  bool is_zero() const { return nonzero_count() == 0; }

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<float> components_;
};

/// CRC of one n-gram plus its weight. Independent of the dimension, so a
/// text can be hashed once and projected to many dimensions.
struct HashedNgram {
  std::uint32_t crc = 0;
  double weight = 0.0;
};

struct EncodeStats {
  std::size_t ngram_count = 0;
  std::size_t nonzero_count = 0;
};

/// Lowercases, then splits on everything that is not a Unicode letter or
/// decimal digit. "state-of-the-art 7B" -> {"state","of","the","art","7b"}.
std::vector<std::string> normalize_and_tokenize(std::string_view text);

/// Validated, immutable encoder. Safe to share across threads.
class Encoder {
 public:
  explicit Encoder(EncoderConfig config = {});

  const EncoderConfig& config() const { return config_; }
  std::uint32_t dimension() const { return config_.dimension; }

  // Pads to "^word$" and emits every window of each configured size, sizes
  // ascending, windows left to right. Windows slide over code points.
  // Throws InvalidArgument for an empty word.
  std::vector<Ngram> extract_ngrams(std::string_view word) const;

  std::uint32_t hash(std::string_view ngram_bytes) const;
  std::uint32_t hash(const Ngram& g) const { return hash(g.bytes); }

  // Throws ConfigError when length_class is below the smallest weight key.
  double weight(std::uint32_t length_class) const;
  double weight(const Ngram& g) const { return weight(g.length_class); }

  /// Accumulate weights, log(1 + v), L2-normalize. Texts without n-grams
  /// yield the zero vector.
  DenseVector encode(std::string_view text, EncodeStats* stats = nullptr) const;

  // All n-gram occurrences of the text, in encode's accumulation order.
  std::vector<HashedNgram> hashed_ngrams(std::string_view text) const;

  // encode(text) == encode_hashed(hashed_ngrams(text), dimension()) bit for
  // bit; other dimensions give the encoding under a config differing only in
  // dimension.
  static DenseVector encode_hashed(std::span<const HashedNgram> ngrams,
                                   std::uint32_t dimension,
                                   EncodeStats* stats = nullptr);

 private:
  template <typename Visit>
  void for_each_ngram(std::string_view text, Visit&& visit) const;

  EncoderConfig config_;
  std::vector<double> weight_by_length_;  // indexed by length_class
  std::uint32_t min_weight_key_ = 0;
};

// Free-function forms; each validates `config` per call.
std::vector<Ngram> extract_ngrams(std::string_view word,
                                  const EncoderConfig& config);
std::uint32_t hash_ngram(const Ngram& g, const EncoderConfig& config);
double ngram_weight(const Ngram& g, const EncoderConfig& config);
DenseVector encode(std::string_view text, const EncoderConfig& config);

/// Dot product accumulated in double. Equals cosine similarity for unit
/// vectors. Throws DimensionMismatch.
double cosine_score(const DenseVector& q, const DenseVector& d);

}  // namespace numen
