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
#include "numen/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numen/error.hpp"
#include "numen/unicode.hpp"

namespace numen {
namespace {

// Scratch accumulator reused across encodes on the same thread. Only the
// touched slots are reset, so cost is O(#ngrams) plus the output allocation.
struct Accumulator {
  std::vector<double> mass;
  std::vector<std::uint32_t> touched;

  void reset(std::uint32_t dimension) {
    for (std::uint32_t i : touched) mass[i] = 0.0;
    touched.clear();
    if (mass.size() != dimension) mass.assign(dimension, 0.0);
  }

  void add(std::uint32_t index, double w) {
    if (mass[index] == 0.0) touched.push_back(index);
    mass[index] += w;
  }

  DenseVector finish(std::uint32_t dimension, EncodeStats* stats) {
    DenseVector v(dimension);
    // Zero-weight n-grams may register a slot that stays at 0.0.
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    double sum_sq = 0.0;
    for (std::uint32_t i : touched) {
      mass[i] = std::log1p(mass[i]);
      sum_sq += mass[i] * mass[i];
    }
    std::size_t nonzero = 0;
    if (sum_sq > 0.0) {
      const double norm = std::sqrt(sum_sq);
      for (std::uint32_t i : touched) {
        v[i] = static_cast<float>(mass[i] / norm);
        if (v[i] != 0.0F) ++nonzero;
      }
    }
    if (stats != nullptr) stats->nonzero_count = nonzero;
    return v;
  }
};

Accumulator& thread_accumulator() {
  thread_local Accumulator acc;
  return acc;
}

}  // namespace

void EncoderConfig::validate() const {
  if (dimension < 1) throw ConfigError("dimension must be >= 1");
  if (ngram_sizes.empty()) throw ConfigError("ngram_sizes must not be empty");
  for (std::uint32_t n : ngram_sizes) {
    if (n < 1) throw ConfigError("n-gram sizes must be >= 1");
  }
  if (weight_table.empty()) throw ConfigError("weight_table must not be empty");
  bool any_positive = false;
  for (const auto& [len, w] : weight_table) {
    if (len < 1) throw ConfigError("weight_table keys must be >= 1");
    if (!std::isfinite(w) || w < 0.0) {
      throw ConfigError("weight for length " + std::to_string(len) +
                        " must be finite and >= 0");
    }
    if (w > 0.0) any_positive = true;
  }
  if (!any_positive) throw ConfigError("at least one weight must be > 0");
  const std::uint32_t min_key = weight_table.begin()->first;
  for (std::uint32_t n : ngram_sizes) {
    if (n < min_key) {
      throw ConfigError("n-gram size " + std::to_string(n) +
                        " has no weight (smallest weight key is " +
                        std::to_string(min_key) + ")");
    }
  }
  if (hash_variant != HashVariant::kCrc32Ieee &&
      hash_variant != HashVariant::kCrc32C) {
    throw ConfigError("unknown hash variant");
  }
}

EncoderConfig EncoderConfig::normalized() const {
  EncoderConfig out = *this;
  std::sort(out.ngram_sizes.begin(), out.ngram_sizes.end());
  out.ngram_sizes.erase(
      std::unique(out.ngram_sizes.begin(), out.ngram_sizes.end()),
      out.ngram_sizes.end());
  out.validate();
  return out;
}

std::string EncoderConfig::describe() const {
  std::ostringstream os;
  os << "dim=" << dimension << " ngrams=";
  for (std::size_t i = 0; i < ngram_sizes.size(); ++i) {
    os << (i ? "," : "") << ngram_sizes[i];
  }
  os << " weights=";
  bool first = true;
  for (const auto& [len, w] : weight_table) {
    os << (first ? "" : ",") << len << ':' << w;
    first = false;
  }
  os << " hash=" << to_string(hash_variant);
  return os.str();
}

double DenseVector::norm() const {
  double s = 0.0;
  for (float x : components_) s += static_cast<double>(x) * x;
  return std::sqrt(s);
}

std::size_t DenseVector::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(
      components_.begin(), components_.end(), [](float x) { return x != 0.0F; }));
}

std::vector<std::string> normalize_and_tokenize(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char32_t cp : unicode::decode_utf8(text)) {
    const char32_t lower = unicode::to_lower(cp);
    if (unicode::is_word_char(lower)) {
      unicode::append_utf8(current, lower);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

Encoder::Encoder(EncoderConfig config) : config_(config.normalized()) {
  min_weight_key_ = config_.weight_table.begin()->first;
  const std::uint32_t top = std::max(config_.ngram_sizes.back(),
                                     config_.weight_table.rbegin()->first);
  weight_by_length_.assign(top + 1, 0.0);
  for (std::uint32_t len = min_weight_key_; len <= top; ++len) {
    auto it = config_.weight_table.upper_bound(len);
    weight_by_length_[len] = std::prev(it)->second;
  }
}

double Encoder::weight(std::uint32_t length_class) const {
  if (length_class < min_weight_key_) {
    throw ConfigError("no weight for n-gram length " +
                      std::to_string(length_class) +
                      " (smallest weight key is " +
                      std::to_string(min_weight_key_) + ")");
  }
  if (length_class < weight_by_length_.size()) {
    return weight_by_length_[length_class];
  }
  return config_.weight_table.rbegin()->second;
}

std::uint32_t Encoder::hash(std::string_view ngram_bytes) const {
  return crc32(config_.hash_variant, ngram_bytes) % config_.dimension;
}

template <typename Visit>
void Encoder::for_each_ngram(std::string_view text, Visit&& visit) const {
  // Padded word as UTF-8 plus the byte offset of every code point boundary.
  std::string padded;
  std::vector<std::size_t> offsets;
  auto flush = [&] {
    if (padded.size() <= 1) return;
    padded.push_back('$');
    offsets.push_back(padded.size() - 1);
    offsets.push_back(padded.size());
    const std::size_t cps = offsets.size() - 1;
    for (std::uint32_t n : config_.ngram_sizes) {
      if (n > cps) break;  // sizes are ascending
      for (std::size_t j = 0; j + n <= cps; ++j) {
        visit(std::string_view(padded).substr(offsets[j],
                                              offsets[j + n] - offsets[j]),
              n);
      }
    }
  };
  auto start_word = [&] {
    padded.assign(1, '^');
    offsets.assign(1, 0);
  };
  start_word();
  for (char32_t cp : unicode::decode_utf8(text)) {
    const char32_t lower = unicode::to_lower(cp);
    if (unicode::is_word_char(lower)) {
      offsets.push_back(padded.size());
      unicode::append_utf8(padded, lower);
    } else {
      flush();
      start_word();
    }
  }
  flush();
}

std::vector<Ngram> Encoder::extract_ngrams(std::string_view word) const {
  if (word.empty()) throw InvalidArgument("extract_ngrams: empty word");
  const std::u32string cps = unicode::decode_utf8(word);
  std::u32string padded;
  padded.reserve(cps.size() + 2);
  padded.push_back(U'^');
  padded.append(cps);
  padded.push_back(U'$');
  std::vector<Ngram> out;
  for (std::uint32_t n : config_.ngram_sizes) {
    if (n > padded.size()) break;
    for (std::size_t j = 0; j + n <= padded.size(); ++j) {
      out.push_back(
          Ngram{unicode::encode_utf8(std::u32string_view(padded).substr(j, n)),
                n});
    }
  }
  return out;
}

DenseVector Encoder::encode(std::string_view text, EncodeStats* stats) const {
  Accumulator& acc = thread_accumulator();
  acc.reset(config_.dimension);
  std::size_t count = 0;
  for_each_ngram(text, [&](std::string_view g, std::uint32_t n) {
    acc.add(hash(g), weight(n));
    ++count;
  });
  if (stats != nullptr) stats->ngram_count = count;
  return acc.finish(config_.dimension, stats);
}

std::vector<HashedNgram> Encoder::hashed_ngrams(std::string_view text) const {
  std::vector<HashedNgram> out;
  for_each_ngram(text, [&](std::string_view g, std::uint32_t n) {
    out.push_back(HashedNgram{crc32(config_.hash_variant, g), weight(n)});
  });
  return out;
}

DenseVector Encoder::encode_hashed(std::span<const HashedNgram> ngrams,
                                   std::uint32_t dimension,
                                   EncodeStats* stats) {
  if (dimension < 1) throw ConfigError("dimension must be >= 1");
  Accumulator& acc = thread_accumulator();
  acc.reset(dimension);
  for (const HashedNgram& g : ngrams) acc.add(g.crc % dimension, g.weight);
  if (stats != nullptr) stats->ngram_count = ngrams.size();
  return acc.finish(dimension, stats);
}

std::vector<Ngram> extract_ngrams(std::string_view word,
                                  const EncoderConfig& config) {
  return Encoder(config).extract_ngrams(word);
}

std::uint32_t hash_ngram(const Ngram& g, const EncoderConfig& config) {
  return Encoder(config).hash(g);
}

double ngram_weight(const Ngram& g, const EncoderConfig& config) {
  return Encoder(config).weight(g);
}

DenseVector encode(std::string_view text, const EncoderConfig& config) {
  return Encoder(config).encode(text);
}

double cosine_score(const DenseVector& q, const DenseVector& d) {
  if (q.dimension() != d.dimension()) {
    throw DimensionMismatch("cosine_score: dimension " +
                            std::to_string(q.dimension()) + " vs " +
                            std::to_string(d.dimension()));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < q.dimension(); ++i) {
    s += static_cast<double>(q[i]) * d[i];
  }
  return s;
}

}  // namespace numen
