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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "numen/encoder.hpp"

namespace numen {

/// A (doc_id, text) pair ready to encode.
struct Document {
  std::string id;
  std::string text;
};

struct SearchResult {
  std::string doc_id;
  double score = 0.0;
  std::size_t rank = 0;  // 1-based

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Dense vectors stored row-major in one contiguous buffer, keyed by unique
/// doc ids in insertion order. Immutable once built; concurrent reads are
/// safe.
class VectorIndex {
 public:
  explicit VectorIndex(EncoderConfig config);

  const EncoderConfig& config() const { return config_; }
  std::uint32_t dimension() const { return config_.dimension; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::string& doc_id(std::size_t i) const { return ids_[i]; }
  std::span<const float> row(std::size_t i) const {
    return {data_.data() + i * dimension(), dimension()};
  }
  DenseVector vector(std::size_t i) const;
  // Position of doc_id, or size() when absent.
  std::size_t find(std::string_view doc_id) const;

  // Throws FormatError on a duplicate id, DimensionMismatch on wrong length.
  void add(std::string doc_id, std::span<const float> components);
  void add(std::string doc_id, const DenseVector& v) {
    add(std::move(doc_id), v.components());
  }
  void reserve(std::size_t count);

  // Throws DimensionMismatch when `other` would encode differently.
  void check_compatible(const EncoderConfig& other) const;

  /// Exact brute-force MIPS. Returns min(k, size()) results ordered by score
  /// descending, then doc_id ascending. Throws InvalidArgument for k == 0 and
  /// DimensionMismatch for a query of the wrong length.
  std::vector<SearchResult> top_k(const DenseVector& query, std::size_t k) const;

  // One top_k per query, computed on up to `threads` workers (0 = all
  // cores). Output order matches input order.
  std::vector<std::vector<SearchResult>> top_k_batch(
      std::span<const DenseVector> queries, std::size_t k,
      unsigned threads = 0) const;

  friend bool operator==(const VectorIndex& a, const VectorIndex& b) {
    return a.config_ == b.config_ && a.ids_ == b.ids_ && a.data_ == b.data_;
  }

 private:
  friend VectorIndex read_index(std::istream& in);
  friend VectorIndex build_index(std::span<const Document> documents,
                                 const EncoderConfig& config, unsigned threads);

  EncoderConfig config_;
  std::vector<std::string> ids_;
  std::vector<float> data_;
  std::unordered_map<std::string, std::size_t> positions_;
};

/// Encodes every document in input order. Duplicate ids are reported before
/// any encoding work starts.
VectorIndex build_index(std::span<const Document> documents,
                        const EncoderConfig& config, unsigned threads = 0);

// Index file layout (all little-endian):
//
//   "NUMN"                       magic
//   u32 version                  kIndexFormatVersion
//   u32 dimension
//   u64 count
//   u8  hash variant             0 = CRC32-IEEE, 1 = CRC32-C
//   u32 S, then S x u32          n-gram sizes, ascending
//   u32 W, then W x (u32, f64)   weight table (length, weight), ascending
//   count x {
//     u16 id length, id bytes (UTF-8)
//     dimension x f32            IEEE 754 binary32
//   }
//   u32 crc                      CRC32-IEEE of every preceding byte
inline constexpr std::uint32_t kIndexFormatVersion = 1;
inline constexpr char kIndexMagic[4] = {'N', 'U', 'M', 'N'};

void write_index(const VectorIndex& index, std::ostream& out);
// Throws FormatError naming the failed check: magic, version, header,
// truncation, or checksum.
VectorIndex read_index(std::istream& in);

void save_index(const VectorIndex& index, const std::filesystem::path& path);
VectorIndex load_index(const std::filesystem::path& path);

}  // namespace numen
