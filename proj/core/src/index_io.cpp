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
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "numen/crc32.hpp"
#include "numen/error.hpp"
#include "numen/index.hpp"

namespace numen {
namespace {

static_assert(std::numeric_limits<float>::is_iec559);
static_assert(std::numeric_limits<double>::is_iec559);

template <typename T>
T byteswap_if_needed(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    std::reverse(b, b + sizeof(T));
    std::memcpy(&v, b, sizeof(T));
    return v;
  }
}

class ChecksummedWriter {
 public:
  explicit ChecksummedWriter(std::ostream& out) : out_(out) {}

  void bytes(const void* p, std::size_t n) {
    const std::string_view view(static_cast<const char*>(p), n);
    crc_ = crc32_update(HashVariant::kCrc32Ieee, crc_, view);
    out_.write(view.data(), static_cast<std::streamsize>(n));
  }

  template <typename T>
  void scalar(T v) {
    v = byteswap_if_needed(v);
    bytes(&v, sizeof(T));
  }

  void floats(std::span<const float> v) {
    if constexpr (std::endian::native == std::endian::little) {
      bytes(v.data(), v.size_bytes());
    } else {
      for (float x : v) scalar(std::bit_cast<std::uint32_t>(x));
    }
  }

  std::uint32_t crc() const { return crc_; }

 private:
  std::ostream& out_;
  std::uint32_t crc_ = 0;
};

class ChecksummedReader {
 public:
  explicit ChecksummedReader(std::istream& in) : in_(in) {}

  void bytes(void* p, std::size_t n, const char* what) {
    in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw FormatError(std::string("index file truncated while reading ") +
                        what);
    }
    crc_ = crc32_update(HashVariant::kCrc32Ieee, crc_,
                        std::string_view(static_cast<const char*>(p), n));
  }

  template <typename T>
  T scalar(const char* what) {
    T v;
    bytes(&v, sizeof(T), what);
    return byteswap_if_needed(v);
  }

  void floats(std::span<float> v, const char* what) {
    bytes(v.data(), v.size_bytes(), what);
    if constexpr (std::endian::native != std::endian::little) {
      for (float& x : v) x = byteswap_if_needed(x);
    }
  }

  std::uint32_t crc() const { return crc_; }

 private:
  std::istream& in_;
  std::uint32_t crc_ = 0;
};

}  // namespace

void write_index(const VectorIndex& index, std::ostream& out) {
  const EncoderConfig& c = index.config();
  ChecksummedWriter w(out);
  w.bytes(kIndexMagic, sizeof(kIndexMagic));
  w.scalar<std::uint32_t>(kIndexFormatVersion);
  w.scalar<std::uint32_t>(c.dimension);
  w.scalar<std::uint64_t>(index.size());
  w.scalar<std::uint8_t>(static_cast<std::uint8_t>(c.hash_variant));
  w.scalar<std::uint32_t>(static_cast<std::uint32_t>(c.ngram_sizes.size()));
  for (std::uint32_t n : c.ngram_sizes) w.scalar<std::uint32_t>(n);
  w.scalar<std::uint32_t>(static_cast<std::uint32_t>(c.weight_table.size()));
  for (const auto& [len, weight] : c.weight_table) {
    w.scalar<std::uint32_t>(len);
    w.scalar<std::uint64_t>(std::bit_cast<std::uint64_t>(weight));
  }
  for (std::size_t i = 0; i < index.size(); ++i) {
    const std::string& id = index.doc_id(i);
    if (id.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw FormatError("doc_id longer than 65535 bytes cannot be stored: '" +
                        id.substr(0, 32) + "...'");
    }
    w.scalar<std::uint16_t>(static_cast<std::uint16_t>(id.size()));
    w.bytes(id.data(), id.size());
    w.floats(index.row(i));
  }
  const std::uint32_t crc = byteswap_if_needed(w.crc());
  out.write(reinterpret_cast<const char*>(&crc), sizeof(crc));
  if (!out) throw Error("failed writing index stream");
}

VectorIndex read_index(std::istream& in) {
  ChecksummedReader r(in);
  char magic[4];
  r.bytes(magic, sizeof(magic), "magic");
  if (std::memcmp(magic, kIndexMagic, sizeof(magic)) != 0) {
    throw FormatError("bad magic: not a NUMN index file");
  }
  const auto version = r.scalar<std::uint32_t>("version");
  if (version != kIndexFormatVersion) {
    throw FormatError("unsupported index format version " +
                      std::to_string(version) + " (expected " +
                      std::to_string(kIndexFormatVersion) + ")");
  }
  EncoderConfig config;
  config.dimension = r.scalar<std::uint32_t>("dimension");
  const auto count = r.scalar<std::uint64_t>("count");
  const auto variant = r.scalar<std::uint8_t>("hash variant");
  if (variant > static_cast<std::uint8_t>(HashVariant::kCrc32C)) {
    throw FormatError("bad header: unknown hash variant " +
                      std::to_string(variant));
  }
  config.hash_variant = static_cast<HashVariant>(variant);
  const auto sizes = r.scalar<std::uint32_t>("n-gram size count");
  if (sizes > 1024) throw FormatError("bad header: n-gram size count");
  config.ngram_sizes.clear();
  for (std::uint32_t i = 0; i < sizes; ++i) {
    config.ngram_sizes.push_back(r.scalar<std::uint32_t>("n-gram sizes"));
  }
  const auto weights = r.scalar<std::uint32_t>("weight count");
  if (weights > 1024) throw FormatError("bad header: weight count");
  config.weight_table.clear();
  for (std::uint32_t i = 0; i < weights; ++i) {
    const auto len = r.scalar<std::uint32_t>("weight table");
    const auto bits = r.scalar<std::uint64_t>("weight table");
    config.weight_table[len] = std::bit_cast<double>(bits);
  }
  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw FormatError(std::string("bad header: ") + e.what());
  }
  if (!std::is_sorted(config.ngram_sizes.begin(), config.ngram_sizes.end()) ||
      std::adjacent_find(config.ngram_sizes.begin(),
                         config.ngram_sizes.end()) != config.ngram_sizes.end()) {
    throw FormatError("bad header: n-gram sizes not strictly ascending");
  }

  VectorIndex index(config);
  const std::size_t dim = config.dimension;
  // Grow incrementally so a corrupt count cannot force a huge allocation.
  std::string id;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto len = r.scalar<std::uint16_t>("doc id length");
    id.resize(len);
    r.bytes(id.data(), len, "doc id");
    auto [it, inserted] = index.positions_.try_emplace(id, index.ids_.size());
    if (!inserted) throw FormatError("duplicate doc_id '" + id + "' in index");
    index.ids_.push_back(id);
    index.data_.resize(index.data_.size() + dim);
    r.floats(std::span<float>(index.data_.data() + i * dim, dim), "vector");
  }
  const std::uint32_t expected = r.crc();
  std::uint32_t stored = 0;
  in.read(reinterpret_cast<char*>(&stored), sizeof(stored));
  if (in.gcount() != sizeof(stored)) {
    throw FormatError("index file truncated while reading checksum");
  }
  stored = byteswap_if_needed(stored);
  if (stored != expected) throw FormatError("checksum mismatch");
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError("trailing bytes after checksum");
  }
  return index;
}

void save_index(const VectorIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_index(index, out);
  out.close();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

VectorIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open index '" + path.string() + "'");
  try {
    return read_index(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace numen
