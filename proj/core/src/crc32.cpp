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
#include "numen/crc32.hpp"

#include <array>
#include <cstring>
#include <string>

#include "numen/error.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define NUMEN_HAVE_SSE42_PATH 1
#include <nmmintrin.h>
#endif

namespace numen {
namespace {

using Table = std::array<std::array<std::uint32_t, 256>, 4>;

constexpr Table make_table(std::uint32_t poly) {
  Table t{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t c = i;
    for (int k = 0; k < 8; ++k) c = (c & 1U) ? (c >> 1) ^ poly : c >> 1;
    t[0][i] = c;
  }
  for (std::uint32_t i = 0; i < 256; ++i) {
    for (int s = 1; s < 4; ++s) {
      t[s][i] = (t[s - 1][i] >> 8) ^ t[0][t[s - 1][i] & 0xFFU];
    }
  }
  return t;
}

constexpr Table kIeeeTable = make_table(0xEDB88320U);
constexpr Table kCastagnoliTable = make_table(0x82F63B78U);

// Slice-by-4 over the reflected register; crc is pre-inverted.
std::uint32_t update_table(const Table& t, std::uint32_t crc,
                           const unsigned char* p, std::size_t n) {
  while (n >= 4) {
    std::uint32_t word = static_cast<std::uint32_t>(p[0]) |
                         static_cast<std::uint32_t>(p[1]) << 8 |
                         static_cast<std::uint32_t>(p[2]) << 16 |
                         static_cast<std::uint32_t>(p[3]) << 24;
    crc ^= word;
    crc = t[3][crc & 0xFFU] ^ t[2][(crc >> 8) & 0xFFU] ^
          t[1][(crc >> 16) & 0xFFU] ^ t[0][crc >> 24];
    p += 4;
    n -= 4;
  }
  while (n-- > 0) crc = (crc >> 8) ^ t[0][(crc ^ *p++) & 0xFFU];
  return crc;
}

#ifdef NUMEN_HAVE_SSE42_PATH
__attribute__((target("sse4.2"))) std::uint32_t update_sse42(
    std::uint32_t crc, const unsigned char* p, std::size_t n) {
  std::uint64_t c = crc;
  while (n >= 8) {
    std::uint64_t word;
    std::memcpy(&word, p, 8);
    c = _mm_crc32_u64(c, word);
    p += 8;
    n -= 8;
  }
  auto c32 = static_cast<std::uint32_t>(c);
  while (n-- > 0) c32 = _mm_crc32_u8(c32, *p++);
  return c32;
}

bool detect_sse42() { return __builtin_cpu_supports("sse4.2"); }
#endif

std::uint32_t update_raw(HashVariant variant, std::uint32_t crc,
                         const unsigned char* p, std::size_t n) {
  if (variant == HashVariant::kCrc32C) {
#ifdef NUMEN_HAVE_SSE42_PATH
    static const bool hw = detect_sse42();
    if (hw) return update_sse42(crc, p, n);
#endif
    return update_table(kCastagnoliTable, crc, p, n);
  }
  return update_table(kIeeeTable, crc, p, n);
}

}  // namespace

std::string_view to_string(HashVariant variant) {
  switch (variant) {
    case HashVariant::kCrc32Ieee:
      return "crc32-ieee";
    case HashVariant::kCrc32C:
      return "crc32-c";
  }
  return "unknown";
}

HashVariant parse_hash_variant(std::string_view name) {
  std::string lower(name);
  for (char& ch : lower) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  if (lower == "crc32" || lower == "crc32-ieee" || lower == "ieee") {
    return HashVariant::kCrc32Ieee;
  }
  if (lower == "crc32c" || lower == "crc32-c" || lower == "castagnoli") {
    return HashVariant::kCrc32C;
  }
  throw ConfigError("unknown hash variant '" + std::string(name) +
                    "' (expected crc32-ieee or crc32-c)");
}

std::uint32_t crc32_update(HashVariant variant, std::uint32_t crc,
                           std::string_view bytes) {
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  return ~update_raw(variant, ~crc, p, bytes.size());
}

std::uint32_t crc32(HashVariant variant, std::string_view bytes) {
  return crc32_update(variant, 0, bytes);
}

std::uint32_t crc32(HashVariant variant, std::span<const std::uint8_t> bytes) {
  return ~update_raw(variant, 0xFFFFFFFFU, bytes.data(), bytes.size());
}

bool crc32c_hardware_available() {
#ifdef NUMEN_HAVE_SSE42_PATH
  static const bool hw = detect_sse42();
  return hw;
#else
  return false;
#endif
}

}  // namespace numen
