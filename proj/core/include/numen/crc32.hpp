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
#include <span>
#include <string_view>

namespace numen {

/// Which 32-bit CRC polynomial to use for n-gram hashing.
enum class HashVariant : std::uint8_t {
  kCrc32Ieee = 0,  // reflected 0xEDB88320 (zlib, Ethernet, PNG)
  kCrc32C = 1,     // Castagnoli, reflected 0x82F63B78 (iSCSI, SSE4.2)
};

std::string_view to_string(HashVariant variant);

// Parses "crc32", "crc32-ieee", "ieee", "crc32c", "crc32-c", "castagnoli".
// Throws ConfigError on anything else.
HashVariant parse_hash_variant(std::string_view name);

/// Standard CRC: init 0xFFFFFFFF, reflected, final xor 0xFFFFFFFF.
/// crc32(variant, "123456789") is 0xCBF43926 for IEEE and 0xE3069283 for C.
std::uint32_t crc32(HashVariant variant, std::span<const std::uint8_t> bytes);
std::uint32_t crc32(HashVariant variant, std::string_view bytes);

/// Incremental form: feed the previous return value back in as `crc`
/// (start from 0). crc32_update(v, crc32_update(v, 0, a), b) == crc32(v, a+b).
std::uint32_t crc32_update(HashVariant variant, std::uint32_t crc,
                           std::string_view bytes);

// True when CRC32-C is computed with the SSE4.2 crc32 instruction.
bool crc32c_hardware_available();

}  // namespace numen
