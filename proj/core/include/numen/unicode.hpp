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
#include <string>
#include <string_view>
#include <vector>

namespace numen::unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes UTF-8 into code points. Ill-formed sequences (overlongs,
/// surrogates, truncated or stray continuation bytes) decode to U+FFFD, one
/// per maximal invalid subpart.
std::u32string decode_utf8(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

/// Letters (any L* category) and decimal digits (Nd).
bool is_word_char(char32_t cp);

/// Simple one-to-one lowercase mapping; identity when none exists.
char32_t to_lower(char32_t cp);

}  // namespace numen::unicode
