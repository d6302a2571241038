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
#include <gtest/gtest.h>

#include "numen/encoder.hpp"
#include "numen/unicode.hpp"

namespace numen {
namespace {

using Words = std::vector<std::string>;

TEST(Tokenize, Basic) {
  EXPECT_EQ(normalize_and_tokenize("Jon likes Apples."),
            (Words{"jon", "likes", "apples"}));
  EXPECT_EQ(normalize_and_tokenize(""), Words{});
  EXPECT_EQ(normalize_and_tokenize(" ,.;!? \t\n"), Words{});
}

TEST(Tokenize, LetterDigitRuns) {
  // Hyphens and spaces separate; digits stay attached to letters.
  EXPECT_EQ(normalize_and_tokenize("state-of-the-art 7B"),
            (Words{"state", "of", "the", "art", "7b"}));
  EXPECT_EQ(normalize_and_tokenize("don't"), (Words{"don", "t"}));
  EXPECT_EQ(normalize_and_tokenize("a_b"), (Words{"a", "b"}));
}

TEST(Tokenize, UnicodeLettersAndCase) {
  EXPECT_EQ(normalize_and_tokenize("Café ÉCOLE"), (Words{"café", "école"}));
  EXPECT_EQ(normalize_and_tokenize("ΑΘΗΝΑ"), (Words{"αθηνα"}));
  EXPECT_EQ(normalize_and_tokenize("東京タワー"), (Words{"東京タワー"}));
  // Arabic-Indic digits are Nd.
  EXPECT_EQ(normalize_and_tokenize("x١٢"), (Words{"x١٢"}));
  // Symbols and emoji separate.
  EXPECT_EQ(normalize_and_tokenize("a—b\U0001F600c"), (Words{"a", "b", "c"}));
}

TEST(Tokenize, InvalidUtf8IsASeparator) {
  EXPECT_EQ(normalize_and_tokenize("ab\xFF" "cd"), (Words{"ab", "cd"}));
  EXPECT_EQ(normalize_and_tokenize("ab\xE2\x82"), (Words{"ab"}));
}

TEST(Utf8, DecodeEncode) {
  const std::string s = "aé東\U0001F600";
  EXPECT_EQ(unicode::decode_utf8(s), (std::u32string{U'a', 0xE9, 0x6771, 0x1F600}));
  EXPECT_EQ(unicode::encode_utf8(unicode::decode_utf8(s)), s);
}

TEST(Utf8, IllFormed) {
  using unicode::kReplacement;
  // Overlong '/', surrogate, stray continuation, truncated 3-byte sequence.
  EXPECT_EQ(unicode::decode_utf8("\xC0\xAF"),
            (std::u32string{kReplacement, kReplacement}));
  EXPECT_EQ(unicode::decode_utf8("\xED\xA0\x80"),
            (std::u32string{kReplacement, kReplacement, kReplacement}));
  EXPECT_EQ(unicode::decode_utf8("\x80" "a"), (std::u32string{kReplacement, U'a'}));
  EXPECT_EQ(unicode::decode_utf8("\xE6\x9D" "a"), (std::u32string{kReplacement, U'a'}));
}

TEST(Unicode, Classification) {
  EXPECT_TRUE(unicode::is_word_char(U'z'));
  EXPECT_TRUE(unicode::is_word_char(U'5'));
  EXPECT_TRUE(unicode::is_word_char(0x00E9));
  EXPECT_FALSE(unicode::is_word_char(U'^'));
  EXPECT_FALSE(unicode::is_word_char(U'$'));
  EXPECT_FALSE(unicode::is_word_char(U' '));
  EXPECT_FALSE(unicode::is_word_char(0x2014));
  EXPECT_EQ(unicode::to_lower(U'Q'), U'q');
  EXPECT_EQ(unicode::to_lower(0x00C9), 0x00E9U);
  EXPECT_EQ(unicode::to_lower(0x0130), U'i');
  EXPECT_EQ(unicode::to_lower(U'7'), U'7');
}

}  // namespace
}  // namespace numen
