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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "numen/encoder.hpp"
#include "numen/error.hpp"
#include "oracles.hpp"

namespace numen {
namespace {

std::vector<std::string> grams_of(const std::vector<Ngram>& grams,
                                  std::uint32_t n) {
  std::vector<std::string> out;
  for (const auto& g : grams) {
    if (g.length_class == n) out.push_back(g.bytes);
  }
  return out;
}

EncoderConfig with_dim(std::uint32_t d) {
  EncoderConfig c;
  c.dimension = d;
  return c;
}

TEST(EncoderConfig, DefaultsAndValidation) {
  EncoderConfig c;
  EXPECT_EQ(c.dimension, 32768U);
  EXPECT_EQ(c.ngram_sizes, (std::vector<std::uint32_t>{3, 4, 5}));
  EXPECT_EQ(c.hash_variant, HashVariant::kCrc32Ieee);
  EXPECT_NO_THROW(c.validate());

  EncoderConfig bad = c;
  bad.dimension = 0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.ngram_sizes = {0, 3};
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.weight_table = {{3, 0.0}, {4, 0.0}};
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.weight_table[4] = -1.0;
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.ngram_sizes = {2, 3};  // no weight for length 2
  EXPECT_THROW(bad.validate(), ConfigError);
  bad = c;
  bad.ngram_sizes.clear();
  EXPECT_THROW(bad.validate(), ConfigError);
}

TEST(EncoderConfig, NormalizedSortsSizes) {
  EncoderConfig c;
  c.ngram_sizes = {5, 3, 4, 3};
  EXPECT_EQ(c.normalized().ngram_sizes, (std::vector<std::uint32_t>{3, 4, 5}));
  EXPECT_EQ(c.normalized().describe(),
            "dim=32768 ngrams=3,4,5 weights=3:1,4:5,5:10 hash=crc32-ieee");
}

TEST(ExtractNgrams, LikesExample) {
  const auto grams = extract_ngrams("likes", EncoderConfig{});
  ASSERT_EQ(grams.size(), 12U);
  EXPECT_EQ(grams_of(grams, 3),
            (std::vector<std::string>{"^li", "lik", "ike", "kes", "es$"}));
  EXPECT_EQ(grams_of(grams, 4),
            (std::vector<std::string>{"^lik", "like", "ikes", "kes$"}));
  EXPECT_EQ(grams_of(grams, 5),
            (std::vector<std::string>{"^like", "likes", "ikes$"}));
  // Grouped by ascending n.
  EXPECT_TRUE(std::is_sorted(grams.begin(), grams.end(),
                             [](const Ngram& a, const Ngram& b) {
                               return a.length_class < b.length_class;
                             }));
}

TEST(ExtractNgrams, ShortWords) {
  const auto a = extract_ngrams("a", EncoderConfig{});
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0], (Ngram{"^a$", 3}));

  // "^aaa$": duplicates are kept as separate occurrences.
  const auto aaa = extract_ngrams("aaa", EncoderConfig{});
  EXPECT_EQ(aaa.size(), 6U);
  EXPECT_EQ(grams_of(aaa, 3), (std::vector<std::string>{"^aa", "aaa", "aa$"}));
  EXPECT_EQ(grams_of(aaa, 4), (std::vector<std::string>{"^aaa", "aaa$"}));
  EXPECT_EQ(grams_of(aaa, 5), (std::vector<std::string>{"^aaa$"}));

  const auto aa = extract_ngrams("aa", EncoderConfig{});
  EXPECT_EQ(grams_of(aa, 4), (std::vector<std::string>{"^aa$"}));
  EXPECT_TRUE(grams_of(aa, 5).empty());

  const auto repeated = extract_ngrams("aaaaa", EncoderConfig{});
  EXPECT_EQ(std::count(repeated.begin(), repeated.end(), Ngram{"aaa", 3}), 3);
}

TEST(ExtractNgrams, WindowsSlideOverCodePoints) {
  const auto grams = extract_ngrams("café", EncoderConfig{});
  EXPECT_EQ(grams_of(grams, 3),
            (std::vector<std::string>{"^ca", "caf", "afé", "fé$"}));
  EXPECT_EQ(grams.size(), 4U + 3U + 2U);
}

TEST(ExtractNgrams, EmptyWordRejected) {
  EXPECT_THROW(extract_ngrams("", EncoderConfig{}), InvalidArgument);
}

TEST(HashNgram, RangeAndReference) {
  EXPECT_EQ(hash_ngram(Ngram{"^li", 3}, with_dim(1)), 0U);
  // zlib.crc32(b"^li") % 32768
  EXPECT_EQ(hash_ngram(Ngram{"^li", 3}, with_dim(32768)), 10239U);
  EXPECT_EQ(hash_ngram(Ngram{"^li", 3}, with_dim(32768)),
            oracle::zlib_crc32("^li") % 32768);
  EncoderConfig c = with_dim(32768);
  c.hash_variant = HashVariant::kCrc32C;
  EXPECT_EQ(hash_ngram(Ngram{"^li", 3}, c), oracle::bitwise_crc32c("^li") % 32768);
  EXPECT_EQ(hash_ngram(Ngram{"likes", 5}, with_dim(32768)),
            hash_ngram(Ngram{"likes", 5}, with_dim(32768)));
}

TEST(HashNgram, FuzzedRangeOverRandomBytes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const std::uint32_t d = 1 + static_cast<std::uint32_t>(rng() % 70000);
    std::string bytes(1 + rng() % 12, '\0');
    for (char& ch : bytes) ch = static_cast<char>(rng() & 0xFF);
    Encoder enc(with_dim(d));
    EXPECT_LT(enc.hash(bytes), d);
  }
}

TEST(NgramWeight, Table) {
  const EncoderConfig c;
  EXPECT_EQ(ngram_weight(Ngram{"^li", 3}, c), 1.0);
  EXPECT_EQ(ngram_weight(Ngram{"^lik", 4}, c), 5.0);
  EXPECT_EQ(ngram_weight(Ngram{"^like", 5}, c), 10.0);
  EXPECT_EQ(ngram_weight(Ngram{"^likes$", 7}, c), 10.0);
  EXPECT_THROW(ngram_weight(Ngram{"^a", 2}, c), ConfigError);
}

TEST(NgramWeight, CustomSizesUseStepFunction) {
  EncoderConfig c;
  c.ngram_sizes = {3, 7};
  const auto grams = extract_ngrams("abcdef", c);
  EXPECT_EQ(grams_of(grams, 7).size(), 2U);  // "^abcdef$" has 8 code points
  Encoder enc(c);
  EXPECT_EQ(enc.weight(7), 10.0);
  EXPECT_EQ(enc.weight(100), 10.0);

  EncoderConfig gap;
  gap.weight_table = {{3, 1.0}, {6, 4.0}};
  Encoder g(gap);
  EXPECT_EQ(g.weight(5), 1.0);
  EXPECT_EQ(g.weight(6), 4.0);
}

TEST(Encode, EmptyTextIsZeroVector) {
  const auto v = encode("", with_dim(64));
  EXPECT_EQ(v.dimension(), 64U);
  EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(encode("  ...  ", with_dim(64)).is_zero());
}

TEST(Encode, LikesMassAndSparsity) {
  Encoder enc(with_dim(32768));
  EncodeStats stats;
  const auto v = enc.encode("likes", &stats);
  EXPECT_EQ(stats.ngram_count, 12U);
  EXPECT_LE(stats.nonzero_count, 12U);
  EXPECT_NEAR(v.norm(), 1.0, 1e-5);
  // 5*1 + 4*5 + 3*10 = 55 before saturation.
  double mass = 0.0;
  for (const auto& h : enc.hashed_ngrams("likes")) mass += h.weight;
  EXPECT_EQ(mass, 55.0);
}

TEST(Encode, MatchesAsciiReferencePipeline) {
  const std::vector<std::string> texts = {
      "likes", "Jon likes Apples.", "who likes quokkas and apples?",
      "aaaa aaaa aaaa", "The quick brown fox jumps over the lazy dog 42 times"};
  for (std::uint32_t d : {7U, 512U, 32768U}) {
    Encoder enc(with_dim(d));
    for (const auto& t : texts) {
      const auto v = enc.encode(t);
      const auto ref = oracle::reference_encode_ascii(t, d);
      for (std::uint32_t i = 0; i < d; ++i) {
        auto it = ref.find(i);
        const double expected = it == ref.end() ? 0.0 : it->second;
        ASSERT_NEAR(v[i], expected, 1e-6) << t << " d=" << d << " i=" << i;
      }
    }
  }
}

TEST(Encode, MorphologyAndDisjointWords) {
  const EncoderConfig c = with_dim(32768);
  const double like_likes = cosine_score(encode("like", c), encode("likes", c));
  // Hand evaluation of the shared n-grams (^li, lik, ike @1; ^lik, like @5;
  // ^like @10) and the Python/zlib reference agree on 0.497351.
  EXPECT_NEAR(like_likes, 0.4973512265, 1e-6);
  EXPECT_GT(like_likes, cosine_score(encode("like", c), encode("zebra", c)));

  // No zzzz/qqqq n-gram shares a bucket under the reference CRC.
  std::set<std::uint32_t> za;
  std::set<std::uint32_t> qa;
  for (const auto& g : extract_ngrams("zzzz", c)) {
    za.insert(oracle::zlib_crc32(g.bytes) % 32768);
  }
  for (const auto& g : extract_ngrams("qqqq", c)) {
    qa.insert(oracle::zlib_crc32(g.bytes) % 32768);
  }
  std::vector<std::uint32_t> shared;
  std::set_intersection(za.begin(), za.end(), qa.begin(), qa.end(),
                        std::back_inserter(shared));
  ASSERT_TRUE(shared.empty());
  EXPECT_EQ(cosine_score(encode("zzzz", c), encode("qqqq", c)), 0.0);
}

TEST(Encode, HashedPathIsBitIdentical) {
  Encoder enc(with_dim(4096));
  const std::string t = "Vexo Ralu likes mipota, zekaru, dobin.";
  EXPECT_EQ(Encoder::encode_hashed(enc.hashed_ngrams(t), 4096), enc.encode(t));
  EncoderConfig other = enc.config();
  other.dimension = 1000;
  EXPECT_EQ(Encoder::encode_hashed(enc.hashed_ngrams(t), 1000),
            Encoder(other).encode(t));
}

TEST(Encode, RepetitionSaturatesLogarithmically) {
  // Pre-normalization peak of "kiwi" x k is log(1 + 10k) when the heaviest
  // n-gram has its own bucket.
  Encoder enc(with_dim(32768));
  double prev = 0.0;
  double first = 0.0;
  for (int k = 1; k <= 6; ++k) {
    std::string t;
    for (int i = 0; i < k; ++i) t += "kiwi ";
    double peak = 0.0;
    std::map<std::uint32_t, double> mass;
    for (const auto& h : enc.hashed_ngrams(t)) mass[h.crc % 32768] += h.weight;
    for (const auto& [i, m] : mass) peak = std::max(peak, std::log1p(m));
    EXPECT_GT(peak, prev);
    if (k == 1) first = peak;
    if (k > 1) EXPECT_LT(peak, first * k);
    EXPECT_NEAR(peak, std::log1p(10.0 * k), 1e-12);
    prev = peak;
  }
}

TEST(CosineScore, Basics) {
  const EncoderConfig c = with_dim(1024);
  const auto v = encode("abc", c);
  EXPECT_NEAR(cosine_score(v, v), 1.0, 1e-5);
  EXPECT_EQ(cosine_score(v, DenseVector(1024)), 0.0);
  EXPECT_THROW(cosine_score(v, DenseVector(512)), DimensionMismatch);
}

TEST(Encode, ConcurrentEncodesAgree) {
  Encoder enc(with_dim(2048));
  const std::string t = "concurrency is a pure function here";
  const auto expected = enc.encode(t);
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 0);
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&, w] {
      bool good = true;
      for (int i = 0; i < 200; ++i) good = good && enc.encode(t) == expected;
      ok[w] = good;
    });
  }
  for (auto& th : pool) th.join();
  EXPECT_EQ(std::count(ok.begin(), ok.end(), 1), 4);
}

}  // namespace
}  // namespace numen
