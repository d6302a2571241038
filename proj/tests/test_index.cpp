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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "numen/error.hpp"
#include "numen/index.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace numen {
namespace {

EncoderConfig with_dim(std::uint32_t d) {
  EncoderConfig c;
  c.dimension = d;
  return c;
}

std::vector<Document> fruit_docs() {
  return {{"d1", "apples"}, {"d2", "bananas"}, {"d3", "cherries"}};
}

TEST(BuildIndex, EmptyAndSmall) {
  const auto empty = build_index({}, with_dim(16));
  EXPECT_EQ(empty.size(), 0U);
  EXPECT_TRUE(empty.top_k(DenseVector(16), 5).empty());

  const auto docs = fruit_docs();
  const auto index = build_index(docs, with_dim(4096));
  ASSERT_EQ(index.size(), 3U);
  for (std::size_t i = 0; i < index.size(); ++i) {
    EXPECT_EQ(index.doc_id(i), docs[i].id);
    EXPECT_NEAR(index.vector(i).norm(), 1.0, 1e-5);
    EXPECT_EQ(index.vector(i), encode(docs[i].text, with_dim(4096)));
  }
  EXPECT_EQ(index.find("d2"), 1U);
  EXPECT_EQ(index.find("nope"), 3U);
}

TEST(BuildIndex, DuplicateIdNamed) {
  std::vector<Document> docs = {{"a", "x"}, {"b", "y"}, {"a", "z"}};
  try {
    build_index(docs, with_dim(16));
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("'a'"), std::string::npos);
  }
}

TEST(TopK, SelfRetrievalAndCounts) {
  const auto docs = fruit_docs();
  const auto index = build_index(docs, with_dim(4096));
  const auto q = encode("bananas", with_dim(4096));
  const auto hits = index.top_k(q, 1);
  ASSERT_EQ(hits.size(), 1U);
  EXPECT_EQ(hits[0].doc_id, "d2");
  EXPECT_NEAR(hits[0].score, 1.0, 1e-5);
  EXPECT_EQ(hits[0].rank, 1U);

  const auto all = index.top_k(q, 100);
  ASSERT_EQ(all.size(), 3U);
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].rank, i + 1);
  for (std::size_t i = 1; i < all.size(); ++i) {
    EXPECT_GE(all[i - 1].score, all[i].score);
  }
  EXPECT_THROW(index.top_k(q, 0), InvalidArgument);
  EXPECT_THROW(index.top_k(DenseVector(8), 1), DimensionMismatch);
}

TEST(TopK, TiesOrderedByDocId) {
  std::vector<Document> docs = {
      {"zeta", "same words"}, {"alpha", "same words"}, {"mid", "other"}};
  const auto index = build_index(docs, with_dim(1024));
  const auto hits = index.top_k(encode("same words", with_dim(1024)), 3);
  ASSERT_EQ(hits.size(), 3U);
  EXPECT_EQ(hits[0].doc_id, "alpha");
  EXPECT_EQ(hits[1].doc_id, "zeta");
  EXPECT_EQ(hits[0].score, hits[1].score);
}

TEST(TopK, MatchesNaiveOracleAndIsPermutationInvariant) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t d = 8 + static_cast<std::uint32_t>(rng() % 256);
    auto docs = test::random_documents(rng, 1 + rng() % 60);
    const auto index = build_index(docs, with_dim(d));
    std::vector<std::pair<std::string, std::vector<float>>> naive_docs;
    for (std::size_t i = 0; i < index.size(); ++i) {
      auto r = index.row(i);
      naive_docs.emplace_back(index.doc_id(i), std::vector<float>(r.begin(), r.end()));
    }
    std::vector<std::vector<float>> qs;
    std::vector<DenseVector> qvecs;
    for (int i = 0; i < 5; ++i) {
      qvecs.push_back(encode(test::random_text(rng, 4), with_dim(d)));
      auto c = qvecs.back().components();
      qs.emplace_back(c.begin(), c.end());
    }
    const std::size_t k = 1 + rng() % 20;
    const auto naive = oracle::naive_top_k(naive_docs, qs, k);
    std::shuffle(docs.begin(), docs.end(), rng);
    const auto permuted = build_index(docs, with_dim(d));
    for (std::size_t qi = 0; qi < qvecs.size(); ++qi) {
      const auto hits = index.top_k(qvecs[qi], k);
      ASSERT_EQ(hits.size(), naive[qi].size());
      for (std::size_t r = 0; r < hits.size(); ++r) {
        EXPECT_EQ(hits[r].doc_id, naive[qi][r].id);
        EXPECT_EQ(hits[r].score, naive[qi][r].score);
      }
      EXPECT_EQ(permuted.top_k(qvecs[qi], k), hits);
    }
  }
}

TEST(TopK, BatchMatchesSequential) {
  std::mt19937_64 rng(5);
  const auto docs = test::random_documents(rng, 80);
  const auto index = build_index(docs, with_dim(512), 3);
  EXPECT_EQ(index, build_index(docs, with_dim(512), 1));
  std::vector<DenseVector> qs;
  for (int i = 0; i < 17; ++i) qs.push_back(encode(test::random_text(rng, 3), with_dim(512)));
  const auto batch = index.top_k_batch(qs, 7, 4);
  ASSERT_EQ(batch.size(), qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) EXPECT_EQ(batch[i], index.top_k(qs[i], 7));
}

TEST(IndexCompat, ConfigMismatch) {
  const auto index = build_index(fruit_docs(), with_dim(512));
  EXPECT_NO_THROW(index.check_compatible(with_dim(512)));
  EXPECT_THROW(index.check_compatible(with_dim(1024)), DimensionMismatch);
  EncoderConfig c = with_dim(512);
  c.hash_variant = HashVariant::kCrc32C;
  EXPECT_THROW(index.check_compatible(c), DimensionMismatch);
}

TEST(IndexFile, RoundTripBitExact) {
  EncoderConfig c = with_dim(300);
  c.hash_variant = HashVariant::kCrc32C;
  c.ngram_sizes = {2, 3, 6};
  c.weight_table = {{2, 0.5}, {3, 1.0}, {6, 7.25}};
  const auto index = build_index(fruit_docs(), c);
  test::TempDir dir;
  save_index(index, dir.path() / "x.numn");
  const auto loaded = load_index(dir.path() / "x.numn");
  EXPECT_EQ(loaded, index);
  EXPECT_EQ(loaded.config(), index.config());
}

TEST(IndexFile, HeaderLayout) {
  const std::vector<Document> docs = {{"ab", "x"}};
  const auto index = build_index(docs, with_dim(4));
  std::ostringstream os;
  write_index(index, os);
  const std::string bytes = os.str();
  // magic + version + dim + count + variant + (4 + 3*4) + (4 + 3*12)
  //   + entry (2 + 2 + 4*4) + crc
  ASSERT_EQ(bytes.size(), 4U + 4 + 4 + 8 + 1 + 16 + 40 + 20 + 4);
  EXPECT_EQ(bytes.substr(0, 4), "NUMN");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 1U);  // version, LE
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 4U);  // dimension
  EXPECT_EQ(static_cast<unsigned char>(bytes[12]), 1U);  // count
  EXPECT_EQ(static_cast<unsigned char>(bytes[20]), 0U);  // crc32-ieee
  const std::uint32_t stored =
      static_cast<unsigned char>(bytes[bytes.size() - 4]) |
      static_cast<unsigned char>(bytes[bytes.size() - 3]) << 8 |
      static_cast<unsigned char>(bytes[bytes.size() - 2]) << 16 |
      static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[bytes.size() - 1])) << 24;
  EXPECT_EQ(stored, oracle::zlib_crc32(bytes.substr(0, bytes.size() - 4)));
}

std::string serialized(const VectorIndex& index) {
  std::ostringstream os;
  write_index(index, os);
  return os.str();
}

std::string read_error(const std::string& bytes) {
  std::istringstream is(bytes);
  try {
    read_index(is);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(IndexFile, RejectsCorruption) {
  const std::string good = serialized(build_index(fruit_docs(), with_dim(64)));
  std::string bad = good;
  bad[0] = 'X';
  EXPECT_NE(read_error(bad).find("magic"), std::string::npos);
  bad = good;
  bad[4] = 9;
  EXPECT_NE(read_error(bad).find("version"), std::string::npos);
  bad = good;
  bad[bad.size() - 20] ^= 0x01;  // inside the last vector
  EXPECT_NE(read_error(bad).find("checksum"), std::string::npos);
  EXPECT_NE(read_error(good.substr(0, good.size() - 100)).find("truncated"),
            std::string::npos);
  EXPECT_NE(read_error(good.substr(0, 10)).find("truncated"), std::string::npos);
  EXPECT_NE(read_error(good + "x").find("trailing"), std::string::npos);
}

TEST(IndexFile, LoadedIndexRejectsWrongDimensionQuery) {
  const auto index = build_index(fruit_docs(), with_dim(512));
  test::TempDir dir;
  save_index(index, dir.path() / "i.numn");
  const auto loaded = load_index(dir.path() / "i.numn");
  EXPECT_THROW(loaded.top_k(encode("apples", with_dim(1024)), 3), DimensionMismatch);
}

}  // namespace
}  // namespace numen
