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

#include <fstream>
#include <sstream>

#include "numen/error.hpp"
#include "numen/eval.hpp"
#include "numen/ingest.hpp"
#include "test_util.hpp"

namespace numen {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Synth, SmallestViable) {
  SynthSpec spec;
  spec.num_people = 2;
  spec.num_attributes = 2;
  spec.attributes_per_person = 1;
  spec.attributes_per_query = 1;
  spec.num_queries = 5;
  spec.seed = 17;
  const auto data = generate_synthetic(spec);
  EXPECT_EQ(data.corpus.size(), 2U);
  ASSERT_EQ(data.queries.size(), 5U);
  for (const auto& q : data.queries) EXPECT_GE(data.qrels.relevant_count(q.query_id), 1U);
}

TEST(Synth, ShapeOfRecords) {
  SynthSpec spec;
  spec.num_people = 50;
  spec.num_attributes = 30;
  spec.attributes_per_person = 4;
  spec.attributes_per_query = 2;
  spec.num_queries = 20;
  spec.seed = 1;
  const auto data = generate_synthetic(spec);
  for (const auto& d : data.corpus) {
    EXPECT_NE(d.text.find(" likes "), std::string::npos);
    const auto words = normalize_and_tokenize(d.text);
    // first name, last name, "likes", 4 attributes
    EXPECT_EQ(words.size(), 7U) << d.text;
  }
  for (const auto& q : data.queries) {
    EXPECT_EQ(q.text.rfind("who likes ", 0), 0U);
    const auto qwords = normalize_and_tokenize(q.text);
    ASSERT_EQ(qwords.size(), 4U);
    // Every relevant person mentions both attributes; no other person does.
    for (const auto& d : data.corpus) {
      const auto words = normalize_and_tokenize(d.text);
      const bool holds =
          std::find(words.begin() + 3, words.end(), qwords[2]) != words.end() &&
          std::find(words.begin() + 3, words.end(), qwords[3]) != words.end();
      const auto* j = data.qrels.find(q.query_id);
      ASSERT_NE(j, nullptr);
      EXPECT_EQ(holds, j->count(d.doc_id) == 1) << q.text << " / " << d.text;
    }
  }
}

TEST(Synth, DeterministicAndSeedSensitive) {
  SynthSpec spec;
  spec.num_people = 300;
  spec.num_attributes = 100;
  spec.num_queries = 30;
  spec.seed = 5;
  test::TempDir a;
  test::TempDir b;
  save_dataset(a.path(), generate_synthetic(spec));
  save_dataset(b.path(), generate_synthetic(spec));
  for (const char* f : {"corpus.jsonl", "queries.jsonl", "qrels.tsv"}) {
    EXPECT_EQ(slurp(a.path() / f), slurp(b.path() / f)) << f;
  }
  spec.seed = 6;
  EXPECT_NE(generate_synthetic(spec).corpus, load_dataset(a.path()).corpus);
}

TEST(Synth, RoundTripThroughDiskFormats) {
  SynthSpec spec;
  spec.num_people = 200;
  spec.num_attributes = 80;
  spec.attributes_per_query = 1;
  spec.num_queries = 25;
  spec.seed = 8;
  const auto data = generate_synthetic(spec);
  test::TempDir dir;
  save_dataset(dir.path(), data);
  const auto back = load_dataset(dir.path());
  EXPECT_EQ(back.corpus, data.corpus);
  EXPECT_EQ(back.queries, data.queries);
  EXPECT_EQ(back.qrels, data.qrels);
}

TEST(Synth, InvalidAndInfeasibleSpecs) {
  SynthSpec spec;
  spec.num_people = 10;
  spec.num_attributes = 3;
  spec.attributes_per_person = 4;
  EXPECT_THROW(generate_synthetic(spec), InvalidArgument);
  spec.num_people = 0;
  spec.attributes_per_person = 1;
  EXPECT_THROW(generate_synthetic(spec), InvalidArgument);
  // Nobody can hold 3 attributes when each person holds only 1.
  spec.num_people = 10;
  spec.num_attributes = 5;
  spec.attributes_per_person = 1;
  spec.attributes_per_query = 3;
  EXPECT_THROW(generate_synthetic(spec), InvalidArgument);
}

}  // namespace
}  // namespace numen
