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
// Acceptance runner. Prints one line per criterion:
//   PASS|FAIL|SKIP <n> <name>: <detail> (<seconds>s)
// and exits nonzero if any criterion fails.
//
// Environment:
//   NUMEN_LIMIT_DIR           directory with corpus.jsonl, queries.jsonl and
//                             qrels.tsv (or qrels/test.tsv) of the LIMIT set
//   NUMEN_ACCEPTANCE_MANIFEST throughput manifest path
//                             (default: acceptance_manifest.json)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "numen/encoder.hpp"
#include "numen/eval.hpp"
#include "numen/index.hpp"
#include "numen/ingest.hpp"
#include "numen/log.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace {

using namespace numen;
using Clock = std::chrono::steady_clock;

enum class Status { kPass, kFail, kSkip };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::kPass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::kFail, std::move(d)}; }
Outcome skip(std::string d) { return {Status::kSkip, std::move(d)}; }
Outcome check(bool ok, std::string d) { return {ok ? Status::kPass : Status::kFail, std::move(d)}; }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

constexpr std::uint64_t kSynthSeed = 20260214;

const SynthDataset& synthetic_set() {
  static const SynthDataset data = [] {
    SynthSpec spec;  // 5000 people, 200 queries
    spec.seed = kSynthSeed;
    return generate_synthetic(spec);
  }();
  return data;
}

// 1 ---------------------------------------------------------------------------

Outcome ngram_fidelity() {
  const std::vector<std::string> expected = {"^li", "lik", "ike", "kes", "es$",
                                             "^lik", "like", "ikes", "kes$",
                                             "^like", "likes", "ikes$"};
  const std::vector<std::uint32_t> classes = {3, 3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5};
  const auto grams = extract_ngrams("likes", EncoderConfig{});
  if (grams.size() != expected.size()) {
    return fail("got " + std::to_string(grams.size()) + " n-grams, want 12");
  }
  for (std::size_t i = 0; i < grams.size(); ++i) {
    if (grams[i].bytes != expected[i] || grams[i].length_class != classes[i]) {
      return fail("n-gram " + std::to_string(i) + " is '" + grams[i].bytes + "'");
    }
  }
  return pass("5 trigrams, 4 four-grams, 3 five-grams in order");
}

// 2 ---------------------------------------------------------------------------

Outcome collision_formula() {
  const double p = collision_probability(50, 32768);
  return check(p >= 0.036 && p <= 0.040, "P(50, 32768) = " + fmt("%.6f", p));
}

// 3 ---------------------------------------------------------------------------

std::string random_unicode_text(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "a", "b", "e", "k", "s", "t", "Z", "Q", "0", "7", "\xc3\xa9", "\xc3\x9f", "\xc3\x89",
      "\xd0\xb6", "\xd0\x96", "\xce\xa3", "\xce\xbb", "\xe5\xad\x97", "\xe3\x81\x82",
      "\xd9\xa3", "\xc4\xb0"};
  static const std::vector<std::string> separators = {
      " ", "  ", ", ", ". ", "!", "-", "\t", "\n", "'", "\xe2\x80\x94", "\xf0\x9f\x98\x80", "_"};
  std::string text;
  const int words = static_cast<int>(rng() % 9);
  for (int w = 0; w < words; ++w) {
    if (w > 0 || rng() % 4 == 0) text += separators[rng() % separators.size()];
    const int len = 1 + static_cast<int>(rng() % 9);
    for (int c = 0; c < len; ++c) text += pieces[rng() % pieces.size()];
    if (rng() % 50 == 0) text += "\xff";  // invalid byte decodes to U+FFFD
  }
  return text;
}

EncoderConfig random_config(std::mt19937_64& rng) {
  static const std::vector<std::uint32_t> dims = {1, 2, 3, 17, 64, 1000, 2048, 32768, 65536};
  EncoderConfig c;
  c.dimension = rng() % 4 == 0 ? 1 + static_cast<std::uint32_t>(rng() % 100000)
                               : dims[rng() % dims.size()];
  c.ngram_sizes.clear();
  while (c.ngram_sizes.empty()) {
    for (std::uint32_t n = 1; n <= 7; ++n) {
      if (rng() % 3 == 0) c.ngram_sizes.push_back(n);
    }
  }
  std::shuffle(c.ngram_sizes.begin(), c.ngram_sizes.end(), rng);
  const std::uint32_t smallest = *std::min_element(c.ngram_sizes.begin(), c.ngram_sizes.end());
  c.weight_table.clear();
  std::uniform_real_distribution<double> w(0.05, 10.0);
  for (std::uint32_t n : c.ngram_sizes) {
    if (rng() % 2 == 0) c.weight_table[n] = rng() % 10 == 0 ? 0.0 : w(rng);
  }
  c.weight_table[smallest] = w(rng);  // keeps the table valid
  c.hash_variant = rng() % 2 == 0 ? HashVariant::kCrc32Ieee : HashVariant::kCrc32C;
  return c;
}

std::string shuffled_words(const std::string& text, std::mt19937_64& rng) {
  auto words = normalize_and_tokenize(text);
  std::shuffle(words.begin(), words.end(), rng);
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ; ") + w;
  return out;
}

Outcome encoder_invariants() {
  std::mt19937_64 rng(7);
  constexpr int kTexts = 10000;
  int nondegenerate = 0;
  int oracle_checked = 0;
  std::unique_ptr<Encoder> encoder;
  for (int t = 0; t < kTexts; ++t) {
    if (t % 10 == 0) {
      encoder = std::make_unique<Encoder>(t % 100 == 0 ? EncoderConfig{} : random_config(rng));
    }
    const EncoderConfig& c = encoder->config();
    const std::string text = t % 3 == 0 ? test::random_text(rng, 8) : random_unicode_text(rng);
    const std::string where = "text #" + std::to_string(t) + " [" + c.describe() + "]";

    const DenseVector v = encoder->encode(text);
    const DenseVector again = encoder->encode(text);
    if (v.dimension() != c.dimension || again.dimension() != c.dimension) {
      return fail(where + ": wrong dimension");
    }
    if (std::memcmp(v.components().data(), again.components().data(),
                    v.dimension() * sizeof(float)) != 0) {
      return fail(where + ": re-encode not bit-identical");
    }

    std::set<std::uint32_t> hashed;
    bool any_weight = false;
    for (const auto& word : normalize_and_tokenize(text)) {
      for (const auto& g : encoder->extract_ngrams(word)) {
        const std::uint32_t h = encoder->hash(g);
        if (h >= c.dimension) return fail(where + ": hash index out of range");
        if (encoder->weight(g) > 0) {
          hashed.insert(h);
          any_weight = true;
        }
      }
    }
    for (std::uint32_t i = 0; i < v.dimension(); ++i) {
      if (!(v[i] >= 0.0f)) return fail(where + ": negative component");
      if ((v[i] > 0.0f) != (hashed.count(i) != 0)) {
        return fail(where + ": support differs from hashed n-gram indices");
      }
    }
    if (any_weight) {
      ++nondegenerate;
      if (std::abs(v.norm() - 1.0) > 1e-5) return fail(where + ": norm " + fmt("%.8f", v.norm()));
    } else if (!v.is_zero()) {
      return fail(where + ": degenerate text gave a nonzero vector");
    }

    const DenseVector reordered = encoder->encode(shuffled_words(text, rng));
    for (std::uint32_t i = 0; i < v.dimension(); ++i) {
      if (std::abs(v[i] - reordered[i]) > 1e-6f) return fail(where + ": word order changed it");
    }

    // Default config on ASCII text: compare against the independent pipeline.
    if (c == EncoderConfig{} && t % 3 == 0) {
      const auto ref = oracle::reference_encode_ascii(text, c.dimension);
      for (std::uint32_t i = 0; i < v.dimension(); ++i) {
        const auto it = ref.find(i);
        const double r = it == ref.end() ? 0.0 : it->second;
        if (std::abs(v[i] - r) > 1e-6) return fail(where + ": differs from reference encoder");
      }
      ++oracle_checked;
    }
  }
  return pass(std::to_string(kTexts) + " texts, 1000 configs, " + std::to_string(nondegenerate) +
              " non-degenerate, " + std::to_string(oracle_checked) + " checked against reference");
}

// 4 ---------------------------------------------------------------------------

Outcome search_exactness() {
  std::mt19937_64 rng(4);
  std::size_t ties = 0;
  for (int trial = 0; trial < 100; ++trial) {
    EncoderConfig c;
    c.dimension = 1 + static_cast<std::uint32_t>(rng() % 2048);
    c.hash_variant = rng() % 2 == 0 ? HashVariant::kCrc32Ieee : HashVariant::kCrc32C;
    const auto docs = test::random_documents(rng, 1 + rng() % 200);
    const auto index = build_index(docs, c, 1 + static_cast<unsigned>(rng() % 3));
    std::vector<std::pair<std::string, std::vector<float>>> naive_docs;
    for (std::size_t i = 0; i < index.size(); ++i) {
      const auto r = index.row(i);
      naive_docs.emplace_back(index.doc_id(i), std::vector<float>(r.begin(), r.end()));
    }
    const std::size_t nq = 1 + rng() % 20;
    std::vector<DenseVector> qvecs;
    std::vector<std::vector<float>> qs;
    for (std::size_t q = 0; q < nq; ++q) {
      qvecs.push_back(encode(q % 4 == 0 ? docs[rng() % docs.size()].text
                                        : test::random_text(rng, 4),
                             c));
      const auto comp = qvecs.back().components();
      qs.emplace_back(comp.begin(), comp.end());
    }
    const std::size_t k = 1 + rng() % 250;
    const auto naive = oracle::naive_top_k(naive_docs, qs, k);
    const auto batch = index.top_k_batch(qvecs, k, 2);
    for (std::size_t q = 0; q < nq; ++q) {
      const auto hits = index.top_k(qvecs[q], k);
      const std::string where = "instance " + std::to_string(trial) + " query " +
                                std::to_string(q);
      if (hits.size() != naive[q].size()) return fail(where + ": result count differs");
      if (batch[q] != hits) return fail(where + ": batch differs from single query");
      for (std::size_t r = 0; r < hits.size(); ++r) {
        if (hits[r].doc_id != naive[q][r].id || hits[r].score != naive[q][r].score ||
            hits[r].rank != r + 1) {
          return fail(where + " rank " + std::to_string(r + 1) + ": got " + hits[r].doc_id +
                      ", oracle " + naive[q][r].id);
        }
        if (r > 0 && hits[r].score == hits[r - 1].score) ++ties;
      }
    }
  }
  return pass("100 instances agree with the double-loop oracle, " + std::to_string(ties) +
              " tied adjacent pairs");
}

// 5 ---------------------------------------------------------------------------

Outcome recall_oracle() {
  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Qrels qrels;
    RankedLists lists;
    const int nq = 1 + static_cast<int>(rng() % 30);
    const int pool = 5 + static_cast<int>(rng() % 200);
    for (int q = 0; q < nq; ++q) {
      const std::string qid = "q" + std::to_string(q);
      qrels.set(qid, "d" + std::to_string(rng() % pool), 1 + static_cast<int>(rng() % 3));
      const int judged = static_cast<int>(rng() % 40);
      for (int j = 0; j < judged; ++j) {
        qrels.set(qid, "d" + std::to_string(rng() % pool), static_cast<int>(rng() % 3));
      }
      auto& l = lists[qid];
      const int depth = static_cast<int>(rng() % 150);
      for (int j = 0; j < depth; ++j) l.push_back("d" + std::to_string(rng() % pool));
    }
    std::vector<std::size_t> ks;
    for (std::size_t k : {1, 2, 5, 10, 20, 50, 100, 200}) {
      if (rng() % 2 == 0) ks.push_back(k);
    }
    if (ks.empty()) ks.push_back(1 + rng() % 100);
    const auto report = recall_at_k(lists, qrels, ks);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      double sum = 0.0;
      for (const auto& [qid, l] : lists) {
        const double expected = oracle::set_recall(l, *qrels.find(qid), ks[i]);
        worst = std::max(worst, std::abs(report.per_query.at(qid)[i] - expected));
        sum += expected;
      }
      worst = std::max(worst, std::abs(report.aggregate[i] - sum / static_cast<double>(nq)));
    }
  }
  return check(worst <= 1e-12, "max |difference| = " + fmt("%.3g", worst));
}

// 6 ---------------------------------------------------------------------------

Outcome scaling_shape() {
  const auto& data = synthetic_set();
  const auto docs = to_documents(data.corpus);
  const std::vector<std::uint32_t> dims = {256, 1024, 4096, 16384};
  const std::vector<std::size_t> ks = {10, 100};
  const auto rows = dimension_sweep(docs, data.queries, data.qrels, dims, ks);
  std::vector<double> r10, r100;
  for (const auto& row : rows) (row.k == 10 ? r10 : r100).push_back(row.recall);
  std::string detail = "R@10";
  bool ok = true;
  for (std::size_t i = 0; i < r10.size(); ++i) {
    detail += " " + std::to_string(dims[i]) + ":" + fmt("%.4f", r10[i]);
    if (i > 0 && r10[i] < r10[i - 1] - 0.02) ok = false;
  }
  detail += "; R@100@16384 = " + fmt("%.4f", r100.back());
  if (r100.back() < 0.95) ok = false;
  return check(ok, std::to_string(docs.size()) + " docs, " +
                       std::to_string(data.queries.size()) + " queries; " + detail);
}

// 7 ---------------------------------------------------------------------------

Outcome morphology() {
  EncoderConfig c;
  c.dimension = 32768;
  const auto like = encode("like", c);
  const double likes = cosine_score(like, encode("likes", c));
  const double zebra = cosine_score(like, encode("zebra", c));
  return check(likes > zebra,
               "cos(like,likes) = " + fmt("%.6f", likes) + " > cos(like,zebra) = " +
                   fmt("%.6f", zebra));
}

// 8 ---------------------------------------------------------------------------

Outcome bm25_sanity() {
  const auto& data = synthetic_set();
  const auto docs = to_documents(data.corpus);
  const Bm25Index bm25(docs);
  RankedLists lists;
  for (const auto& q : data.queries) {
    auto& l = lists[q.query_id];
    for (const auto& r : bm25.rank(q.text, 100)) l.push_back(r.doc_id);
  }
  const double r = recall_at_k(lists, data.qrels, 100).at(100);
  return check(r >= 0.90, "BM25 Recall@100 = " + fmt("%.4f", r));
}

// 9 ---------------------------------------------------------------------------

Outcome limit_reproduction() {
  const char* dir_env = std::getenv("NUMEN_LIMIT_DIR");
  if (dir_env == nullptr || *dir_env == '\0') return skip("NUMEN_LIMIT_DIR not set");
  const std::filesystem::path dir = dir_env;
  std::filesystem::path qrels_path = dir / "qrels.tsv";
  if (!std::filesystem::exists(qrels_path)) qrels_path = dir / "qrels" / "test.tsv";
  for (const auto& p : {dir / "corpus.jsonl", dir / "queries.jsonl", qrels_path}) {
    if (!std::filesystem::exists(p)) return skip(p.string() + " not found");
  }
  const auto docs = to_documents(load_corpus(dir / "corpus.jsonl"));
  const Qrels qrels = load_qrels(qrels_path);
  std::vector<QueryRecord> queries;
  for (auto& q : load_queries(dir / "queries.jsonl")) {
    if (qrels.find(q.query_id) != nullptr) queries.push_back(std::move(q));
  }
  const std::vector<std::uint32_t> dims = {512, 1024, 2048, 4096, 8192, 16384, 32768};
  const std::vector<double> published = {21.30, 45.10, 68.80, 83.20, 89.85, 93.05, 93.90};
  const std::vector<std::size_t> ks = {100};
  SweepOptions options;
  options.on_dimension = [](std::uint32_t d, const std::vector<SweepRow>& rows) {
    std::cerr << "  limit d=" << d << " R@100=" << fmt("%.2f", 100 * rows[0].recall) << '\n';
  };
  const auto rows = dimension_sweep(docs, queries, qrels, dims, ks, {}, options);
  bool ok = true;
  std::string detail = std::to_string(docs.size()) + " docs, " + std::to_string(queries.size()) +
                       " queries; R@100";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double got = 100 * rows[i].recall;
    detail += " " + std::to_string(dims[i]) + ":" + fmt("%.2f", got);
    if (std::abs(got - published[i]) > 3.0) {
      ok = false;
      detail += "(want " + fmt("%.2f", published[i]) + ")";
    }
  }
  if (100 * rows.back().recall < 93.0) ok = false;
  return check(ok, detail);
}

// 10 --------------------------------------------------------------------------

Outcome throughput() {
  EncoderConfig c;
  c.dimension = 32768;
  const Encoder encoder(c);

  // Encoding rate over 50,000 documents on one worker. Vectors are discarded
  // after encoding; 50,000 rows at this dimension would not fit in memory here.
  SynthSpec big;
  big.num_people = 50000;
  big.num_queries = 1;
  big.seed = kSynthSeed;
  const auto big_docs = to_documents(generate_synthetic(big).corpus);
  double checksum = 0.0;
  auto t0 = Clock::now();
  for (const auto& d : big_docs) checksum += encoder.encode(d.text)[0];
  const double encode_s = seconds_since(t0);
  const double docs_per_sec = static_cast<double>(big_docs.size()) / encode_s;

  // Query rate: single-threaded top-100 over the 5,000-document index.
  const auto& data = synthetic_set();
  const auto docs = to_documents(data.corpus);
  t0 = Clock::now();
  const auto index = build_index(docs, c, 1);
  const double build_s = seconds_since(t0);
  t0 = Clock::now();
  std::size_t hits = 0;
  for (const auto& q : data.queries) hits += index.top_k(encoder.encode(q.text), 100).size();
  const double search_s = seconds_since(t0);
  const double qps = static_cast<double>(data.queries.size()) / search_s;

  nlohmann::ordered_json m;
  m["command"] = "acceptance-throughput";
  m["config"] = {{"dimension", c.dimension}, {"ngram_sizes", c.ngram_sizes},
                 {"hash", to_string(c.hash_variant)}};
  m["parameters"] = {{"encode_documents", big_docs.size()},
                     {"index_documents", docs.size()},
                     {"queries", data.queries.size()},
                     {"k", 100},
                     {"threads", 1},
                     {"seed", kSynthSeed}};
  m["timings"] = {{"encode_seconds", encode_s},
                  {"index_docs_per_sec", docs_per_sec},
                  {"index_build_seconds", build_s},
                  {"index_build_docs_per_sec", static_cast<double>(docs.size()) / build_s},
                  {"search_seconds", search_s},
                  {"query_qps", qps}};
  m["reference"] = {{"docs_per_sec", 1300}, {"qps", 15}};
  const char* path_env = std::getenv("NUMEN_ACCEPTANCE_MANIFEST");
  const std::string path = path_env != nullptr && *path_env != '\0' ? path_env
                                                                    : "acceptance_manifest.json";
  std::ofstream out(path, std::ios::trunc);
  out << m.dump(2) << '\n';
  if (!out) return fail("cannot write " + path);
  (void)checksum;
  (void)hits;
  return pass(fmt("%.0f", docs_per_sec) + " docs/sec (50,000 docs), " + fmt("%.1f", qps) +
              " qps (5,000 docs, k=100); reference 1300 docs/sec, 15 qps; written to " + path);
}

}  // namespace

int main() {
  // Warnings (e.g. skipped queries) would interleave with the result lines.
  set_warning_handler([](std::string_view m) { std::cerr << "warning: " << m << '\n'; });

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"ngram-fidelity", ngram_fidelity},
      {"collision-formula", collision_formula},
      {"encoder-invariants", encoder_invariants},
      {"search-exactness", search_exactness},
      {"recall-oracle", recall_oracle},
      {"scaling-shape", scaling_shape},
      {"morphology", morphology},
      {"bm25-sanity", bm25_sanity},
      {"limit-reproduction", limit_reproduction},
      {"throughput-report", throughput},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::kPass ? "PASS" : o.status == Status::kFail ? "FAIL" : "SKIP";
    if (o.status == Status::kFail) ++failures;
    std::cout << tag << ' ' << (i + 1) << ' ' << criteria[i].first << ": " << o.detail << " ("
              << fmt("%.2f", seconds_since(start)) << "s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
