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

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <bit>

#include "CLI11.hpp"
#include "manifest.hpp"
#include "numen/error.hpp"
#include "numen/eval.hpp"
#include "numen/index.hpp"
#include "numen/ingest.hpp"
#include "numen/log.hpp"
#include "numen/parallel.hpp"

namespace numen::cli {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma - start);
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item.empty() || item[0] == '-') throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw ConfigError(std::string("invalid ") + what + " list '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "1,5,10" pairs positionally with the n-gram sizes; "3:1,4:5,5:10" is
// explicit.
std::map<std::uint32_t, double> parse_weights(const std::string& text,
                                              const std::vector<std::uint32_t>& sizes) {
  std::map<std::uint32_t, double> table;
  std::vector<std::string> items;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    items.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const bool explicit_keys = text.find(':') != std::string::npos;
  if (!explicit_keys && items.size() != sizes.size()) {
    throw ConfigError("--weights has " + std::to_string(items.size()) +
                      " values for " + std::to_string(sizes.size()) +
                      " n-gram sizes (use len:weight pairs to decouple)");
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    try {
      std::size_t used = 0;
      if (explicit_keys) {
        const auto colon = items[i].find(':');
        if (colon == std::string::npos) throw std::invalid_argument(items[i]);
        const auto len = parse_list<std::uint32_t>(items[i].substr(0, colon), "weight length");
        const std::string w = items[i].substr(colon + 1);
        table[len.at(0)] = std::stod(w, &used);
        if (used != w.size()) throw std::invalid_argument(w);
      } else {
        table[sizes[i]] = std::stod(items[i], &used);
        if (used != items[i].size()) throw std::invalid_argument(items[i]);
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("invalid --weights '" + text + "'");
    }
  }
  return table;
}

struct EncoderFlags {
  std::uint32_t dim = 32768;
  std::string ngrams = "3,4,5";
  std::string weights = "1,5,10";
  std::string hash = "crc32-ieee";
  std::vector<CLI::Option*> options;

  void add_to(CLI::App* app, bool with_dim = true) {
    if (with_dim) {
      options.push_back(app->add_option("--dim", dim, "Vector dimension")
                            ->check(CLI::PositiveNumber)
                            ->capture_default_str());
    }
    options.push_back(app->add_option("--ngrams", ngrams, "Comma-separated n-gram sizes")
                          ->capture_default_str());
    options.push_back(app->add_option("--weights", weights,
                                      "Weights per n-gram size (1,5,10) or len:weight pairs; "
                                      "longer n-grams take the largest length's weight")
                          ->capture_default_str());
    options.push_back(app->add_option("--hash", hash, "crc32-ieee or crc32-c")
                          ->capture_default_str());
  }

  bool any_set() const {
    for (auto* o : options) {
      if (o->count() > 0) return true;
    }
    return false;
  }

  EncoderConfig resolve() const {
    EncoderConfig c;
    c.dimension = dim;
    c.ngram_sizes = parse_list<std::uint32_t>(ngrams, "--ngrams");
    bool weights_set = false;
    for (auto* o : options) {
      if (o->get_name() == "--weights" && o->count() > 0) weights_set = true;
    }
    if (weights_set) c.weight_table = parse_weights(weights, c.ngram_sizes);
    c.hash_variant = parse_hash_variant(hash);
    return c.normalized();
  }
};

unsigned resolve_threads(unsigned flag) { return flag == 0 ? default_thread_count() : flag; }

void add_threads(CLI::App* app, unsigned& threads) {
  app->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->envname("NUMEN_THREADS")
      ->capture_default_str();
}

fs::path manifest_path_for(const fs::path& output) {
  fs::path p = output;
  p += ".manifest.json";
  return p;
}

std::vector<std::size_t> parse_ks(const std::string& text) {
  auto ks = parse_list<std::size_t>(text, "--k");
  for (std::size_t k : ks) {
    if (k == 0) throw ConfigError("--k values must be >= 1");
  }
  return ks;
}

// Keeps queries that have judgments; warns about the rest.
std::vector<QueryRecord> judged_queries(std::vector<QueryRecord> queries, const Qrels& qrels) {
  std::vector<QueryRecord> kept;
  for (auto& q : queries) {
    if (qrels.find(q.query_id) != nullptr) kept.push_back(std::move(q));
  }
  if (kept.size() != queries.size()) {
    warn(std::to_string(queries.size() - kept.size()) +
         " queries have no relevance judgments and are skipped");
  }
  return kept;
}

class Commands {
 public:
  Commands(std::vector<std::string> argv, std::ostream& out, std::ostream& err)
      : argv_(std::move(argv)), out_(out), err_(err) {}

  int run();

 private:
  RunManifest manifest(const std::string& command) const {
    RunManifest m;
    m.command = command;
    m.argv = argv_;
    return m;
  }

  void encode_cmd();
  void index_cmd();
  void search_cmd();
  void eval_cmd();
  void sweep_cmd();
  void collisions_cmd();
  void gensynth_cmd();

  std::vector<std::string> argv_;
  std::ostream& out_;
  std::ostream& err_;

  struct {
    EncoderFlags enc;
    std::optional<std::string> text;
    std::optional<std::string> file;
    std::string out;
    bool stats = false;
  } encode_;
  struct {
    EncoderFlags enc;
    std::string corpus;
    std::string out;
    unsigned threads = 0;
  } index_;
  struct {
    EncoderFlags enc;
    std::string index;
    std::optional<std::string> query;
    std::optional<std::string> queries;
    std::size_t k = 10;
    std::string out;
    unsigned threads = 0;
  } search_;
  struct {
    std::string index;
    std::string queries;
    std::string qrels;
    std::string ks = "2,10,100";
    std::string out;
    std::string bm25_corpus;
    double k1 = 0.9;
    double b = 0.75;
    unsigned threads = 0;
  } eval_;
  struct {
    EncoderFlags enc;
    std::string corpus;
    std::string queries;
    std::string qrels;
    std::string dims = "512,1024,2048,4096,8192,16384,32768";
    std::string ks = "2,10,100";
    std::string out;
    unsigned threads = 0;
  } sweep_;
  struct {
    EncoderFlags enc;
    std::optional<std::uint64_t> n;
    std::optional<std::string> corpus;
  } collisions_;
  struct {
    SynthSpec spec;
    std::string out;
  } gensynth_;
};

void Commands::encode_cmd() {
  const EncoderConfig config = encode_.enc.resolve();
  std::string text;
  if (encode_.text) {
    text = *encode_.text;
  } else {
    std::ifstream in(*encode_.file, std::ios::binary);
    if (!in) throw Error("cannot open '" + *encode_.file + "'");
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  EncodeStats stats;
  const DenseVector v = Encoder(config).encode(text, &stats);
  if (stats.ngram_count == 0) warn("text produced no n-grams; emitting the zero vector");
  if (encode_.stats) {
    err_ << "ngram_count: " << stats.ngram_count << '\n'
         << "nonzero_count: " << stats.nonzero_count << '\n'
         << "dimension: " << v.dimension() << '\n';
  }
  if (!encode_.out.empty()) {
    std::ofstream f(encode_.out, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open '" + encode_.out + "' for writing");
    for (float x : v.components()) {
      const auto bits = std::bit_cast<std::uint32_t>(x);
      const char b[4] = {static_cast<char>(bits & 0xFF), static_cast<char>((bits >> 8) & 0xFF),
                         static_cast<char>((bits >> 16) & 0xFF),
                         static_cast<char>((bits >> 24) & 0xFF)};
      f.write(b, 4);
    }
    if (!f) throw Error("failed writing '" + encode_.out + "'");
    RunManifest m = manifest("encode");
    m.config = config_to_json(config);
    if (encode_.file) m.inputs.push_back(digest_file(*encode_.file));
    m.outputs.push_back(encode_.out);
    m.write(manifest_path_for(encode_.out));
    return;
  }
  const std::vector<float> values(v.components().begin(), v.components().end());
  out_ << nlohmann::json(values).dump() << '\n';
}

void Commands::index_cmd() {
  const EncoderConfig config = index_.enc.resolve();
  const unsigned threads = resolve_threads(index_.threads);
  const auto docs = to_documents(load_corpus(index_.corpus));
  const auto start = Clock::now();
  const VectorIndex index = build_index(docs, config, threads);
  const double build_s = seconds_since(start);
  save_index(index, index_.out);
  const double docs_per_sec = build_s > 0 ? static_cast<double>(docs.size()) / build_s : 0.0;
  err_ << "indexed " << docs.size() << " documents at d=" << config.dimension << " in "
       << build_s << " s (" << docs_per_sec << " docs/sec, " << threads << " threads)\n";

  RunManifest m = manifest("index");
  m.config = config_to_json(config);
  m.parameters["threads"] = threads;
  m.parameters["documents"] = docs.size();
  m.inputs.push_back(digest_file(index_.corpus));
  m.outputs.push_back(index_.out);
  m.timings["encode_seconds"] = build_s;
  m.timings["index_docs_per_sec"] = docs_per_sec;
  m.write(manifest_path_for(index_.out));
}

void Commands::search_cmd() {
  const unsigned threads = resolve_threads(search_.threads);
  const VectorIndex index = load_index(search_.index);
  if (search_.enc.any_set()) index.check_compatible(search_.enc.resolve());
  std::vector<QueryRecord> queries;
  if (search_.query) {
    queries.push_back(QueryRecord{"query", *search_.query});
  } else {
    queries = load_queries(*search_.queries);
  }
  const Encoder encoder(index.config());
  const auto start = Clock::now();
  std::vector<DenseVector> qvecs(queries.size());
  parallel_for(queries.size(), threads,
               [&](std::size_t i) { qvecs[i] = encoder.encode(queries[i].text); });
  const auto results = index.top_k_batch(qvecs, search_.k, threads);
  const double search_s = seconds_since(start);

  std::ofstream file;
  if (!search_.out.empty()) {
    file.open(search_.out, std::ios::trunc);
    if (!file) throw Error("cannot open '" + search_.out + "' for writing");
  }
  std::ostream& sink = search_.out.empty() ? out_ : file;
  char score[32];
  for (std::size_t q = 0; q < queries.size(); ++q) {
    for (const auto& r : results[q]) {
      std::snprintf(score, sizeof(score), "%.6f", r.score);
      sink << queries[q].query_id << '\t' << r.doc_id << '\t' << r.rank << '\t' << score
           << '\n';
    }
  }
  const double qps = search_s > 0 ? static_cast<double>(queries.size()) / search_s : 0.0;
  err_ << "searched " << queries.size() << " queries over " << index.size() << " documents in "
       << search_s << " s (" << qps << " queries/sec)\n";
  if (!search_.out.empty()) {
    file.close();
    if (!file) throw Error("failed writing '" + search_.out + "'");
    RunManifest m = manifest("search");
    m.config = config_to_json(index.config());
    m.parameters["k"] = search_.k;
    m.parameters["threads"] = threads;
    m.inputs.push_back(digest_file(search_.index));
    if (search_.queries) m.inputs.push_back(digest_file(*search_.queries));
    m.outputs.push_back(search_.out);
    m.timings["search_seconds"] = search_s;
    m.timings["query_qps"] = qps;
    m.write(manifest_path_for(search_.out));
  }
}

void Commands::eval_cmd() {
  const unsigned threads = resolve_threads(eval_.threads);
  const auto ks = parse_ks(eval_.ks);
  const std::size_t depth = *std::max_element(ks.begin(), ks.end());
  const VectorIndex index = load_index(eval_.index);
  const Qrels qrels = load_qrels(eval_.qrels);
  const auto queries = judged_queries(load_queries(eval_.queries), qrels);
  const Encoder encoder(index.config());

  const auto start = Clock::now();
  std::vector<DenseVector> qvecs(queries.size());
  parallel_for(queries.size(), threads,
               [&](std::size_t i) { qvecs[i] = encoder.encode(queries[i].text); });
  const auto results = index.top_k_batch(qvecs, depth, threads);
  const double search_s = seconds_since(start);
  std::vector<std::string> ids;
  for (const auto& q : queries) ids.push_back(q.query_id);
  RecallReport report = recall_at_k(to_ranked_lists(ids, results), qrels, ks);
  report.config_fingerprint = index.config().describe();
  const auto rows = rows_from_report(report, index.dimension());

  out_ << "numen " << report.config_fingerprint << " (" << report.per_query.size()
       << " queries)\n"
       << format_recall_table(rows);

  if (!eval_.bm25_corpus.empty()) {
    const auto docs = to_documents(load_corpus(eval_.bm25_corpus));
    const Bm25Index bm25(docs, Bm25Params{eval_.k1, eval_.b});
    RankedLists lists;
    for (const auto& q : queries) {
      auto& l = lists[q.query_id];
      for (const auto& r : bm25.rank(q.text, depth)) l.push_back(r.doc_id);
    }
    const auto bm25_report = recall_at_k(lists, qrels, ks);
    out_ << "bm25 k1=" << eval_.k1 << " b=" << eval_.b << '\n'
         << format_recall_table(rows_from_report(bm25_report, 0));
  }

  if (!eval_.out.empty()) {
    std::ofstream csv(eval_.out, std::ios::trunc);
    if (!csv) throw Error("cannot open '" + eval_.out + "' for writing");
    write_recall_csv(csv, rows);
    csv.close();
    RunManifest m = manifest("eval");
    m.config = config_to_json(index.config());
    m.parameters["k"] = ks;
    m.parameters["threads"] = threads;
    m.inputs.push_back(digest_file(eval_.index));
    m.inputs.push_back(digest_file(eval_.queries));
    m.inputs.push_back(digest_file(eval_.qrels));
    m.outputs.push_back(eval_.out);
    m.timings["search_seconds"] = search_s;
    m.timings["query_qps"] = search_s > 0 ? static_cast<double>(queries.size()) / search_s : 0.0;
    m.write(manifest_path_for(eval_.out));
  }
}

void Commands::sweep_cmd() {
  const unsigned threads = resolve_threads(sweep_.threads);
  const EncoderConfig base = sweep_.enc.resolve();
  const auto dims = parse_list<std::uint32_t>(sweep_.dims, "--dims");
  const auto ks = parse_ks(sweep_.ks);
  const auto docs = to_documents(load_corpus(sweep_.corpus));
  const Qrels qrels = load_qrels(sweep_.qrels);
  const auto queries = judged_queries(load_queries(sweep_.queries), qrels);

  RunManifest m = manifest("sweep");
  m.config = config_to_json(base);
  m.config.erase("dimension");
  m.parameters["dimensions"] = dims;
  m.parameters["k"] = ks;
  m.parameters["threads"] = threads;

  const auto start = Clock::now();
  auto dim_start = Clock::now();
  SweepOptions options;
  options.threads = threads;
  options.on_dimension = [&](std::uint32_t d, const std::vector<SweepRow>&) {
    const double s = seconds_since(dim_start);
    err_ << "dimension " << d << " done in " << s << " s\n";
    m.timings["seconds_d" + std::to_string(d)] = s;
    dim_start = Clock::now();
  };
  const auto rows = dimension_sweep(docs, queries, qrels, dims, ks, base, options);
  m.timings["wall_seconds"] = seconds_since(start);

  out_ << format_recall_table(rows);
  if (!sweep_.out.empty()) {
    std::ofstream csv(sweep_.out, std::ios::trunc);
    if (!csv) throw Error("cannot open '" + sweep_.out + "' for writing");
    write_recall_csv(csv, rows);
    csv.close();
    m.inputs.push_back(digest_file(sweep_.corpus));
    m.inputs.push_back(digest_file(sweep_.queries));
    m.inputs.push_back(digest_file(sweep_.qrels));
    m.outputs.push_back(sweep_.out);
    m.write(manifest_path_for(sweep_.out));
  }
}

void Commands::collisions_cmd() {
  const EncoderConfig config = collisions_.enc.resolve();
  char line[160];
  if (collisions_.n) {
    const double p = collision_probability(*collisions_.n, config.dimension);
    std::snprintf(line, sizeof(line), "formula n=%llu d=%u P(collision)=%.6f (%.2f%%)\n",
                  static_cast<unsigned long long>(*collisions_.n), config.dimension, p,
                  p * 100.0);
    out_ << line;
  }
  if (collisions_.corpus) {
    std::vector<std::string> texts;
    for (const auto& d : load_corpus(*collisions_.corpus)) texts.push_back(d.encoded_text());
    const auto r = measure_empirical_collisions(texts, config);
    std::snprintf(line, sizeof(line), "empirical texts=%zu d=%u mean_distinct_ngrams=%.2f\n",
                  r.texts, config.dimension, r.mean_distinct_ngrams);
    out_ << line;
    std::snprintf(line, sizeof(line),
                  "  texts_with_collision=%.6f predicted=%.6f\n"
                  "  mean_colliding_pairs=%.6f pairwise_rate=%.8f\n",
                  r.any_collision_rate, r.predicted_any_collision_rate, r.mean_colliding_pairs,
                  r.pairwise_collision_rate);
    out_ << line;
  }
}

void Commands::gensynth_cmd() {
  const auto data = generate_synthetic(gensynth_.spec);
  const fs::path dir = gensynth_.out;
  save_dataset(dir, data);
  RunManifest m = manifest("gensynth");
  const SynthSpec& s = gensynth_.spec;
  m.parameters["people"] = s.num_people;
  m.parameters["attributes"] = s.num_attributes;
  m.parameters["per_person"] = s.attributes_per_person;
  m.parameters["per_query"] = s.attributes_per_query;
  m.parameters["queries"] = s.num_queries;
  m.parameters["seed"] = s.seed;
  for (const char* f : {"corpus.jsonl", "queries.jsonl", "qrels.tsv"}) {
    m.outputs.push_back((dir / f).string());
  }
  m.write(dir / "manifest.json");
  err_ << "wrote " << data.corpus.size() << " documents, " << data.queries.size()
       << " queries to " << dir.string() << '\n';
}

int Commands::run() {
  CLI::App app{"numen: training-free dense retrieval with hashed character n-grams"};
  app.name("numen");
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* enc = app.add_subcommand("encode", "Encode one text and print the vector as JSON");
  encode_.enc.add_to(enc);
  auto* text_opt = enc->add_option("--text", encode_.text, "Text to encode");
  auto* file_opt = enc->add_option("--file", encode_.file, "Read the text from a file")
                       ->check(CLI::ExistingFile);
  text_opt->excludes(file_opt);
  file_opt->excludes(text_opt);
  enc->add_option("--out", encode_.out, "Write little-endian float32 components here instead");
  enc->add_flag("--stats", encode_.stats, "Report n-gram and nonzero counts on stderr");
  enc->callback([&] {
    if (!encode_.text && !encode_.file) throw CLI::RequiredError("--text or --file");
    encode_cmd();
  });

  auto* idx = app.add_subcommand("index", "Encode a corpus.jsonl into an index file");
  index_.enc.add_to(idx);
  idx->add_option("--corpus", index_.corpus, "BEIR corpus.jsonl")->required()->check(CLI::ExistingFile);
  idx->add_option("--out", index_.out, "Index file to write")->required();
  add_threads(idx, index_.threads);
  idx->callback([&] { index_cmd(); });

  auto* srch = app.add_subcommand(
      "search",
      "Rank documents; prints TSV rows: query_id<TAB>doc_id<TAB>rank<TAB>score "
      "(a TREC run without the Q0 and tag columns)");
  search_.enc.add_to(srch);
  srch->add_option("--index", search_.index, "Index file")->required()->check(CLI::ExistingFile);
  auto* q_opt = srch->add_option("--query", search_.query, "Query text (query_id 'query')");
  auto* qs_opt = srch->add_option("--queries", search_.queries, "BEIR queries.jsonl")
                     ->check(CLI::ExistingFile);
  q_opt->excludes(qs_opt);
  qs_opt->excludes(q_opt);
  srch->add_option("--k", search_.k, "Results per query")->check(CLI::PositiveNumber)->capture_default_str();
  srch->add_option("--out", search_.out, "Write the run here instead of stdout");
  add_threads(srch, search_.threads);
  srch->callback([&] {
    if (!search_.query && !search_.queries) throw CLI::RequiredError("--query or --queries");
    search_cmd();
  });

  auto* ev = app.add_subcommand("eval", "Recall@k of an index against qrels");
  ev->add_option("--index", eval_.index, "Index file")->required()->check(CLI::ExistingFile);
  ev->add_option("--queries", eval_.queries, "BEIR queries.jsonl")->required()->check(CLI::ExistingFile);
  ev->add_option("--qrels", eval_.qrels, "qrels.tsv")->required()->check(CLI::ExistingFile);
  ev->add_option("--k", eval_.ks, "Comma-separated cutoffs")->capture_default_str();
  ev->add_option("--out", eval_.out, "CSV output (dimension,k,recall)");
  ev->add_option("--bm25-corpus", eval_.bm25_corpus, "Also report a BM25 baseline over this corpus")
      ->check(CLI::ExistingFile);
  ev->add_option("--k1", eval_.k1, "BM25 k1")->capture_default_str();
  ev->add_option("--b", eval_.b, "BM25 b")->capture_default_str();
  add_threads(ev, eval_.threads);
  ev->callback([&] { eval_cmd(); });

  auto* sw = app.add_subcommand("sweep", "Recall@k across encoder dimensions");
  sweep_.enc.add_to(sw, /*with_dim=*/false);
  sw->add_option("--corpus", sweep_.corpus, "BEIR corpus.jsonl")->required()->check(CLI::ExistingFile);
  sw->add_option("--queries", sweep_.queries, "BEIR queries.jsonl")->required()->check(CLI::ExistingFile);
  sw->add_option("--qrels", sweep_.qrels, "qrels.tsv")->required()->check(CLI::ExistingFile);
  sw->add_option("--dims", sweep_.dims, "Comma-separated dimensions")->capture_default_str();
  sw->add_option("--k", sweep_.ks, "Comma-separated cutoffs")->capture_default_str();
  sw->add_option("--out", sweep_.out, "CSV output (dimension,k,recall)");
  add_threads(sw, sweep_.threads);
  sw->callback([&] { sweep_cmd(); });

  auto* col = app.add_subcommand("collisions", "Birthday-bound and measured hash collisions");
  collisions_.enc.add_to(col);
  col->add_option("--n", collisions_.n, "Number of distinct n-grams for the formula")
      ->check(CLI::PositiveNumber);
  col->add_option("--corpus", collisions_.corpus, "Measure collisions over this corpus.jsonl")
      ->check(CLI::ExistingFile);
  col->callback([&] {
    if (!collisions_.n && !collisions_.corpus) throw CLI::RequiredError("--n or --corpus");
    collisions_cmd();
  });

  auto* gen = app.add_subcommand("gensynth", "Write a synthetic '<name> likes <attrs>' dataset");
  SynthSpec& spec = gensynth_.spec;
  gen->add_option("--people", spec.num_people, "Documents (one per person)")->capture_default_str();
  gen->add_option("--attributes", spec.num_attributes, "Attribute vocabulary size")->capture_default_str();
  gen->add_option("--per-person", spec.attributes_per_person, "Attributes per person")->capture_default_str();
  gen->add_option("--per-query", spec.attributes_per_query, "Attributes per query")->capture_default_str();
  gen->add_option("--queries", spec.num_queries, "Number of queries")->capture_default_str();
  gen->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gensynth_.out, "Output directory")->required();
  gen->callback([&] { gensynth_cmd(); });

  std::vector<const char*> cargv;
  for (const auto& a : argv_) cargv.push_back(a.c_str());
  const WarningHandler previous =
      set_warning_handler([this](std::string_view m) { err_ << "warning: " << m << '\n'; });
  int code = 0;
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    code = app.exit(e, out_, err_);
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    code = 1;
  }
  set_warning_handler(previous);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> argv = args;
  if (argv.empty()) argv.emplace_back("numen");
  return Commands(std::move(argv), out, err).run();
}

}  // namespace numen::cli
