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
#include "numen/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "numen/error.hpp"
#include "numen/log.hpp"

namespace numen {
namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_at(const std::string& source, std::size_t line,
                          const std::string& msg) {
  throw FormatError(source + ":" + std::to_string(line) + ": " + msg);
}

std::string id_field(const json& obj, const std::string& source,
                     std::size_t line) {
  auto it = obj.find("_id");
  if (it == obj.end()) fail_at(source, line, "missing \"_id\"");
  std::string id;
  if (it->is_string()) {
    id = it->get<std::string>();
  } else if (it->is_number_integer()) {
    id = it->dump();
  } else {
    fail_at(source, line, "\"_id\" must be a string");
  }
  if (id.empty()) fail_at(source, line, "empty \"_id\"");
  return id;
}

std::string text_field(const json& obj, const std::string& source,
                       std::size_t line) {
  auto it = obj.find("text");
  if (it == obj.end()) fail_at(source, line, "missing \"text\"");
  if (!it->is_string()) fail_at(source, line, "\"text\" must be a string");
  return it->get<std::string>();
}

// Calls fn(obj, line) for every non-blank line of a JSONL stream.
template <typename Fn>
void for_each_json_line(std::istream& in, const std::string& source, Fn&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      const bool last = in.eof();
      fail_at(source, lineno,
              std::string(last ? "truncated or invalid JSON" : "invalid JSON") +
                  " (" + e.what() + ")");
    }
    if (!obj.is_object()) fail_at(source, lineno, "expected a JSON object");
    fn(obj, lineno);
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

}  // namespace

std::string DocumentRecord::encoded_text() const {
  if (title && !title->empty()) return *title + " " + text;
  return text;
}

void read_corpus(std::istream& in, const std::string& source,
                 const std::function<void(DocumentRecord&&)>& sink) {
  std::unordered_set<std::string> seen;
  for_each_json_line(in, source, [&](const json& obj, std::size_t line) {
    DocumentRecord rec;
    rec.doc_id = id_field(obj, source, line);
    rec.text = text_field(obj, source, line);
    if (auto it = obj.find("title"); it != obj.end() && !it->is_null()) {
      if (!it->is_string()) fail_at(source, line, "\"title\" must be a string");
      rec.title = it->get<std::string>();
    }
    if (!seen.insert(rec.doc_id).second) {
      fail_at(source, line, "duplicate _id '" + rec.doc_id + "'");
    }
    sink(std::move(rec));
  });
}

void read_queries(std::istream& in, const std::string& source,
                  const std::function<void(QueryRecord&&)>& sink) {
  std::unordered_set<std::string> seen;
  for_each_json_line(in, source, [&](const json& obj, std::size_t line) {
    QueryRecord rec{id_field(obj, source, line), text_field(obj, source, line)};
    if (!seen.insert(rec.query_id).second) {
      fail_at(source, line, "duplicate _id '" + rec.query_id + "'");
    }
    sink(std::move(rec));
  });
}

std::vector<DocumentRecord> load_corpus(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<DocumentRecord> out;
  read_corpus(in, path.string(),
              [&](DocumentRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

std::vector<QueryRecord> load_queries(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<QueryRecord> out;
  read_queries(in, path.string(),
               [&](QueryRecord&& r) { out.push_back(std::move(r)); });
  return out;
}

Qrels read_qrels(std::istream& in, const std::string& source) {
  Qrels qrels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "query-id\tcorpus-id\tscore") continue;
    const auto cols = split_tabs(line);
    if (cols.size() != 3) {
      fail_at(source, lineno,
              "expected 3 tab-separated columns, got " +
                  std::to_string(cols.size()));
    }
    if (cols[0].empty() || cols[1].empty()) {
      fail_at(source, lineno, "empty query or document id");
    }
    int grade = 0;
    const std::string& g = cols[2];
    auto [ptr, ec] = std::from_chars(g.data(), g.data() + g.size(), grade);
    if (ec != std::errc() || ptr != g.data() + g.size() || g.empty()) {
      fail_at(source, lineno, "relevance grade '" + g + "' is not an integer");
    }
    if (grade < 0) fail_at(source, lineno, "negative relevance grade " + g);
    if (qrels.set(cols[0], cols[1], grade)) {
      warn(source + ":" + std::to_string(lineno) + ": repeated judgment for (" +
           cols[0] + ", " + cols[1] + "); keeping grade " + g);
    }
  }
  qrels.drop_unanswerable();
  return qrels;
}

Qrels load_qrels(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_qrels(in, path.string());
}

void write_corpus(std::ostream& out, const std::vector<DocumentRecord>& docs) {
  for (const auto& d : docs) {
    ordered_json obj;
    obj["_id"] = d.doc_id;
    if (d.title) obj["title"] = *d.title;
    obj["text"] = d.text;
    out << obj.dump() << '\n';
  }
}

void write_queries(std::ostream& out, const std::vector<QueryRecord>& queries) {
  for (const auto& q : queries) {
    ordered_json obj;
    obj["_id"] = q.query_id;
    obj["text"] = q.text;
    out << obj.dump() << '\n';
  }
}

void write_qrels(std::ostream& out, const Qrels& qrels) {
  out << "query-id\tcorpus-id\tscore\n";
  for (const auto& [qid, judgments] : qrels.judgments()) {
    for (const auto& [doc, grade] : judgments) {
      out << qid << '\t' << doc << '\t' << grade << '\n';
    }
  }
}

void save_corpus(const std::filesystem::path& path,
                 const std::vector<DocumentRecord>& docs) {
  auto out = open_output(path);
  write_corpus(out, docs);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void save_queries(const std::filesystem::path& path,
                  const std::vector<QueryRecord>& queries) {
  auto out = open_output(path);
  write_queries(out, queries);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void save_qrels(const std::filesystem::path& path, const Qrels& qrels) {
  auto out = open_output(path);
  write_qrels(out, qrels);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::vector<Document> to_documents(const std::vector<DocumentRecord>& docs) {
  std::vector<Document> out;
  out.reserve(docs.size());
  for (const auto& d : docs) out.push_back(d.to_document());
  return out;
}

void save_dataset(const std::filesystem::path& dir, const SynthDataset& data) {
  std::filesystem::create_directories(dir);
  save_corpus(dir / "corpus.jsonl", data.corpus);
  save_queries(dir / "queries.jsonl", data.queries);
  save_qrels(dir / "qrels.tsv", data.qrels);
}

SynthDataset load_dataset(const std::filesystem::path& dir) {
  return SynthDataset{load_corpus(dir / "corpus.jsonl"),
                      load_queries(dir / "queries.jsonl"),
                      load_qrels(dir / "qrels.tsv")};
}

}  // namespace numen
