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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "numen/index.hpp"
#include "numen/qrels.hpp"

namespace numen {

struct DocumentRecord {
  std::string doc_id;
  std::optional<std::string> title;
  std::string text;

  // "title text" when a non-empty title is present, otherwise text.
  std::string encoded_text() const;
  Document to_document() const { return {doc_id, encoded_text()}; }

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

struct QueryRecord {
  std::string query_id;
  std::string text;

  friend bool operator==(const QueryRecord&, const QueryRecord&) = default;
};

// BEIR-style JSONL readers. Errors are FormatError("<source>:<line>: ...").
// Blank lines are skipped. Duplicate ids are errors.
void read_corpus(std::istream& in, const std::string& source,
                 const std::function<void(DocumentRecord&&)>& sink);
void read_queries(std::istream& in, const std::string& source,
                  const std::function<void(QueryRecord&&)>& sink);

std::vector<DocumentRecord> load_corpus(const std::filesystem::path& path);
std::vector<QueryRecord> load_queries(const std::filesystem::path& path);

/// Tab-separated query_id, doc_id, integer grade; an optional first line
/// "query-id<TAB>corpus-id<TAB>score" is skipped. Repeated pairs keep the
/// last grade (with a warning); queries left without a relevant doc are
/// dropped with a warning.
Qrels read_qrels(std::istream& in, const std::string& source);
Qrels load_qrels(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const std::vector<DocumentRecord>& docs);
void write_queries(std::ostream& out, const std::vector<QueryRecord>& queries);
void write_qrels(std::ostream& out, const Qrels& qrels);

void save_corpus(const std::filesystem::path& path,
                 const std::vector<DocumentRecord>& docs);
void save_queries(const std::filesystem::path& path,
                  const std::vector<QueryRecord>& queries);
void save_qrels(const std::filesystem::path& path, const Qrels& qrels);

std::vector<Document> to_documents(const std::vector<DocumentRecord>& docs);

/// Parameters of a synthetic "<name> likes <attr>, <attr>, ..." dataset.
struct SynthSpec {
  std::uint32_t num_people = 5000;
  std::uint32_t num_attributes = 1000;
  std::uint32_t attributes_per_person = 5;
  std::uint32_t attributes_per_query = 1;
  std::uint32_t num_queries = 200;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidArgument
};

struct SynthDataset {
  std::vector<DocumentRecord> corpus;
  std::vector<QueryRecord> queries;
  Qrels qrels;
};

/// Pure function of `spec`. One document per person; each query asks for
/// every person holding all of a random attribute subset, resampling subsets
/// that nobody holds. Throws InvalidArgument when no answerable query turns
/// up within the retry budget.
SynthDataset generate_synthetic(const SynthSpec& spec);

// Writes corpus.jsonl, queries.jsonl, qrels.tsv into `dir`.
void save_dataset(const std::filesystem::path& dir, const SynthDataset& data);
SynthDataset load_dataset(const std::filesystem::path& dir);

}  // namespace numen
