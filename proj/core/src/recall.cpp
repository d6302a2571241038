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
#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "numen/error.hpp"
#include "numen/eval.hpp"
#include "numen/log.hpp"

namespace numen {

RankedLists to_ranked_lists(
    const std::vector<std::string>& query_ids,
    const std::vector<std::vector<SearchResult>>& results) {
  if (query_ids.size() != results.size()) {
    throw InvalidArgument("to_ranked_lists: " + std::to_string(query_ids.size()) +
                          " ids for " + std::to_string(results.size()) +
                          " result lists");
  }
  RankedLists out;
  for (std::size_t i = 0; i < query_ids.size(); ++i) {
    auto& list = out[query_ids[i]];
    list.reserve(results[i].size());
    for (const auto& r : results[i]) list.push_back(r.doc_id);
  }
  return out;
}

double RecallReport::at(std::size_t k) const {
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] == k) return aggregate[i];
  }
  throw InvalidArgument("recall report has no cutoff k=" + std::to_string(k));
}

RecallReport recall_at_k(const RankedLists& results, const Qrels& qrels,
                         std::span<const std::size_t> k_values) {
  if (k_values.empty()) throw InvalidArgument("recall_at_k: no cutoffs given");
  for (std::size_t k : k_values) {
    if (k == 0) throw InvalidArgument("recall_at_k: k must be >= 1");
  }
  std::vector<std::string> missing;
  for (const auto& [qid, list] : results) {
    if (qrels.find(qid) == nullptr) missing.push_back(qid);
  }
  if (!missing.empty()) {
    std::string msg = "queries missing from qrels:";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) {
      msg += " " + missing[i];
    }
    if (missing.size() > 20) {
      msg += " ... (" + std::to_string(missing.size()) + " total)";
    }
    throw InvalidArgument(msg);
  }

  RecallReport report;
  report.k_values.assign(k_values.begin(), k_values.end());
  report.aggregate.assign(k_values.size(), 0.0);
  for (const auto& [qid, list] : results) {
    const Qrels::Judgments& judged = *qrels.find(qid);
    const std::size_t relevant = qrels.relevant_count(qid);
    if (relevant == 0) {
      warn("query '" + qid + "' has no relevant documents; skipped");
      continue;
    }
    std::vector<double> values;
    values.reserve(k_values.size());
    for (std::size_t k : k_values) {
      std::unordered_set<std::string_view> hits;
      const std::size_t depth = std::min(k, list.size());
      for (std::size_t i = 0; i < depth; ++i) {
        auto it = judged.find(list[i]);
        if (it != judged.end() && it->second >= 1) hits.insert(list[i]);
      }
      values.push_back(static_cast<double>(hits.size()) /
                       static_cast<double>(relevant));
    }
    report.per_query.emplace(qid, std::move(values));
  }
  if (report.per_query.empty()) {
    throw InvalidArgument("recall_at_k: no evaluable queries");
  }
  for (const auto& [qid, values] : report.per_query) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      report.aggregate[i] += values[i];
    }
  }
  for (double& a : report.aggregate) {
    a /= static_cast<double>(report.per_query.size());
  }
  return report;
}

RecallReport recall_at_k(const RankedLists& results, const Qrels& qrels,
                         std::size_t k) {
  const std::size_t ks[] = {k};
  return recall_at_k(results, qrels, ks);
}

std::vector<SweepRow> rows_from_report(const RecallReport& report,
                                       std::uint32_t dimension) {
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < report.k_values.size(); ++i) {
    rows.push_back(SweepRow{dimension, report.k_values[i], report.aggregate[i]});
  }
  return rows;
}

void write_recall_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "dimension,k,recall\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%u,%zu,%.6f\n", r.dimension, r.k, r.recall);
    out << buf;
  }
}

std::string format_recall_table(std::span<const SweepRow> rows) {
  std::vector<std::size_t> ks;
  std::vector<std::uint32_t> dims;
  for (const auto& r : rows) {
    if (std::find(ks.begin(), ks.end(), r.k) == ks.end()) ks.push_back(r.k);
    if (std::find(dims.begin(), dims.end(), r.dimension) == dims.end()) {
      dims.push_back(r.dimension);
    }
  }
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%10s", "dimension");
  os << buf;
  for (std::size_t k : ks) {
    std::snprintf(buf, sizeof(buf), "  %11s", ("Recall@" + std::to_string(k)).c_str());
    os << buf;
  }
  os << '\n';
  for (std::uint32_t d : dims) {
    std::snprintf(buf, sizeof(buf), "%10u", d);
    os << buf;
    for (std::size_t k : ks) {
      auto it = std::find_if(rows.begin(), rows.end(), [&](const SweepRow& r) {
        return r.dimension == d && r.k == k;
      });
      if (it == rows.end()) {
        std::snprintf(buf, sizeof(buf), "  %11s", "-");
      } else {
        std::snprintf(buf, sizeof(buf), "  %10.2f%%", it->recall * 100.0);
      }
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace numen
