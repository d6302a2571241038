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
#include "numen/qrels.hpp"

#include "numen/log.hpp"

namespace numen {

bool Qrels::set(const std::string& query_id, const std::string& doc_id,
                int grade) {
  auto& judgments = by_query_[query_id];
  auto [it, inserted] = judgments.insert_or_assign(doc_id, grade);
  return !inserted;
}

const Qrels::Judgments* Qrels::find(const std::string& query_id) const {
  auto it = by_query_.find(query_id);
  return it == by_query_.end() ? nullptr : &it->second;
}

std::size_t Qrels::relevant_count(const std::string& query_id) const {
  const Judgments* j = find(query_id);
  if (j == nullptr) return 0;
  std::size_t n = 0;
  for (const auto& [doc, grade] : *j) n += grade >= 1 ? 1 : 0;
  return n;
}

std::vector<std::string> Qrels::drop_unanswerable() {
  std::vector<std::string> dropped;
  for (auto it = by_query_.begin(); it != by_query_.end();) {
    bool any = false;
    for (const auto& [doc, grade] : it->second) any = any || grade >= 1;
    if (any) {
      ++it;
      continue;
    }
    warn("query '" + it->first +
         "' has no relevant documents; excluded from evaluation");
    dropped.push_back(it->first);
    it = by_query_.erase(it);
  }
  return dropped;
}

}  // namespace numen
