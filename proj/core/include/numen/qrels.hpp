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

#include <map>
#include <string>
#include <vector>

namespace numen {

/// query_id -> doc_id -> grade. Grades >= 1 count as relevant.
class Qrels {
 public:
  using Judgments = std::map<std::string, int>;

  // Last write wins; returns true when an existing grade was replaced.
  bool set(const std::string& query_id, const std::string& doc_id, int grade);

  const std::map<std::string, Judgments>& judgments() const { return by_query_; }
  const Judgments* find(const std::string& query_id) const;
  std::size_t relevant_count(const std::string& query_id) const;
  bool empty() const { return by_query_.empty(); }
  std::size_t size() const { return by_query_.size(); }

  // Drops queries without any grade >= 1, warning once per dropped query.
  // Returns the dropped ids.
  std::vector<std::string> drop_unanswerable();

  friend bool operator==(const Qrels&, const Qrels&) = default;

 private:
  std::map<std::string, Judgments> by_query_;
};

}  // namespace numen
