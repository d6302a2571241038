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

#include <cstddef>
#include <cstdint>

namespace numen::detail {

struct CodepointRange {
  std::uint32_t lo;
  std::uint32_t hi;  // inclusive
};

struct CaseMapping {
  std::uint32_t from;
  std::uint32_t to;
};

// Sorted, non-overlapping. General categories L* and Nd.
extern const CodepointRange kWordRanges[];
extern const std::size_t kWordRangeCount;

// Sorted by `from`. Simple lowercase mapping.
extern const CaseMapping kLowerMappings[];
extern const std::size_t kLowerMappingCount;

}  // namespace numen::detail
