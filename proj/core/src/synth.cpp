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
#include <functional>
#include <limits>
#include <random>
#include <unordered_set>

#include "numen/error.hpp"
#include "numen/ingest.hpp"

namespace numen {
namespace {

constexpr int kQueryRetries = 1000;
constexpr int kNameRetries = 1000;

// std::uniform_int_distribution is implementation-defined; this is not, so
// datasets are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // k distinct values from [0, n) (Floyd), in random order.
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> out;
    std::unordered_set<std::uint32_t> chosen;
    for (std::uint32_t j = n - k; j < n; ++j) {
      auto t = static_cast<std::uint32_t>(below(std::uint64_t{j} + 1));
      if (!chosen.insert(t).second) {
        chosen.insert(j);
        t = j;
      }
      out.push_back(t);
    }
    shuffle(out);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::string_view kOnsets = "bcdfghjklmnprstvwz";
constexpr std::string_view kVowels = "aeiou";

std::string pseudo_word(Rng& rng, int min_syllables, int max_syllables) {
  const int syllables =
      min_syllables + static_cast<int>(rng.below(max_syllables - min_syllables + 1));
  std::string w;
  for (int s = 0; s < syllables; ++s) {
    w.push_back(kOnsets[rng.below(kOnsets.size())]);
    w.push_back(kVowels[rng.below(kVowels.size())]);
  }
  if (rng.below(2) == 0) w.push_back(kOnsets[rng.below(kOnsets.size())]);
  return w;
}

std::string capitalize(std::string w) {
  if (!w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
  return w;
}

std::vector<std::string> unique_words(std::uint32_t count,
                                      const std::function<std::string()>& make,
                                      const char* what) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  out.reserve(count);
  int misses = 0;
  while (out.size() < count) {
    std::string w = make();
    if (seen.insert(w).second) {
      out.push_back(std::move(w));
      misses = 0;
    } else if (++misses > kNameRetries) {
      throw InvalidArgument(std::string("cannot generate ") +
                            std::to_string(count) + " distinct " + what);
    }
  }
  return out;
}

std::string padded_id(const char* prefix, std::size_t i, std::size_t total) {
  const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
  std::string digits = std::to_string(i);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

std::string join_list(const std::vector<std::string>& names,
                      const std::vector<std::uint32_t>& picks) {
  std::string out;
  for (std::size_t i = 0; i < picks.size(); ++i) {
    if (i) out += ", ";
    out += names[picks[i]];
  }
  return out;
}

}  // namespace

void SynthSpec::validate() const {
  if (num_people < 1) throw InvalidArgument("num_people must be >= 1");
  if (num_attributes < 1) throw InvalidArgument("num_attributes must be >= 1");
  if (attributes_per_person < 1) {
    throw InvalidArgument("attributes_per_person must be >= 1");
  }
  if (attributes_per_query < 1) {
    throw InvalidArgument("attributes_per_query must be >= 1");
  }
  if (attributes_per_person > num_attributes) {
    throw InvalidArgument("attributes_per_person exceeds num_attributes");
  }
  if (attributes_per_query > num_attributes) {
    throw InvalidArgument("attributes_per_query exceeds num_attributes");
  }
  if (num_queries < 1) throw InvalidArgument("num_queries must be >= 1");
}

SynthDataset generate_synthetic(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const auto attributes = unique_words(
      spec.num_attributes,
      [&] { return pseudo_word(rng, 2, 4); }, "attribute names");
  const auto names = unique_words(
      spec.num_people,
      [&] {
        const std::string first = capitalize(pseudo_word(rng, 1, 2));
        const std::string last = capitalize(pseudo_word(rng, 2, 3));
        return first + " " + last;
      },
      "person names");

  SynthDataset data;
  data.corpus.reserve(spec.num_people);
  // holders[a] = ascending person indices holding attribute a.
  std::vector<std::vector<std::uint32_t>> holders(spec.num_attributes);
  for (std::uint32_t p = 0; p < spec.num_people; ++p) {
    const auto picks = rng.sample(spec.num_attributes, spec.attributes_per_person);
    for (std::uint32_t a : picks) holders[a].push_back(p);
    data.corpus.push_back(DocumentRecord{
        padded_id("doc", p, spec.num_people), std::nullopt,
        names[p] + " likes " + join_list(attributes, picks) + "."});
  }

  data.queries.reserve(spec.num_queries);
  for (std::uint32_t q = 0; q < spec.num_queries; ++q) {
    std::vector<std::uint32_t> relevant;
    std::vector<std::uint32_t> picks;
    for (int attempt = 0; attempt < kQueryRetries && relevant.empty();
         ++attempt) {
      picks = rng.sample(spec.num_attributes, spec.attributes_per_query);
      relevant = holders[picks[0]];
      for (std::size_t i = 1; i < picks.size() && !relevant.empty(); ++i) {
        std::vector<std::uint32_t> next;
        std::set_intersection(relevant.begin(), relevant.end(),
                              holders[picks[i]].begin(), holders[picks[i]].end(),
                              std::back_inserter(next));
        relevant.swap(next);
      }
    }
    if (relevant.empty()) {
      throw InvalidArgument(
          "infeasible synthetic spec: no attribute subset with a relevant "
          "person after " +
          std::to_string(kQueryRetries) + " attempts");
    }
    const std::string qid = padded_id("q", q, spec.num_queries);
    data.queries.push_back(
        QueryRecord{qid, "who likes " + join_list(attributes, picks) + "?"});
    for (std::uint32_t p : relevant) data.qrels.set(qid, data.corpus[p].doc_id, 1);
  }
  return data;
}

}  // namespace numen
