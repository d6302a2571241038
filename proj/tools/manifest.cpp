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
#include "manifest.hpp"

#include <cstdio>
#include <fstream>

#include "numen/crc32.hpp"
#include "numen/error.hpp"

namespace numen::cli {

FileDigest digest_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::uint32_t crc = 0;
  std::uintmax_t total = 0;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = static_cast<std::size_t>(in.gcount());
    crc = crc32_update(HashVariant::kCrc32Ieee, crc, std::string_view(buf.data(), got));
    total += got;
  }
  char hex[9];
  std::snprintf(hex, sizeof(hex), "%08x", crc);
  return FileDigest{path.string(), total, hex};
}

nlohmann::ordered_json config_to_json(const EncoderConfig& config) {
  nlohmann::ordered_json j;
  j["dimension"] = config.dimension;
  j["ngram_sizes"] = config.ngram_sizes;
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  for (const auto& [len, w] : config.weight_table) weights[std::to_string(len)] = w;
  j["weights"] = weights;
  j["hash"] = std::string(to_string(config.hash_variant));
  return j;
}

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = "numen";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["argv"] = argv;
  j["config"] = config;
  j["parameters"] = parameters;
  nlohmann::ordered_json in = nlohmann::ordered_json::array();
  for (const auto& d : inputs) {
    in.push_back({{"path", d.path}, {"bytes", d.bytes}, {"crc32", d.crc32}});
  }
  j["inputs"] = in;
  j["outputs"] = outputs;
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const auto& [k, v] : timings) t[k] = v;
  j["timings"] = t;
  return j;
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write manifest '" + path.string() + "'");
  out << to_json().dump(2) << '\n';
}

}  // namespace numen::cli
