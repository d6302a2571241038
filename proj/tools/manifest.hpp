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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "numen/encoder.hpp"

namespace numen::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct FileDigest {
  std::string path;
  std::uintmax_t bytes = 0;
  std::string crc32;  // 8 lowercase hex digits, CRC32-IEEE of the content
};

FileDigest digest_file(const std::filesystem::path& path);

nlohmann::ordered_json config_to_json(const EncoderConfig& config);

/// Everything needed to re-run a command: argv, the fully materialized
/// config, input digests, outputs, and measured throughput.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<FileDigest> inputs;
  std::vector<std::string> outputs;
  // e.g. "wall_seconds", "index_docs_per_sec", "query_qps"
  std::map<std::string, double> timings;

  nlohmann::ordered_json to_json() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace numen::cli
