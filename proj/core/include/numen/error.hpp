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

#include <stdexcept>
#include <string>

namespace numen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid EncoderConfig, or an n-gram that does not fit the config.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Vectors or indexes whose dimensions (or encoder configs) disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument outside the operation's domain (k = 0, empty
/// word, infeasible synthetic spec).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input: corrupt index files, bad JSONL/TSV lines, duplicate ids.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace numen
