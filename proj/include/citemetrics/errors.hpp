// Copyright 2026 The citemetrics Authors
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

#ifndef CITEMETRICS_ERRORS_HPP
#define CITEMETRICS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citemetrics {

/// Base class for every data error raised by the library. The command-line
/// driver maps these to exit status 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the source name and 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : DataError(source + ":" + std::to_string(line) + ": " + what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// Well-formed input that violates a cross-record invariant (dangling edge,
/// duplicate id, unknown reference).
class IntegrityError : public DataError {
 public:
  using DataError::DataError;
};

/// A name that does not resolve: researcher ref, unit name, figure tag.
class LookupError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace citemetrics

#endif  // CITEMETRICS_ERRORS_HPP
