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

#ifndef CITEMETRICS_SRC_LINE_READER_HPP
#define CITEMETRICS_SRC_LINE_READER_HPP

#include <istream>
#include <optional>
#include <string>

#include "citemetrics/errors.hpp"

namespace citemetrics::detail {

/// Yields the non-blank, non-comment lines of a record file with CR stripped,
/// tracking the 1-based line number for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      return line;
    }
    return std::nullopt;
  }

  std::size_t line_number() const noexcept { return line_; }
  std::string where() const { return source_ + ":" + std::to_string(line_); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source_, line_, what); }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

}  // namespace citemetrics::detail

#endif  // CITEMETRICS_SRC_LINE_READER_HPP
