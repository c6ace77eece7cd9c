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

#ifndef CITEMETRICS_TEXT_HPP
#define CITEMETRICS_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace citemetrics::text {

/// Folds Latin-1 Supplement and Latin Extended-A letters to their ASCII base
/// letters and drops combining marks (U+0300..U+036F). Other code points and
/// malformed bytes pass through unchanged.
std::string strip_diacritics(std::string_view s);

/// ASCII lowercase; bytes >= 0x80 are left alone.
std::string ascii_lower(std::string_view s);

/// Trims and collapses runs of ASCII whitespace to a single space.
std::string collapse_whitespace(std::string_view s);

/// strip_diacritics + ascii_lower + collapse_whitespace. Used for person
/// names and query terms.
std::string fold(std::string_view s);

/// fold, with ASCII punctuation replaced by spaces before collapsing. Used for
/// title identity and term matching.
std::string fold_words(std::string_view s);

/// First UTF-8 code point of `s`, or an empty string when `s` is empty.
std::string first_code_point(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);

}  // namespace citemetrics::text

#endif  // CITEMETRICS_TEXT_HPP
