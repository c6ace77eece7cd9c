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

/// @file identity.hpp
/// @brief Author identity keys, the researcher query language, and the
/// researcher registry.

#ifndef CITEMETRICS_IDENTITY_HPP
#define CITEMETRICS_IDENTITY_HPP

#include <compare>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics {

/// Identity granularity for authors: folded family name plus first initial.
struct AuthorKey {
  std::string family_norm;
  std::string first_initial;  ///< One folded code point, or "?".

  auto operator<=>(const AuthorKey&) const = default;
  bool operator==(const AuthorKey&) const = default;
};

AuthorKey normalize_name(const PersonName& name);

/// True iff both names normalize to the same AuthorKey.
bool same_author(const PersonName& a, const PersonName& b);

/// Family name plus optional initials. Only the first initial takes part in
/// matching.
struct AuthorPattern {
  std::string family;    ///< folded
  std::string initials;  ///< folded, may be empty

  bool matches(const AuthorKey& key) const;
  bool operator==(const AuthorPattern&) const = default;
};

/// Parsed researcher query.
///
/// A paper matches iff some author matches `author`, every include group has
/// at least one term present in the title, venue, or affiliation terms, and no
/// author matches an exclusion.
struct QueryExpr {
  AuthorPattern author;
  std::vector<std::vector<std::string>> include_groups;
  std::vector<AuthorPattern> exclude_authors;

  /// Grammar:
  ///   query   := author { group | term | exclude }
  ///   author  := 'author:' ( '"' [initials ' '] family '"' | [initials '-'] family )
  ///   group   := '(' term { 'OR' term } ')'
  ///   term    := '"' text '"'
  ///   exclude := '-author:' ( '"' initials ' ' family '"' | initials '-' family )
  /// A bare term outside parentheses is a single-term group.
  /// Throws std::invalid_argument on malformed input.
  static QueryExpr parse(std::string_view text);

  /// Canonical textual form. parse(to_string()) == *this, except that a
  /// multi-word family with no initials reads back as initials + family.
  std::string to_string() const;

  bool matches(const PaperRecord& paper) const;

  bool operator==(const QueryExpr&) const = default;
};

struct ResearcherSpec {
  std::string ref;
  PersonName display_name;
  QueryExpr query;
  std::optional<std::size_t> result_cap;

  bool operator==(const ResearcherSpec&) const = default;
};

/// Matching papers ordered by total citation count (descending) then id,
/// truncated to `spec.result_cap` when set.
std::vector<PaperId> match_papers(const ResearcherSpec& spec, const Corpus& corpus);

/// Researcher specs keyed by ref.
class Registry {
 public:
  Registry() = default;
  /// Throws IntegrityError on a repeated ref.
  explicit Registry(std::vector<ResearcherSpec> specs);

  /// Throws LookupError("unknown researcher ref ...").
  const ResearcherSpec& at(std::string_view ref) const;
  const ResearcherSpec* find(std::string_view ref) const;
  bool contains(std::string_view ref) const { return find(ref) != nullptr; }

  const std::map<std::string, ResearcherSpec, std::less<>>& specs() const noexcept {
    return specs_;
  }
  std::size_t size() const noexcept { return specs_.size(); }

 private:
  std::map<std::string, ResearcherSpec, std::less<>> specs_;
};

/// Registry line format: `R <tab> ref <tab> Family,Given <tab> query [<tab> cap]`.
Registry load_registry(std::istream& in, const std::string& source = "<registry>");
Registry load_registry(const std::filesystem::path& path);
void save_registry(const Registry& registry, std::ostream& out);

}  // namespace citemetrics

#endif  // CITEMETRICS_IDENTITY_HPP
