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

/// @file corpus.hpp
/// @brief Bibliographic data model: papers, citation edges, research units,
/// and the line-delimited text formats they are loaded from.

#ifndef CITEMETRICS_CORPUS_HPP
#define CITEMETRICS_CORPUS_HPP

#include <compare>
#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace citemetrics {

using PaperId = std::string;

/// A person's name as found in a source record.
struct PersonName {
  std::string family;
  std::vector<std::string> given;
  std::string raw;

  /// Parses `Family,Given1 Given2`. A missing comma yields an empty given list.
  /// Throws std::invalid_argument when the family part is blank.
  static PersonName parse(std::string_view raw);

  /// First character of each given element, in order.
  std::string initials() const;

  /// Canonical `Family,Given1 Given2` rendering.
  std::string to_string() const;

  bool operator==(const PersonName&) const = default;
};

struct PaperRecord {
  PaperId id;
  std::string title;
  int year = 0;
  std::vector<PersonName> authors;
  std::optional<std::string> venue;
  std::vector<std::string> affiliation_terms;

  bool operator==(const PaperRecord&) const = default;
};

/// Directed citation: `citing` cites `cited`.
struct CitationEdge {
  PaperId citing;
  PaperId cited;

  auto operator<=>(const CitationEdge&) const = default;
  bool operator==(const CitationEdge&) const = default;
};

/// Inclusive range of publication years.
struct YearRange {
  int start = 0;
  int end = 0;

  YearRange() = default;
  /// Throws std::invalid_argument unless start <= end.
  YearRange(int start, int end);

  /// Parses `Y1:Y2`; a bare `Y` means `Y:Y`.
  static YearRange parse(std::string_view text);

  bool contains(int year) const noexcept { return year >= start && year <= end; }
  bool contains(const YearRange& other) const noexcept {
    return other.start >= start && other.end <= end;
  }
  int length() const noexcept { return end - start + 1; }
  std::string to_string() const;

  bool operator==(const YearRange&) const = default;
};

enum class Grade { kExcellent, kVeryGood, kGood, kUnpublished };

std::string_view grade_code(Grade g);
std::optional<Grade> parse_grade(std::string_view code);

/// A research unit. `int_phd` holds researcher refs resolved against the
/// registry at load time.
struct UnitRecord {
  std::string name;
  std::vector<std::string> int_phd;
  long projects_national = 0;
  long projects_international = 0;
  long phd_theses = 0;
  std::optional<Grade> grade;

  bool operator==(const UnitRecord&) const = default;
};

/// Immutable snapshot of papers and citation edges.
///
/// Construction does not check integrity so that `validate` can report on
/// flawed data; `load_corpus` is the checked entry point. Papers iterate in
/// id order and edges in (citing, cited) order.
class Corpus {
 public:
  Corpus() = default;

  /// Later papers with an already-seen id are dropped; use load_corpus for
  /// duplicate detection with positions.
  Corpus(std::vector<PaperRecord> papers, std::vector<CitationEdge> edges);

  const std::map<PaperId, PaperRecord>& papers() const noexcept { return papers_; }
  const std::vector<CitationEdge>& edges() const noexcept { return edges_; }

  /// nullptr when unknown.
  const PaperRecord* find(const PaperId& id) const;

  /// Edges whose cited endpoint is `id`, in citing-id order.
  const std::vector<CitationEdge>& citations_to(const PaperId& id) const;

  std::size_t citation_count(const PaperId& id) const { return citations_to(id).size(); }

  bool operator==(const Corpus& other) const {
    return papers_ == other.papers_ && edges_ == other.edges_;
  }

 private:
  std::map<PaperId, PaperRecord> papers_;
  std::vector<CitationEdge> edges_;
  std::map<PaperId, std::vector<CitationEdge>> incoming_;
};

/// One invariant violation found by validate().
struct Finding {
  enum class Kind {
    kSelfLoop,
    kDanglingEdge,
    kDuplicateEdge,
    kEmptyAuthors,
    kEmptyTitle,
    kYearOutOfRange,
    kEmptyFamily,
  };
  Kind kind;
  std::string message;

  bool operator==(const Finding&) const = default;
};

std::string_view finding_kind_name(Finding::Kind kind);

/// Lists every invariant violation; empty iff the corpus is valid.
std::vector<Finding> validate(const Corpus& corpus);

/// Reads the corpus text format without cross-record integrity checks.
/// Syntax errors and duplicate paper ids throw ParseError.
Corpus parse_corpus(std::istream& in, const std::string& source = "<corpus>");

/// parse_corpus followed by validate; any finding throws IntegrityError
/// naming the offending record.
Corpus load_corpus(std::istream& in, const std::string& source = "<corpus>");
Corpus load_corpus(const std::filesystem::path& path);

/// Writes the canonical text form. load_corpus(save_corpus(c)) == c.
void save_corpus(const Corpus& corpus, std::ostream& out);

/// Boundary for bibliographic back ends. Only the file-backed source exists.
class CorpusSource {
 public:
  virtual ~CorpusSource() = default;
  virtual Corpus fetch() const = 0;
};

class FileCorpusSource final : public CorpusSource {
 public:
  explicit FileCorpusSource(std::filesystem::path path) : path_(std::move(path)) {}
  Corpus fetch() const override { return load_corpus(path_); }

 private:
  std::filesystem::path path_;
};

class Registry;

/// Reads unit records; every member ref must exist in `registry`.
std::vector<UnitRecord> load_units(std::istream& in, const Registry& registry,
                                   const std::string& source = "<units>");
std::vector<UnitRecord> load_units(const std::filesystem::path& path, const Registry& registry);

void save_units(const std::vector<UnitRecord>& units, std::ostream& out);

}  // namespace citemetrics

#endif  // CITEMETRICS_CORPUS_HPP
