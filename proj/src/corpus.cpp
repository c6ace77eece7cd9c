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

#include "citemetrics/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "citemetrics/errors.hpp"
#include "citemetrics/identity.hpp"
#include "citemetrics/text.hpp"
#include "line_reader.hpp"

namespace citemetrics {

// -----------------------------------------------------------------------------
//     PersonName / YearRange / Grade
// -----------------------------------------------------------------------------

PersonName PersonName::parse(std::string_view raw) {
  PersonName name;
  auto trimmed = text::trim(raw);
  name.raw = std::string(trimmed);
  auto comma = trimmed.find(',');
  auto family = text::trim(trimmed.substr(0, comma));
  if (text::fold(family).empty()) {
    throw std::invalid_argument("author name \"" + name.raw + "\" has an empty family name");
  }
  name.family = std::string(family);
  if (comma != std::string_view::npos) {
    name.given = text::split_whitespace(trimmed.substr(comma + 1));
  }
  return name;
}

std::string PersonName::initials() const {
  std::string out;
  for (const auto& g : given) out += text::first_code_point(g);
  return out;
}

std::string PersonName::to_string() const {
  std::string out = family;
  if (!given.empty()) {
    out += ',';
    for (std::size_t i = 0; i < given.size(); ++i) {
      if (i) out += ' ';
      out += given[i];
    }
  }
  return out;
}

YearRange::YearRange(int start, int end) : start(start), end(end) {
  if (start > end) {
    throw std::invalid_argument("year range " + std::to_string(start) + ":" +
                                std::to_string(end) + " has start after end");
  }
}

namespace {

std::optional<long> parse_long(std::string_view s) {
  s = text::trim(s);
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

YearRange YearRange::parse(std::string_view text) {
  auto colon = text.find(':');
  auto first = parse_long(text.substr(0, colon));
  auto second = colon == std::string_view::npos ? first : parse_long(text.substr(colon + 1));
  if (!first || !second) {
    throw std::invalid_argument("bad year range \"" + std::string(text) +
                                "\" (expected Y1:Y2)");
  }
  return YearRange(static_cast<int>(*first), static_cast<int>(*second));
}

std::string YearRange::to_string() const {
  return std::to_string(start) + ":" + std::to_string(end);
}

std::string_view grade_code(Grade g) {
  switch (g) {
    case Grade::kExcellent: return "EX";
    case Grade::kVeryGood: return "VG";
    case Grade::kGood: return "GD";
    case Grade::kUnpublished: return "unpublished";
  }
  return "unpublished";
}

std::optional<Grade> parse_grade(std::string_view code) {
  if (code == "EX") return Grade::kExcellent;
  if (code == "VG") return Grade::kVeryGood;
  if (code == "GD") return Grade::kGood;
  if (code == "unpublished") return Grade::kUnpublished;
  return std::nullopt;
}

// -----------------------------------------------------------------------------
//     Corpus
// -----------------------------------------------------------------------------

Corpus::Corpus(std::vector<PaperRecord> papers, std::vector<CitationEdge> edges) {
  for (auto& p : papers) {
    auto id = p.id;
    papers_.try_emplace(std::move(id), std::move(p));
  }
  edges_ = std::move(edges);
  std::stable_sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) incoming_[e.cited].push_back(e);
}

const PaperRecord* Corpus::find(const PaperId& id) const {
  auto it = papers_.find(id);
  return it == papers_.end() ? nullptr : &it->second;
}

const std::vector<CitationEdge>& Corpus::citations_to(const PaperId& id) const {
  static const std::vector<CitationEdge> kNone;
  auto it = incoming_.find(id);
  return it == incoming_.end() ? kNone : it->second;
}

std::string_view finding_kind_name(Finding::Kind kind) {
  switch (kind) {
    case Finding::Kind::kSelfLoop: return "self-loop";
    case Finding::Kind::kDanglingEdge: return "dangling-edge";
    case Finding::Kind::kDuplicateEdge: return "duplicate-edge";
    case Finding::Kind::kEmptyAuthors: return "empty-authors";
    case Finding::Kind::kEmptyTitle: return "empty-title";
    case Finding::Kind::kYearOutOfRange: return "year-out-of-range";
    case Finding::Kind::kEmptyFamily: return "empty-family";
  }
  return "unknown";
}

std::vector<Finding> validate(const Corpus& corpus) {
  std::vector<Finding> out;
  for (const auto& [id, paper] : corpus.papers()) {
    if (text::trim(paper.title).empty()) {
      out.push_back({Finding::Kind::kEmptyTitle, "paper " + id + " has an empty title"});
    }
    if (paper.year < 1900 || paper.year > 2100) {
      out.push_back({Finding::Kind::kYearOutOfRange,
                     "paper " + id + " has year " + std::to_string(paper.year) +
                         " outside [1900, 2100]"});
    }
    if (paper.authors.empty()) {
      out.push_back({Finding::Kind::kEmptyAuthors, "paper " + id + " has no authors"});
    }
    for (const auto& a : paper.authors) {
      if (text::fold(a.family).empty()) {
        out.push_back({Finding::Kind::kEmptyFamily,
                       "paper " + id + " has an author with an empty family name"});
      }
    }
  }
  const CitationEdge* prev = nullptr;
  for (const auto& e : corpus.edges()) {
    std::string edge = e.citing + " -> " + e.cited;
    if (e.citing == e.cited) {
      out.push_back({Finding::Kind::kSelfLoop, "self-loop edge " + edge});
    }
    for (const auto* end : {&e.citing, &e.cited}) {
      if (!corpus.find(*end)) {
        out.push_back({Finding::Kind::kDanglingEdge,
                       "dangling edge " + edge + ": unknown paper \"" + *end + "\""});
      }
    }
    if (prev && *prev == e) {
      out.push_back({Finding::Kind::kDuplicateEdge, "duplicate edge " + edge});
    }
    prev = &e;
  }
  return out;
}

Corpus parse_corpus(std::istream& in, const std::string& source) {
  std::vector<PaperRecord> papers;
  std::vector<CitationEdge> edges;
  std::unordered_map<PaperId, std::size_t> seen;

  detail::LineReader reader(in, source);
  while (auto line = reader.next()) {
    auto fields = text::split(*line, '\t');
    const auto& kind = fields[0];
    if (kind == "P") {
      if (fields.size() < 5 || fields.size() > 7) {
        reader.fail("paper record needs 5 to 7 tab-separated fields, found " +
                    std::to_string(fields.size()));
      }
      PaperRecord p;
      p.id = std::string(text::trim(fields[1]));
      if (p.id.empty()) reader.fail("paper record has an empty id");
      auto year = parse_long(fields[2]);
      if (!year) reader.fail("paper " + p.id + ": year \"" + fields[2] + "\" is not an integer");
      p.year = static_cast<int>(*year);
      p.title = fields[3];
      if (!text::trim(fields[4]).empty()) {
        for (const auto& a : text::split(fields[4], ';')) {
          try {
            p.authors.push_back(PersonName::parse(a));
          } catch (const std::invalid_argument& e) {
            reader.fail("paper " + p.id + ": " + e.what());
          }
        }
      }
      if (fields.size() > 5 && !text::trim(fields[5]).empty()) p.venue = fields[5];
      if (fields.size() > 6) {
        for (const auto& t : text::split(fields[6], '|')) {
          auto term = text::trim(t);
          if (!term.empty()) p.affiliation_terms.emplace_back(term);
        }
      }
      auto [it, inserted] = seen.emplace(p.id, reader.line_number());
      if (!inserted) {
        reader.fail("duplicate paper id \"" + p.id + "\" (lines " + std::to_string(it->second) +
                    " and " + std::to_string(reader.line_number()) + ")");
      }
      papers.push_back(std::move(p));
    } else if (kind == "C") {
      if (fields.size() != 3) {
        reader.fail("citation record needs 3 tab-separated fields, found " +
                    std::to_string(fields.size()));
      }
      CitationEdge e{std::string(text::trim(fields[1])), std::string(text::trim(fields[2]))};
      if (e.citing.empty() || e.cited.empty()) reader.fail("citation record has an empty id");
      edges.push_back(std::move(e));
    } else {
      reader.fail("unknown record kind \"" + kind + "\"");
    }
  }
  return Corpus(std::move(papers), std::move(edges));
}

Corpus load_corpus(std::istream& in, const std::string& source) {
  Corpus corpus = parse_corpus(in, source);
  auto findings = validate(corpus);
  if (!findings.empty()) {
    std::string msg = source + ": ";
    for (std::size_t i = 0; i < findings.size(); ++i) {
      if (i) msg += "; ";
      msg += findings[i].message;
    }
    throw IntegrityError(msg);
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + path.string());
  return load_corpus(in, path.string());
}

namespace {

std::string render_name(const PersonName& n) {
  if (!n.raw.empty()) {
    try {
      auto reparsed = PersonName::parse(n.raw);
      if (reparsed.family == n.family && reparsed.given == n.given) return n.raw;
    } catch (const std::invalid_argument&) {
    }
  }
  return n.to_string();
}

}  // namespace

void save_corpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& [id, p] : corpus.papers()) {
    out << "P\t" << id << '\t' << p.year << '\t' << p.title << '\t';
    for (std::size_t i = 0; i < p.authors.size(); ++i) {
      if (i) out << ';';
      out << render_name(p.authors[i]);
    }
    out << '\t' << p.venue.value_or("") << '\t';
    for (std::size_t i = 0; i < p.affiliation_terms.size(); ++i) {
      if (i) out << '|';
      out << p.affiliation_terms[i];
    }
    out << '\n';
  }
  for (const auto& e : corpus.edges()) out << "C\t" << e.citing << '\t' << e.cited << '\n';
}

// -----------------------------------------------------------------------------
//     Units
// -----------------------------------------------------------------------------

std::vector<UnitRecord> load_units(std::istream& in, const Registry& registry,
                                   const std::string& source) {
  std::vector<UnitRecord> units;
  std::set<std::string> names;
  detail::LineReader reader(in, source);
  while (auto line = reader.next()) {
    auto fields = text::split(*line, '\t');
    if (fields[0] != "U") reader.fail("unknown record kind \"" + fields[0] + "\"");
    if (fields.size() < 6 || fields.size() > 7) {
      reader.fail("unit record needs 6 or 7 tab-separated fields, found " +
                  std::to_string(fields.size()));
    }
    UnitRecord u;
    u.name = std::string(text::trim(fields[1]));
    if (u.name.empty()) reader.fail("unit record has an empty name");
    if (!names.insert(u.name).second) {
      reader.fail("duplicate unit name \"" + u.name + "\"");
    }
    std::set<std::string> members;
    for (const auto& r : text::split(fields[2], ';')) {
      auto ref = std::string(text::trim(r));
      if (ref.empty()) continue;
      if (!registry.contains(ref)) {
        throw IntegrityError(reader.where() + ": unit \"" + u.name +
                             "\" references unknown researcher \"" + ref + "\"");
      }
      if (!members.insert(ref).second) {
        throw IntegrityError(reader.where() + ": unit \"" + u.name + "\" lists researcher \"" +
                             ref + "\" twice");
      }
      u.int_phd.push_back(ref);
    }
    if (u.int_phd.empty()) {
      throw IntegrityError(reader.where() + ": unit \"" + u.name + "\" has an empty Int-PhD roster");
    }
    long* counts[] = {&u.projects_national, &u.projects_international, &u.phd_theses};
    const char* labels[] = {"projects_national", "projects_international", "phd_theses"};
    for (int i = 0; i < 3; ++i) {
      auto v = parse_long(fields[3 + i]);
      if (!v) reader.fail(std::string(labels[i]) + " \"" + fields[3 + i] + "\" is not an integer");
      if (*v < 0) reader.fail(std::string(labels[i]) + " is negative (" + fields[3 + i] + ")");
      *counts[i] = *v;
    }
    if (fields.size() == 7 && !text::trim(fields[6]).empty()) {
      u.grade = parse_grade(text::trim(fields[6]));
      if (!u.grade) reader.fail("unknown grade \"" + fields[6] + "\"");
    }
    units.push_back(std::move(u));
  }
  std::sort(units.begin(), units.end(),
            [](const UnitRecord& a, const UnitRecord& b) { return a.name < b.name; });
  return units;
}

std::vector<UnitRecord> load_units(const std::filesystem::path& path, const Registry& registry) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open unit file " + path.string());
  return load_units(in, registry, path.string());
}

void save_units(const std::vector<UnitRecord>& units, std::ostream& out) {
  for (const auto& u : units) {
    out << "U\t" << u.name << '\t';
    for (std::size_t i = 0; i < u.int_phd.size(); ++i) {
      if (i) out << ';';
      out << u.int_phd[i];
    }
    out << '\t' << u.projects_national << '\t' << u.projects_international << '\t'
        << u.phd_theses << '\t' << (u.grade ? grade_code(*u.grade) : "") << '\n';
  }
}

}  // namespace citemetrics
