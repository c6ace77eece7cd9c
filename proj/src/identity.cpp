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

#include "citemetrics/identity.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "citemetrics/errors.hpp"
#include "citemetrics/text.hpp"
#include "line_reader.hpp"

namespace citemetrics {

AuthorKey normalize_name(const PersonName& name) {
  AuthorKey key;
  key.family_norm = text::fold(name.family);
  std::string initial;
  if (!name.given.empty()) initial = text::first_code_point(text::fold(name.given.front()));
  key.first_initial = initial.empty() ? "?" : initial;
  return key;
}

bool same_author(const PersonName& a, const PersonName& b) {
  return normalize_name(a) == normalize_name(b);
}

bool AuthorPattern::matches(const AuthorKey& key) const {
  if (key.family_norm != family) return false;
  return initials.empty() || key.first_initial == text::first_code_point(initials);
}

// -----------------------------------------------------------------------------
//     Query language
// -----------------------------------------------------------------------------

namespace {

std::string fold_initials(std::string_view s) {
  std::string out;
  for (char c : text::fold(s)) {
    if (c != '.' && c != ' ' && c != '-') out.push_back(c);
  }
  return out;
}

AuthorPattern pattern_from_quoted(std::string_view value) {
  auto tokens = text::split_whitespace(value);
  if (tokens.empty()) throw std::invalid_argument("empty author pattern");
  AuthorPattern p;
  if (tokens.size() == 1) {
    p.family = text::fold(tokens[0]);
    return p;
  }
  p.initials = fold_initials(tokens[0]);
  std::string family;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (i > 1) family += ' ';
    family += tokens[i];
  }
  p.family = text::fold(family);
  return p;
}

AuthorPattern pattern_from_bare(std::string_view value) {
  AuthorPattern p;
  auto dash = value.find('-');
  if (dash == std::string_view::npos) {
    p.family = text::fold(value);
  } else {
    p.initials = fold_initials(value.substr(0, dash));
    p.family = text::fold(value.substr(dash + 1));
  }
  if (p.family.empty()) throw std::invalid_argument("empty author pattern");
  return p;
}

class QueryLexer {
 public:
  explicit QueryLexer(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool consume(std::string_view token) {
    skip_space();
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  /// Reads a quoted string; the opening quote must be next.
  std::string quoted() {
    ++pos_;
    auto close = s_.find('"', pos_);
    if (close == std::string_view::npos) fail("unterminated quote");
    std::string out(s_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return out;
  }
  /// Reads up to whitespace, a parenthesis, or a quote.
  std::string bare() {
    auto start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '(' &&
           s_[pos_] != ')' && s_[pos_] != '"') {
      ++pos_;
    }
    if (start == pos_) fail("expected a value");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("query \"" + std::string(s_) + "\": " + what + " at offset " +
                                std::to_string(pos_));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

AuthorPattern read_author_value(QueryLexer& lex) {
  if (lex.peek() == '"') return pattern_from_quoted(lex.quoted());
  return pattern_from_bare(lex.bare());
}

std::string read_term(QueryLexer& lex) {
  lex.skip_space();
  std::string raw = lex.peek() == '"' ? lex.quoted() : lex.bare();
  auto term = text::fold_words(raw);
  if (term.empty()) lex.fail("empty search term");
  return term;
}

bool contains_phrase(std::string_view field, const std::string& phrase) {
  std::string hay = " " + text::fold_words(field) + " ";
  return hay.find(" " + phrase + " ") != std::string::npos;
}

}  // namespace

QueryExpr QueryExpr::parse(std::string_view text) {
  QueryLexer lex(text);
  QueryExpr q;
  bool have_author = false;
  while (!lex.done()) {
    if (lex.consume("-author:")) {
      try {
        q.exclude_authors.push_back(read_author_value(lex));
      } catch (const std::invalid_argument& e) {
        lex.fail(e.what());
      }
    } else if (lex.consume("author:")) {
      if (have_author) lex.fail("more than one author clause");
      try {
        q.author = read_author_value(lex);
      } catch (const std::invalid_argument& e) {
        lex.fail(e.what());
      }
      if (q.author.family.empty()) lex.fail("empty author pattern");
      have_author = true;
    } else if (lex.consume("(")) {
      std::vector<std::string> group{read_term(lex)};
      while (true) {
        if (lex.consume(")")) break;
        if (!lex.consume("OR")) lex.fail("expected OR or ')'");
        group.push_back(read_term(lex));
      }
      q.include_groups.push_back(std::move(group));
    } else if (lex.peek() == '"') {
      q.include_groups.push_back({read_term(lex)});
    } else {
      lex.fail("unexpected token");
    }
  }
  if (!have_author) lex.fail("missing author: clause");
  return q;
}

std::string QueryExpr::to_string() const {
  auto render = [](const AuthorPattern& p) {
    return "\"" + (p.initials.empty() ? p.family : p.initials + " " + p.family) + "\"";
  };
  std::string out = "author:" + render(author);
  for (const auto& g : include_groups) {
    out += " (";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += " OR ";
      out += "\"" + g[i] + "\"";
    }
    out += ")";
  }
  for (const auto& x : exclude_authors) out += " -author:" + render(x);
  return out;
}

bool QueryExpr::matches(const PaperRecord& paper) const {
  std::vector<AuthorKey> keys;
  keys.reserve(paper.authors.size());
  for (const auto& a : paper.authors) keys.push_back(normalize_name(a));

  if (std::none_of(keys.begin(), keys.end(), [&](const AuthorKey& k) { return author.matches(k); })) {
    return false;
  }
  for (const auto& group : include_groups) {
    bool hit = std::any_of(group.begin(), group.end(), [&](const std::string& term) {
      if (contains_phrase(paper.title, term)) return true;
      if (paper.venue && contains_phrase(*paper.venue, term)) return true;
      return std::any_of(paper.affiliation_terms.begin(), paper.affiliation_terms.end(),
                         [&](const std::string& a) { return contains_phrase(a, term); });
    });
    if (!hit) return false;
  }
  for (const auto& x : exclude_authors) {
    if (std::any_of(keys.begin(), keys.end(), [&](const AuthorKey& k) { return x.matches(k); })) {
      return false;
    }
  }
  return true;
}

std::vector<PaperId> match_papers(const ResearcherSpec& spec, const Corpus& corpus) {
  std::vector<std::pair<std::size_t, PaperId>> hits;
  for (const auto& [id, paper] : corpus.papers()) {
    if (spec.query.matches(paper)) hits.emplace_back(corpus.citation_count(id), id);
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  if (spec.result_cap && hits.size() > *spec.result_cap) hits.resize(*spec.result_cap);
  std::vector<PaperId> out;
  out.reserve(hits.size());
  for (auto& h : hits) out.push_back(std::move(h.second));
  return out;
}

// -----------------------------------------------------------------------------
//     Registry
// -----------------------------------------------------------------------------

Registry::Registry(std::vector<ResearcherSpec> specs) {
  for (auto& s : specs) {
    auto ref = s.ref;
    if (!specs_.emplace(ref, std::move(s)).second) {
      throw IntegrityError("duplicate researcher ref \"" + ref + "\"");
    }
  }
}

const ResearcherSpec* Registry::find(std::string_view ref) const {
  auto it = specs_.find(ref);
  return it == specs_.end() ? nullptr : &it->second;
}

const ResearcherSpec& Registry::at(std::string_view ref) const {
  if (const auto* s = find(ref)) return *s;
  throw LookupError("unknown researcher ref \"" + std::string(ref) + "\"");
}

Registry load_registry(std::istream& in, const std::string& source) {
  std::vector<ResearcherSpec> specs;
  std::map<std::string, std::size_t> seen;
  detail::LineReader reader(in, source);
  while (auto line = reader.next()) {
    auto fields = text::split(*line, '\t');
    if (fields[0] != "R") reader.fail("unknown record kind \"" + fields[0] + "\"");
    if (fields.size() < 4 || fields.size() > 5) {
      reader.fail("researcher record needs 4 or 5 tab-separated fields, found " +
                  std::to_string(fields.size()));
    }
    ResearcherSpec spec;
    spec.ref = std::string(text::trim(fields[1]));
    if (spec.ref.empty()) reader.fail("researcher record has an empty ref");
    auto [it, inserted] = seen.emplace(spec.ref, reader.line_number());
    if (!inserted) {
      reader.fail("duplicate researcher ref \"" + spec.ref + "\" (lines " +
                  std::to_string(it->second) + " and " + std::to_string(reader.line_number()) +
                  ")");
    }
    try {
      spec.display_name = PersonName::parse(fields[2]);
      spec.query = QueryExpr::parse(fields[3]);
    } catch (const std::invalid_argument& e) {
      reader.fail("researcher " + spec.ref + ": " + e.what());
    }
    if (fields.size() == 5 && !text::trim(fields[4]).empty()) {
      auto cap_text = text::trim(fields[4]);
      std::size_t cap = 0;
      auto [ptr, ec] = std::from_chars(cap_text.data(), cap_text.data() + cap_text.size(), cap);
      if (ec != std::errc() || ptr != cap_text.data() + cap_text.size() || cap == 0) {
        reader.fail("researcher " + spec.ref + ": result cap \"" + fields[4] +
                    "\" is not a positive integer");
      }
      spec.result_cap = cap;
    }
    specs.push_back(std::move(spec));
  }
  return Registry(std::move(specs));
}

Registry load_registry(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open registry file " + path.string());
  return load_registry(in, path.string());
}

void save_registry(const Registry& registry, std::ostream& out) {
  for (const auto& [ref, s] : registry.specs()) {
    out << "R\t" << ref << '\t' << s.display_name.to_string() << '\t' << s.query.to_string();
    if (s.result_cap) out << '\t' << *s.result_cap;
    out << '\n';
  }
}

}  // namespace citemetrics
