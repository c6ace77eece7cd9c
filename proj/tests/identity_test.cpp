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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "citemetrics/errors.hpp"
#include "support/oracle.hpp"
#include "support/random_world.hpp"

namespace citemetrics {
namespace {

PersonName N(const char* s) { return PersonName::parse(s); }

PaperRecord paper(const char* id, std::vector<const char*> authors, const char* title,
                  std::optional<std::string> venue = std::nullopt,
                  std::vector<std::string> aff = {}) {
  PaperRecord p;
  p.id = id;
  p.year = 2004;
  p.title = title;
  for (auto* a : authors) p.authors.push_back(N(a));
  p.venue = std::move(venue);
  p.affiliation_terms = std::move(aff);
  return p;
}

TEST(NormalizeName, FamilyAndFirstInitial) {
  EXPECT_EQ(normalize_name(N("Rocha,Filipe M.")), (AuthorKey{"rocha", "f"}));
  EXPECT_EQ(normalize_name(N("SILVA,M\xC3\xA1rio J.")), (AuthorKey{"silva", "m"}));
  EXPECT_EQ(normalize_name(N("Patr\xC3\xAD" "cio,P.")), (AuthorKey{"patricio", "p"}));
  EXPECT_EQ(normalize_name(N("Plato")), (AuthorKey{"plato", "?"}));
  EXPECT_EQ(normalize_name(N("Rocha,\xC3\x89mile")), (AuthorKey{"rocha", "e"}));
}

TEST(SameAuthor, InitialsVersusFullNames) {
  EXPECT_TRUE(same_author(N("Rocha,Filipe M."), N("Rocha,F.")));
  EXPECT_TRUE(same_author(N("Rocha,F. M."), N("ROCHA,Fernando")));
  EXPECT_FALSE(same_author(N("Rocha,Luis F."), N("Rocha,F.")));
  EXPECT_FALSE(same_author(N("Mouras,Daniel"), N("Moura,Daniel")));
}

TEST(SameAuthor, AgreesWithOracleOnRandomNames) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto a = testing::render_person(rng, testing::pick(rng, 0, 7), testing::pick(rng, 0, 2));
    auto b = testing::render_person(rng, testing::pick(rng, 0, 7), testing::pick(rng, 0, 2));
    EXPECT_EQ(same_author(a, b), testing::oracle_key(a) == testing::oracle_key(b))
        << a.raw << " vs " << b.raw;
  }
}

TEST(AuthorPattern, FirstInitialOnly) {
  AuthorPattern fm{"rocha", "fm"};
  EXPECT_TRUE(fm.matches({"rocha", "f"}));
  EXPECT_FALSE(fm.matches({"rocha", "l"}));
  EXPECT_FALSE(fm.matches({"cout", "f"}));
  AuthorPattern any{"rocha", ""};
  EXPECT_TRUE(any.matches({"rocha", "?"}));
}

TEST(QueryParse, FullForm) {
  auto q = QueryExpr::parse("author:\"fm rocha\" (\"lisbon\" OR \"Lisboa\") -author:lf-rocha");
  EXPECT_EQ(q.author, (AuthorPattern{"rocha", "fm"}));
  ASSERT_EQ(q.include_groups.size(), 1u);
  EXPECT_EQ(q.include_groups[0], (std::vector<std::string>{"lisbon", "lisboa"}));
  ASSERT_EQ(q.exclude_authors.size(), 1u);
  EXPECT_EQ(q.exclude_authors[0], (AuthorPattern{"rocha", "lf"}));
}

TEST(QueryParse, BareAndSingleTerms) {
  auto q = QueryExpr::parse("author:fm-rocha \"gene ontology\" -author:\"l rocha\"");
  EXPECT_EQ(q.author, (AuthorPattern{"rocha", "fm"}));
  EXPECT_EQ(q.include_groups, (std::vector<std::vector<std::string>>{{"gene ontology"}}));
  EXPECT_EQ(q.exclude_authors, (std::vector<AuthorPattern>{{"rocha", "l"}}));

  auto family_only = QueryExpr::parse("author:\"Patr\xC3\xAD" "cio\"");
  EXPECT_EQ(family_only.author, (AuthorPattern{"patricio", ""}));
  EXPECT_EQ(QueryExpr::parse("author:rocha").author, (AuthorPattern{"rocha", ""}));
}

TEST(QueryParse, RejectsMalformedInput) {
  for (const char* bad : {"", "\"lisbon\"", "author:\"\"", "author:\"fm rocha",
                          "author:rocha (\"a\" \"b\")", "author:rocha author:silva",
                          "author:rocha ( )", "author:rocha bogus", "author:rocha (\"a\" OR"}) {
    EXPECT_THROW(QueryExpr::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(QueryParse, CanonicalFormRoundTrips) {
  for (const char* s : {"author:\"fm rocha\" (\"lisbon\" OR \"lisboa\") -author:lf-rocha",
                        "author:silva", "author:m-silva \"web\" \"archive\"",
                        "author:\"p lourenco\" -author:\"a lourenco\" -author:b-lourenco"}) {
    auto q = QueryExpr::parse(s);
    EXPECT_EQ(QueryExpr::parse(q.to_string()), q) << s;
    EXPECT_EQ(QueryExpr::parse(q.to_string()).to_string(), q.to_string());
  }
  EXPECT_EQ(QueryExpr::parse("author:fm-rocha ( \"Lisboa\" OR lisbon )").to_string(),
            "author:\"fm rocha\" (\"lisboa\" OR \"lisbon\")");
}

TEST(QueryMatch, WholePhraseOverTitleVenueAndAffiliations) {
  auto q = QueryExpr::parse("author:rocha \"web\"");
  EXPECT_TRUE(q.matches(paper("a", {"Rocha,F."}, "Web archive search")));
  EXPECT_FALSE(q.matches(paper("b", {"Rocha,F."}, "Website archive")));
  EXPECT_TRUE(q.matches(paper("c", {"Rocha,F."}, "Other", std::string("World Wide Web"))));
  EXPECT_TRUE(q.matches(paper("d", {"Rocha,F."}, "Other", std::nullopt, {"Web lab"})));
  EXPECT_FALSE(q.matches(paper("e", {"Silva,F."}, "Web archive search")));

  auto lis = QueryExpr::parse("author:rocha \"lisbon\"");
  EXPECT_FALSE(lis.matches(paper("f", {"Rocha,F."}, "T", std::nullopt, {"Lisboa"})));
}

TEST(QueryMatch, ExclusionDropsCoauthoredPapers) {
  auto q = QueryExpr::parse("author:\"fm rocha\" -author:lf-rocha");
  EXPECT_TRUE(q.matches(paper("a", {"Rocha,F."}, "T")));
  EXPECT_FALSE(q.matches(paper("b", {"Rocha,Luis F.", "Rocha,F."}, "T")));
  EXPECT_FALSE(q.matches(paper("c", {"Rocha,Luis"}, "T")));
}

TEST(MatchPapers, OrderedByCitationsThenId) {
  Corpus c({paper("p3", {"Rocha,F."}, "T"), paper("p1", {"Rocha,F."}, "T"),
            paper("p2", {"Rocha,F."}, "T"), paper("x", {"Other,A."}, "T")},
           {{"x", "p3"}, {"x", "p2"}, {"p1", "p2"}});
  ResearcherSpec spec{"r", N("Rocha,F."), QueryExpr::parse("author:rocha"), std::nullopt};
  EXPECT_EQ(match_papers(spec, c), (std::vector<PaperId>{"p2", "p3", "p1"}));
  spec.result_cap = 2;
  EXPECT_EQ(match_papers(spec, c), (std::vector<PaperId>{"p2", "p3"}));
}

// Restricting a query never adds papers; a cap always yields a prefix.
TEST(MatchPapers, RestrictionMonotonicityOnRandomCorpora) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> extras = {
      " -author:a-silva", " -author:b-costa", " -author:c-rocha", " (\"lisboa\")",
      " (\"porto\" OR \"braga\")", " \"semantic similarity\"", " (\"bioinformatics\")"};
  for (int iter = 0; iter < 100; ++iter) {
    auto world = testing::make_random_world(rng);
    for (const auto& [ref, base_spec] : world.registry.specs()) {
      ResearcherSpec spec = base_spec;
      spec.result_cap.reset();
      auto base = match_papers(spec, world.corpus);
      std::set<PaperId> base_set(base.begin(), base.end());

      auto restricted = spec;
      restricted.query = QueryExpr::parse(spec.query.to_string() +
                                          extras[testing::pick(rng, 0, extras.size() - 1)]);
      for (const auto& id : match_papers(restricted, world.corpus)) {
        EXPECT_TRUE(base_set.count(id)) << restricted.query.to_string() << " added " << id;
      }

      for (std::size_t k = 1; k <= base.size() + 1; ++k) {
        auto capped = spec;
        capped.result_cap = k;
        auto got = match_papers(capped, world.corpus);
        ASSERT_EQ(got.size(), std::min(k, base.size()));
        EXPECT_TRUE(std::equal(got.begin(), got.end(), base.begin()));
      }
    }
  }
}

TEST(Registry, LookupAndDuplicates) {
  ResearcherSpec a{"A1", N("Rocha,F."), QueryExpr::parse("author:rocha"), std::nullopt};
  Registry reg({a});
  EXPECT_TRUE(reg.contains("A1"));
  EXPECT_EQ(reg.at("A1").ref, "A1");
  EXPECT_EQ(reg.find("nope"), nullptr);
  try {
    reg.at("B9");
    FAIL();
  } catch (const LookupError& e) {
    EXPECT_STREQ(e.what(), "unknown researcher ref \"B9\"");
  }
  EXPECT_THROW(Registry({a, a}), IntegrityError);
}

TEST(Registry, LoadSaveRoundTrip) {
  std::istringstream in(
      "# registry\n"
      "R\tA1\tRocha,Filipe M.\tauthor:\"fm rocha\" (\"lisbon\" OR \"lisboa\") -author:lf-rocha\n"
      "R\tA2\tSilva,M\xC3\xA1rio J.\tauthor:\"mj silva\"\t20\n");
  auto reg = load_registry(in);
  ASSERT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.at("A2").result_cap, 20u);
  EXPECT_FALSE(reg.at("A1").result_cap.has_value());
  std::ostringstream out;
  save_registry(reg, out);
  std::istringstream back(out.str());
  auto again = load_registry(back);
  EXPECT_EQ(again.specs(), reg.specs());
}

TEST(Registry, LoadErrors) {
  auto load_text = [](const std::string& t) {
    std::istringstream in(t);
    return load_registry(in, "r.tsv");
  };
  EXPECT_THROW(load_text("R\tA1\tRocha,F.\tauthor:rocha\t0\n"), ParseError);
  EXPECT_THROW(load_text("R\tA1\tRocha,F.\tauthor:rocha\tx\n"), ParseError);
  EXPECT_THROW(load_text("R\tA1\tRocha,F.\n"), ParseError);
  EXPECT_THROW(load_text("R\tA1\tRocha,F.\tbogus\n"), ParseError);
  try {
    load_text("R\tA1\tRocha,F.\tauthor:rocha\nR\tA1\tSilva,M.\tauthor:silva\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("r.tsv:2:"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace citemetrics
