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

#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>

#include "citemetrics/errors.hpp"
#include "citemetrics/identity.hpp"
#include "support/random_world.hpp"

namespace citemetrics {
namespace {

Corpus parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in, "t.tsv");
}

Corpus load(const std::string& text) {
  std::istringstream in(text);
  return load_corpus(in, "t.tsv");
}

template <typename E, typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no exception";
  return {};
}

TEST(PersonName, ParsesFamilyAndGiven) {
  auto n = PersonName::parse(" Rocha , Filipe  M. ");
  EXPECT_EQ(n.family, "Rocha");
  EXPECT_EQ(n.given, (std::vector<std::string>{"Filipe", "M."}));
  EXPECT_EQ(n.initials(), "FM");
  EXPECT_EQ(n.to_string(), "Rocha,Filipe M.");
}

TEST(PersonName, MissingCommaMeansNoGiven) {
  auto n = PersonName::parse("Plato");
  EXPECT_EQ(n.family, "Plato");
  EXPECT_TRUE(n.given.empty());
}

TEST(PersonName, EmptyFamilyThrows) {
  EXPECT_THROW(PersonName::parse(",Ana"), std::invalid_argument);
  EXPECT_THROW(PersonName::parse("  "), std::invalid_argument);
}

TEST(YearRange, ParseAndContain) {
  auto r = YearRange::parse("1999:2006");
  EXPECT_EQ(r, YearRange(1999, 2006));
  EXPECT_EQ(r.length(), 8);
  EXPECT_TRUE(r.contains(1999));
  EXPECT_TRUE(r.contains(2006));
  EXPECT_FALSE(r.contains(2007));
  EXPECT_TRUE(r.contains(YearRange(2003, 2006)));
  EXPECT_FALSE(YearRange(2003, 2006).contains(r));
  EXPECT_EQ(r.to_string(), "1999:2006");
}

TEST(YearRange, RejectsBadInput) {
  EXPECT_THROW(YearRange(2006, 2003), std::invalid_argument);
  EXPECT_EQ(YearRange::parse("2006"), YearRange(2006, 2006));
  EXPECT_THROW(YearRange::parse("2006:"), std::invalid_argument);
  EXPECT_THROW(YearRange::parse("a:b"), std::invalid_argument);
  EXPECT_THROW(YearRange::parse("2006:2003"), std::invalid_argument);
}

TEST(Grade, Codes) {
  for (auto g : {Grade::kExcellent, Grade::kVeryGood, Grade::kGood, Grade::kUnpublished}) {
    EXPECT_EQ(parse_grade(grade_code(g)), g);
  }
  EXPECT_FALSE(parse_grade("XX").has_value());
}

TEST(ParseCorpus, ReadsRecordsAndSkipsComments) {
  auto c = parse(
      "# header\n"
      "\n"
      "P\tp1\t2004\tA title\tRocha,F. M.;Silva,M. J.\tVenue\tLisboa|Porto\r\n"
      "P\tp2\t2005\tOther\tSilva,Ana\n"
      "C\tp2\tp1\n");
  ASSERT_EQ(c.papers().size(), 2u);
  const auto* p1 = c.find("p1");
  ASSERT_NE(p1, nullptr);
  EXPECT_EQ(p1->year, 2004);
  EXPECT_EQ(p1->authors.size(), 2u);
  EXPECT_EQ(p1->venue, "Venue");
  EXPECT_EQ(p1->affiliation_terms, (std::vector<std::string>{"Lisboa", "Porto"}));
  EXPECT_FALSE(c.find("p2")->venue.has_value());
  EXPECT_EQ(c.citation_count("p1"), 1u);
  EXPECT_EQ(c.citation_count("p2"), 0u);
  EXPECT_EQ(c.find("nope"), nullptr);
}

TEST(ParseCorpus, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of<ParseError>([] { parse("# c\nP\tp1\t2004\n"); }),
            "t.tsv:2: paper record needs 5 to 7 tab-separated fields, found 3");
  EXPECT_EQ(error_of<ParseError>([] { parse("P\tp1\tyear\tT\tA,B\n"); }),
            "t.tsv:1: paper p1: year \"year\" is not an integer");
  EXPECT_EQ(error_of<ParseError>([] { parse("X\ta\n"); }), "t.tsv:1: unknown record kind \"X\"");
  EXPECT_EQ(error_of<ParseError>([] { parse("C\ta\n"); }),
            "t.tsv:1: citation record needs 3 tab-separated fields, found 2");
}

TEST(ParseCorpus, DuplicateIdNamesBothLines) {
  auto msg = error_of<ParseError>([] { parse("P\tp1\t2004\tT\tA,B\nP\tp1\t2005\tU\tC,D\n"); });
  EXPECT_NE(msg.find("t.tsv:2:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("duplicate paper id \"p1\""), std::string::npos) << msg;
  EXPECT_NE(msg.find("1"), std::string::npos) << msg;
}

TEST(LoadCorpus, DanglingEdgeIsAnIntegrityError) {
  auto msg = error_of<IntegrityError>([] { load("P\tp1\t2004\tT\tA,B\nC\tp1\tp9\n"); });
  EXPECT_NE(msg.find("dangling edge p1 -> p9: unknown paper \"p9\""), std::string::npos) << msg;
}

TEST(Validate, ReportsEveryKind) {
  PaperRecord bad;
  bad.id = "b";
  bad.year = 1500;
  bad.title = " ";
  PaperRecord good;
  good.id = "g";
  good.year = 2000;
  good.title = "ok";
  good.authors = {PersonName::parse("A,B")};
  Corpus c({bad, good}, {{"g", "g"}, {"g", "x"}, {"b", "g"}, {"b", "g"}});
  auto findings = validate(c);
  std::set<Finding::Kind> kinds;
  for (const auto& f : findings) kinds.insert(f.kind);
  EXPECT_TRUE(kinds.count(Finding::Kind::kSelfLoop));
  EXPECT_TRUE(kinds.count(Finding::Kind::kDanglingEdge));
  EXPECT_TRUE(kinds.count(Finding::Kind::kDuplicateEdge));
  EXPECT_TRUE(kinds.count(Finding::Kind::kEmptyAuthors));
  EXPECT_TRUE(kinds.count(Finding::Kind::kEmptyTitle));
  EXPECT_TRUE(kinds.count(Finding::Kind::kYearOutOfRange));
  EXPECT_EQ(finding_kind_name(Finding::Kind::kSelfLoop), "self-loop");
  EXPECT_EQ(finding_kind_name(Finding::Kind::kDanglingEdge), "dangling-edge");
}

TEST(Validate, CleanCorpusHasNoFindings) {
  std::istringstream in(
      "P\tp1\t2004\tT\tA,B\n"
      "P\tp2\t2005\tU\tC,D\n"
      "C\tp2\tp1\n");
  EXPECT_TRUE(validate(parse_corpus(in)).empty());
}

TEST(SaveCorpus, RoundTripsRandomCorpora) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto world = testing::make_random_world(rng);
    std::ostringstream out;
    save_corpus(world.corpus, out);
    std::istringstream in(out.str());
    auto back = load_corpus(in);
    EXPECT_EQ(back, world.corpus) << "iteration " << i;
    std::ostringstream again;
    save_corpus(back, again);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(Units, LoadAndRoundTrip) {
  std::istringstream reg_in(
      "R\tA1\tRocha,F.\tauthor:\"f rocha\"\n"
      "R\tA2\tSilva,M.\tauthor:\"m silva\"\n");
  auto reg = load_registry(reg_in);
  std::istringstream in(
      "# units\n"
      "U\tZeta\tA2\t1\t0\t2\n"
      "U\tAlpha\tA1;A2\t3\t2\t4\tEX\n");
  auto units = load_units(in, reg);
  ASSERT_EQ(units.size(), 2u);
  EXPECT_EQ(units[0].name, "Alpha");
  EXPECT_EQ(units[0].int_phd, (std::vector<std::string>{"A1", "A2"}));
  EXPECT_EQ(units[0].grade, Grade::kExcellent);
  EXPECT_FALSE(units[1].grade.has_value());

  std::ostringstream out;
  save_units(units, out);
  std::istringstream back(out.str());
  EXPECT_EQ(load_units(back, reg), units);
}

TEST(Units, RejectsBadRosters) {
  std::istringstream reg_in("R\tA1\tRocha,F.\tauthor:\"f rocha\"\n");
  auto reg = load_registry(reg_in);
  auto load_text = [&](const std::string& t) {
    std::istringstream in(t);
    return load_units(in, reg);
  };
  auto msg = error_of<IntegrityError>([&] { load_text("U\tX\tA1;Z9\t0\t0\t0\n"); });
  EXPECT_NE(msg.find("Z9"), std::string::npos) << msg;
  EXPECT_THROW(load_text("U\tX\tA1;A1\t0\t0\t0\n"), IntegrityError);
  EXPECT_THROW(load_text("U\tX\t\t0\t0\t0\n"), IntegrityError);
  EXPECT_THROW(load_text("U\tX\tA1\t-1\t0\t0\n"), ParseError);
  EXPECT_THROW(load_text("U\tX\tA1\t0\t0\t0\nU\tX\tA1\t0\t0\t0\n"), ParseError);
  EXPECT_THROW(load_text("U\tX\tA1\t0\t0\t0\tZZ\n"), ParseError);
}

}  // namespace
}  // namespace citemetrics
