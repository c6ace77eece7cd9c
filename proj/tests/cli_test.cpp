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

#include "citemetrics/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace citemetrics::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = CITEMETRICS_TEST_DATA_DIR;
const std::string kCorpus = (kData / "fixture" / "corpus.tsv").string();
const std::string kRegistry = (kData / "fixture" / "registry.tsv").string();
const std::string kUnits = (kData / "fixture" / "units.tsv").string();
const std::string kBuckets = (kData / "fixture" / "buckets.tsv").string();

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / name) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"researcher", kCorpus, kRegistry}).code, kExitUsage);
  EXPECT_EQ(invoke({"researcher", kCorpus, kRegistry, "--ref", "A1", "--format", "pdf"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"researcher", kCorpus, kRegistry, "--ref", "A1", "--period", "2006:x"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--format",
                    "bibtex"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--scale", "-1"})
                .code,
            kExitUsage);
  auto bad_ep = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--ep", "x"});
  EXPECT_EQ(bad_ep.code, kExitUsage);
  EXPECT_NE(bad_ep.err.find("--ep"), std::string::npos) << bad_ep.err;
}

TEST(Cli, HelpExitsZero) {
  auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("researcher"), std::string::npos);
}

TEST(Cli, DataErrorsExitTwoAndNameTheInput) {
  auto unknown = invoke({"researcher", kCorpus, kRegistry, "--ref", "nobody"});
  EXPECT_EQ(unknown.code, kExitData);
  EXPECT_NE(unknown.err.find("unknown researcher ref \"nobody\""), std::string::npos);

  auto missing = invoke({"researcher", "/no/such/corpus.tsv", kRegistry, "--ref", "A1"});
  EXPECT_EQ(missing.code, kExitData);
  EXPECT_NE(missing.err.find("/no/such/corpus.tsv"), std::string::npos);

  auto unit = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Gamma"});
  EXPECT_EQ(unit.code, kExitData);
  EXPECT_NE(unit.err.find("Gamma"), std::string::npos);
}

TEST(Cli, ValidateReportsDanglingEdge) {
  TempDir dir("citemetrics_cli_validate");
  auto bad = dir.path() / "bad.tsv";
  write(bad, "P\tp1\t2004\tT\tA,B\nC\tp1\tp9\n");
  auto r = invoke({"validate", bad.string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.out.find("dangling-edge\tdangling edge p1 -> p9"), std::string::npos) << r.out;

  auto ok = invoke({"validate", kCorpus});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "ok\t27 papers\t42 citations\n");

  auto parse_error = dir.path() / "broken.tsv";
  write(parse_error, "P\tp1\n");
  auto pe = invoke({"validate", parse_error.string()});
  EXPECT_EQ(pe.code, kExitData);
  EXPECT_NE(pe.err.find("broken.tsv:1:"), std::string::npos) << pe.err;
}

TEST(Cli, ResearcherMatchesGolden) {
  auto tsv = invoke({"researcher", kCorpus, kRegistry, "--ref", "A1"});
  EXPECT_EQ(tsv.code, kExitOk);
  EXPECT_EQ(tsv.out, slurp(kData / "golden" / "reports" / "A1.tsv"));
  auto bib = invoke({"researcher", kCorpus, kRegistry, "--ref", "A1", "--format", "bibtex"});
  EXPECT_EQ(bib.out, slurp(kData / "golden" / "reports" / "A1.bib"));
}

TEST(Cli, UnitMatchesGolden) {
  auto r = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--ep", "2003:2006",
                   "--rcp", "1999:2006", "--buckets", kBuckets});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, slurp(kData / "golden" / "reports" / "Alpha_Lab.tsv"));

  TempDir dir("citemetrics_cli_unit");
  auto html = dir.path() / "sub" / "alpha.html";
  auto h = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--buckets",
                   kBuckets, "--format", "html", "-o", html.string()});
  EXPECT_EQ(h.code, kExitOk) << h.err;
  EXPECT_TRUE(h.out.empty());
  EXPECT_EQ(slurp(html), slurp(kData / "golden" / "reports" / "Alpha_Lab.html"));
}

TEST(Cli, FlagsOverrideConfigFile) {
  TempDir dir("citemetrics_cli_config");
  auto cfg = dir.path() / "cfg.tsv";
  write(cfg, "ep\t2005:2006\nscale\t1\ndecimals\t2\n");
  auto from_file = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--config",
                           cfg.string()});
  EXPECT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_NE(from_file.out.find("ep\t2005:2006\n"), std::string::npos);
  EXPECT_NE(from_file.out.find("rcp\t2003:2006\n"), std::string::npos);
  EXPECT_NE(from_file.out.find("scale\t1.00\n"), std::string::npos);

  auto flags = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--config",
                       cfg.string(), "--ep", "2003:2006", "--scale", "10"});
  EXPECT_NE(flags.out.find("ep\t2003:2006\n"), std::string::npos);
  EXPECT_NE(flags.out.find("rcp\t1999:2006\n"), std::string::npos);
  EXPECT_NE(flags.out.find("scale\t10.00\n"), std::string::npos);
}

TEST(Cli, WarnsWhenPeriodsDoNotNest) {
  auto r = invoke({"unit", kCorpus, kRegistry, kUnits, "--name", "Alpha Lab", "--ep", "2003:2008",
                   "--rcp", "1999:2006"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning:"), std::string::npos);
}

TEST(Cli, FiguresMatchGoldenTree) {
  TempDir dir("citemetrics_cli_figures");
  auto r = invoke({"figures", kCorpus, kRegistry, kUnits, "--buckets", kBuckets, "--out",
                   dir.path().string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t compared = 0;
  for (const auto& entry : fs::recursive_directory_iterator(kData / "golden")) {
    if (!entry.is_regular_file()) continue;
    auto rel = fs::relative(entry.path(), kData / "golden");
    if (rel.extension() == ".html" || rel.extension() == ".bib" || rel.filename() == "A1.tsv") {
      continue;
    }
    EXPECT_EQ(slurp(dir.path() / rel), slurp(entry.path())) << rel;
    ++compared;
  }
  EXPECT_EQ(compared, 21u);
  for (const auto& entry : fs::recursive_directory_iterator(dir.path())) {
    EXPECT_NE(entry.path().extension(), ".tmp") << entry.path();
  }
}

TEST(Cli, FailedRunLeavesNoPartialFiles) {
  TempDir dir("citemetrics_cli_partial");
  // A directory squatting on the output path makes the rename fail.
  fs::create_directories(dir.path() / "figures" / "int-phd.csv" / "blocker");
  auto r = invoke({"figures", kCorpus, kRegistry, kUnits, "--out", dir.path().string()});
  EXPECT_EQ(r.code, kExitData);
  for (const auto& entry : fs::recursive_directory_iterator(dir.path())) {
    EXPECT_NE(entry.path().extension(), ".tmp") << entry.path();
  }

  // Bad input is detected before anything is written.
  TempDir clean("citemetrics_cli_partial_clean");
  auto bad = invoke({"figures", kCorpus, kRegistry, "/no/such/units.tsv", "--out",
                     clean.path().string()});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_TRUE(fs::is_empty(clean.path()));
}

TEST(Cli, QualityDupes) {
  auto r = invoke({"quality", "dupes", kCorpus});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "entries\t27\npairs\t1\nrate\t0.037037\n\npaper_a\tpaper_b\np06\tp18\n");
}

TEST(Cli, QualityCrosscheck) {
  TempDir dir("citemetrics_cli_cross");
  auto curated = dir.path() / "curated.tsv";
  write(curated, "p01\np02\np03\np04\nc01\tp01\nc02\tp01\n");
  auto r = invoke({"quality", "crosscheck", kCorpus, kRegistry, "--ref", "A1", "--curated",
                   curated.string(), "--period", "1999:2006"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "kind\tcited_papers\nreturned\t4\ncorrect\t3\ncurated\t4\n"
            "precision\t0.7500\nrecall\t0.7500\n");

  auto c = invoke({"quality", "crosscheck", kCorpus, kRegistry, "--ref", "A1", "--curated",
                   curated.string(), "--citations"});
  EXPECT_EQ(c.code, kExitOk) << c.err;
  EXPECT_NE(c.out.find("kind\tnonself_citations\n"), std::string::npos);
  EXPECT_NE(c.out.find("curated\t2\n"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreIdentical) {
  std::vector<std::string> args = {"unit", kCorpus, kRegistry, kUnits, "--name", "Beta Centre"};
  auto a = invoke(args);
  auto b = invoke(args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

}  // namespace
}  // namespace citemetrics::cli
