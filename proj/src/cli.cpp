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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "citemetrics/aggregate.hpp"
#include "citemetrics/config.hpp"
#include "citemetrics/corpus.hpp"
#include "citemetrics/errors.hpp"
#include "citemetrics/identity.hpp"
#include "citemetrics/metrics.hpp"
#include "citemetrics/quality.hpp"
#include "citemetrics/report.hpp"

namespace citemetrics::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

YearRange flag_period(const std::string& flag, const std::string& value) {
  try {
    return YearRange::parse(value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string slug(std::string_view name) {
  std::string out;
  for (char c : name) {
    bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '-' || c == '.' || c == '_';
    out.push_back(keep ? c : '_');
  }
  return out.empty() ? "_" : out;
}

void emit(std::ostream& out, const std::string& output, const std::string& content) {
  if (output.empty()) {
    out << content;
  } else {
    write_file_atomic(output, content);
  }
}

struct AnalysisFlags {
  std::string ep;
  std::string rcp;
  std::string buckets;
  std::string config;
  std::optional<double> scale;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ep", ep, "Evaluation period Y1:Y2 (default 2003:2006)");
    cmd->add_option("--rcp", rcp,
                    "Reference contributing period Y1:Y2 (default: twice the EP, ending with it)");
    cmd->add_option("--buckets", buckets, "File with buckets.* threshold entries");
    cmd->add_option("--config", config, "Analysis configuration file");
    cmd->add_option("--scale", scale, "Divisor multiplier for per-capita projects and theses")
        ->check(CLI::PositiveNumber);
  }

  AnalysisConfig resolve() const {
    AnalysisConfig cfg;
    if (!config.empty()) cfg.merge(load_config(fs::path(config)));
    if (!buckets.empty()) cfg.merge(load_config(fs::path(buckets)));
    AnalysisConfig flags;
    if (!ep.empty()) flags.ep = flag_period("--ep", ep);
    if (!rcp.empty()) flags.rcp = flag_period("--rcp", rcp);
    flags.scale = scale;
    cfg.merge(flags);
    if (!cfg.ep) cfg.ep = kDefaultEvaluationPeriod;
    if (!cfg.rcp) cfg.rcp = default_reference_period(*cfg.ep);
    if (!cfg.scale) cfg.scale = 10.0;
    return cfg;
  }
};

FormatOptions format_options(const AnalysisConfig& cfg) {
  FormatOptions opt;
  if (cfg.decimals) opt.decimals = *cfg.decimals;
  return opt;
}

// -----------------------------------------------------------------------------
//     Subcommands
// -----------------------------------------------------------------------------

int cmd_validate(const std::string& corpus_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(corpus_path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file " + corpus_path);
  Corpus corpus = parse_corpus(in, corpus_path);
  auto findings = validate(corpus);
  for (const auto& f : findings) out << finding_kind_name(f.kind) << '\t' << f.message << '\n';
  if (!findings.empty()) {
    err << "error: " << corpus_path << ": " << findings.size() << " finding(s)\n";
    return kExitData;
  }
  out << "ok\t" << corpus.papers().size() << " papers\t" << corpus.edges().size()
      << " citations\n";
  return kExitOk;
}

struct ResearcherArgs {
  std::string corpus, registry, ref, period = "1999:2006", format = "tsv", output;
};

int cmd_researcher(const ResearcherArgs& a, std::ostream& out) {
  auto period = flag_period("--period", a.period);
  ReportFormat format;
  try {
    format = parse_report_format(a.format);
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  }
  Corpus corpus = load_corpus(fs::path(a.corpus));
  Registry registry = load_registry(fs::path(a.registry));
  auto metrics = compute_researcher_metrics(a.ref, registry, corpus, period);
  emit(out, a.output, emit_researcher_report(metrics, corpus, format));
  return kExitOk;
}

struct UnitArgs {
  std::string corpus, registry, units, name, format = "tsv", output, out_dir;
  AnalysisFlags flags;
};

struct LoadedUnits {
  Corpus corpus;
  Registry registry;
  std::vector<UnitRecord> units;
};

LoadedUnits load_all(const UnitArgs& a) {
  LoadedUnits l;
  l.corpus = load_corpus(fs::path(a.corpus));
  l.registry = load_registry(fs::path(a.registry));
  l.units = load_units(fs::path(a.units), l.registry);
  return l;
}

int cmd_unit(const UnitArgs& a, std::ostream& out, std::ostream& err) {
  auto cfg = a.flags.resolve();
  ReportFormat format;
  try {
    format = parse_report_format(a.format);
  } catch (const LookupError& e) {
    throw UsageError(e.what());
  }
  if (format == ReportFormat::kBibtex) throw UsageError("unit reports support tsv and html only");
  auto l = load_all(a);
  auto it = std::find_if(l.units.begin(), l.units.end(),
                         [&](const UnitRecord& u) { return u.name == a.name; });
  if (it == l.units.end()) throw LookupError("unknown unit \"" + a.name + "\"");
  auto metrics = compute_unit_metrics(*it, l.registry, l.corpus, *cfg.ep, *cfg.rcp,
                                      cfg.buckets(), *cfg.scale);
  for (const auto& w : metrics.warnings) err << "warning: " << w << '\n';
  emit(out, a.output, emit_unit_report(metrics, format, format_options(cfg)));
  return kExitOk;
}

int cmd_figures(const UnitArgs& a, std::ostream& out, std::ostream& err) {
  auto cfg = a.flags.resolve();
  auto opt = format_options(cfg);
  auto l = load_all(a);
  if (l.units.empty()) throw DataError("unit file " + a.units + " lists no units");

  std::vector<UnitMetrics> metrics;
  for (const auto& u : l.units) {
    metrics.push_back(
        compute_unit_metrics(u, l.registry, l.corpus, *cfg.ep, *cfg.rcp, cfg.buckets(), *cfg.scale));
    for (const auto& w : metrics.back().warnings) err << "warning: " << u.name << ": " << w << '\n';
  }

  // Render everything before touching the filesystem.
  std::map<fs::path, std::string> files;
  fs::path root(a.out_dir);
  for (auto f : all_figures()) {
    files[root / "figures" / (std::string(figure_name(f)) + ".csv")] =
        emit_figure_csv(metrics, f, opt);
  }
  for (const auto& m : metrics) {
    auto path = root / "reports" / (slug(m.unit) + ".tsv");
    if (files.count(path)) throw DataError("unit names collide in report file " + path.string());
    files[path] = emit_unit_report(m, ReportFormat::kTsv, opt);
  }
  for (const auto& [path, content] : files) write_file_atomic(path, content);
  out << "wrote " << files.size() << " files under " << a.out_dir << '\n';
  return kExitOk;
}

int cmd_dupes(const std::string& corpus_path, std::ostream& out) {
  Corpus corpus = load_corpus(fs::path(corpus_path));
  auto audit = find_duplicates(corpus);
  out << "entries\t" << audit.n_entries << '\n';
  out << "pairs\t" << audit.pairs.size() << '\n';
  out << "rate\t" << format_ratio(audit.rate, {6}) << '\n';
  out << '\n' << "paper_a\tpaper_b\n";
  for (const auto& [x, y] : audit.pairs) out << x << '\t' << y << '\n';
  return kExitOk;
}

struct CrosscheckArgs {
  std::string corpus, registry, ref, curated, period;
  bool citations = false;
};

int cmd_crosscheck(const CrosscheckArgs& a, std::ostream& out) {
  std::optional<YearRange> period;
  if (!a.period.empty()) period = flag_period("--period", a.period);
  Corpus corpus = load_corpus(fs::path(a.corpus));
  Registry registry = load_registry(fs::path(a.registry));
  auto curated = load_curated(fs::path(a.curated));
  const auto& spec = registry.at(a.ref);

  std::set<PaperId> papers;
  for (const auto& id : match_papers(spec, corpus)) {
    if (period && !period->contains(corpus.find(id)->year)) continue;
    if (corpus.citation_count(id) > 0) papers.insert(id);
  }

  CrosscheckResult r;
  if (a.citations) {
    if (curated.citations.empty()) throw DataError(a.curated + " lists no curated citations");
    std::set<CitationEdge> edges;
    for (const auto& id : papers) {
      for (const auto& e : corpus.citations_to(id)) {
        if (!is_self_citation(e, corpus)) edges.insert(e);
      }
    }
    r = crosscheck_citations(edges, curated.citations);
  } else {
    if (curated.papers.empty()) throw DataError(a.curated + " lists no curated papers");
    r = crosscheck(papers, curated.papers);
  }
  out << "kind\t" << (a.citations ? "nonself_citations" : "cited_papers") << '\n';
  out << "returned\t" << r.returned << '\n';
  out << "correct\t" << r.correct << '\n';
  out << "curated\t" << r.curated << '\n';
  out << "precision\t" << format_ratio(r.precision) << (r.precision_by_convention ? "\t(empty)" : "")
      << '\n';
  out << "recall\t" << format_ratio(r.recall) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Citation metrics with self-citation discernment for researchers and units",
               "citemetrics"};
  app.require_subcommand(1);

  std::string validate_corpus;
  auto* validate_cmd = app.add_subcommand("validate", "Check a corpus file for invariant violations");
  validate_cmd->add_option("corpus", validate_corpus, "Corpus file")->required();

  ResearcherArgs ra;
  auto* researcher_cmd = app.add_subcommand("researcher", "Per-researcher citation report");
  researcher_cmd->add_option("corpus", ra.corpus, "Corpus file")->required();
  researcher_cmd->add_option("registry", ra.registry, "Researcher registry file")->required();
  researcher_cmd->add_option("--ref", ra.ref, "Researcher ref")->required();
  researcher_cmd->add_option("--period", ra.period, "Publication years Y1:Y2 (default 1999:2006)");
  researcher_cmd->add_option("--format", ra.format, "tsv, html or bibtex");
  researcher_cmd->add_option("-o,--output", ra.output, "Write to this file instead of stdout");

  UnitArgs ua;
  auto* unit_cmd = app.add_subcommand("unit", "Full figure report for one research unit");
  unit_cmd->add_option("corpus", ua.corpus, "Corpus file")->required();
  unit_cmd->add_option("registry", ua.registry, "Researcher registry file")->required();
  unit_cmd->add_option("units", ua.units, "Unit file")->required();
  unit_cmd->add_option("--name", ua.name, "Unit name")->required();
  unit_cmd->add_option("--format", ua.format, "tsv or html");
  unit_cmd->add_option("-o,--output", ua.output, "Write to this file instead of stdout");
  ua.flags.attach(unit_cmd);

  UnitArgs fa;
  auto* figures_cmd = app.add_subcommand("figures", "Figure CSVs and unit reports for all units");
  figures_cmd->add_option("corpus", fa.corpus, "Corpus file")->required();
  figures_cmd->add_option("registry", fa.registry, "Researcher registry file")->required();
  figures_cmd->add_option("units", fa.units, "Unit file")->required();
  figures_cmd->add_option("--out", fa.out_dir, "Output directory")->required();
  fa.flags.attach(figures_cmd);

  auto* quality_cmd = app.add_subcommand("quality", "Data-quality audits");
  quality_cmd->require_subcommand(1);
  std::string dupes_corpus;
  auto* dupes_cmd = quality_cmd->add_subcommand("dupes", "Equal-title duplicate audit");
  dupes_cmd->add_option("corpus", dupes_corpus, "Corpus file")->required();
  CrosscheckArgs ca;
  auto* cross_cmd =
      quality_cmd->add_subcommand("crosscheck", "Precision and recall against a curated list");
  cross_cmd->add_option("corpus", ca.corpus, "Corpus file")->required();
  cross_cmd->add_option("registry", ca.registry, "Researcher registry file")->required();
  cross_cmd->add_option("--ref", ca.ref, "Researcher ref")->required();
  cross_cmd->add_option("--curated", ca.curated, "Curated list file")->required();
  cross_cmd->add_option("--period", ca.period, "Restrict to publication years Y1:Y2");
  cross_cmd->add_flag("--citations", ca.citations, "Compare non-self citations instead of papers");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(validate_corpus, out, err);
    if (researcher_cmd->parsed()) return cmd_researcher(ra, out);
    if (unit_cmd->parsed()) return cmd_unit(ua, out, err);
    if (figures_cmd->parsed()) return cmd_figures(fa, out, err);
    if (dupes_cmd->parsed()) return cmd_dupes(dupes_corpus, out);
    if (cross_cmd->parsed()) return cmd_crosscheck(ca, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace citemetrics::cli
