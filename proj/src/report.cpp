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

#include "citemetrics/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "citemetrics/errors.hpp"
#include "citemetrics/text.hpp"

namespace citemetrics {

ReportFormat parse_report_format(std::string_view tag) {
  if (tag == "tsv") return ReportFormat::kTsv;
  if (tag == "html") return ReportFormat::kHtml;
  if (tag == "bibtex") return ReportFormat::kBibtex;
  throw LookupError("unsupported report format \"" + std::string(tag) + "\"");
}

std::string_view format_extension(ReportFormat format) {
  switch (format) {
    case ReportFormat::kTsv: return "tsv";
    case ReportFormat::kHtml: return "html";
    case ReportFormat::kBibtex: return "bib";
  }
  return "txt";
}

std::string format_ratio(double value, const FormatOptions& options) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[400];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, options.decimals);
  if (ec != std::errc()) throw std::runtime_error("ratio does not fit the output buffer");
  return std::string(buf, ptr);
}

namespace {

std::string cell(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string bibtex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '{': case '}': case '&': case '%': case '$': case '#': case '_':
        out.push_back('\\');
        out.push_back(c);
        break;
      case '\n': case '\r': case '\t': out.push_back(' '); break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

constexpr std::string_view kHtmlStyle =
    "body{font-family:sans-serif;margin:2em}"
    "table{border-collapse:collapse;margin:1em 0}"
    "th,td{border:1px solid #999;padding:.25em .6em;text-align:right}"
    "th:first-child,td:first-child{text-align:left}";

void html_open(std::ostringstream& out, const std::string& title) {
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>"
      << html_escape(title) << "</title>\n<style>" << kHtmlStyle << "</style>\n</head>\n<body>\n"
      << "<h1>" << html_escape(title) << "</h1>\n";
}

void html_close(std::ostringstream& out) { out << "</body>\n</html>\n"; }

void html_row(std::ostringstream& out, const std::vector<std::string>& cells, bool header = false) {
  const char* tag = header ? "th" : "td";
  out << "<tr>";
  for (const auto& c : cells) out << '<' << tag << '>' << html_escape(c) << "</" << tag << '>';
  out << "</tr>\n";
}

// -----------------------------------------------------------------------------
//     Researcher report
// -----------------------------------------------------------------------------

struct MetricRow {
  std::string key;
  std::string label;
  std::string all;
  std::string nonself;
};

std::vector<MetricRow> metric_rows(const ResearcherMetrics& m, const FormatOptions& opt) {
  return {
      {"cited_papers", "Cited papers", std::to_string(m.cited_papers.all),
       std::to_string(m.cited_papers.nonself)},
      {"citations", "Total citations", std::to_string(m.citations.all),
       std::to_string(m.citations.nonself)},
      {"citations_per_paper", "Citations per paper", format_ratio(m.citations_per_paper.all, opt),
       format_ratio(m.citations_per_paper.nonself, opt)},
      {"h_index", "h-index", std::to_string(m.h_index.all), std::to_string(m.h_index.nonself)},
  };
}

std::string researcher_tsv(const ResearcherMetrics& m, const Corpus& corpus,
                           const FormatOptions& opt) {
  std::ostringstream out;
  out << "researcher\t" << cell(m.researcher) << '\n';
  out << "period\t" << m.period.to_string() << '\n';
  out << '\n';
  out << "metric\tall\tnonself\n";
  for (const auto& r : metric_rows(m, opt)) out << r.key << '\t' << r.all << '\t' << r.nonself << '\n';
  out << '\n';
  out << "paper\tyear\ttitle\tcitations\tself_citations\tnonself_citations\n";
  for (const auto& id : m.matched_papers) {
    const auto& c = m.per_paper_citations.at(id);
    const auto* p = corpus.find(id);
    out << cell(id) << '\t' << (p ? std::to_string(p->year) : "") << '\t'
        << (p ? cell(p->title) : "") << '\t' << c.all << '\t' << (c.all - c.nonself) << '\t'
        << c.nonself << '\n';
  }
  return out.str();
}

std::string researcher_html(const ResearcherMetrics& m, const Corpus& corpus,
                            const FormatOptions& opt) {
  std::ostringstream out;
  html_open(out, "Citation analysis: " + m.researcher);
  out << "<p>Papers published " << m.period.start << "&ndash;" << m.period.end << "</p>\n";
  out << "<table class=\"metrics\">\n";
  html_row(out, {"Metric", "All citations", "Excluding self-citations"}, true);
  for (const auto& r : metric_rows(m, opt)) html_row(out, {r.label, r.all, r.nonself});
  out << "</table>\n";
  out << "<table class=\"papers\">\n";
  html_row(out, {"Paper", "Year", "Title", "Citations", "Self-citations", "Non-self-citations"},
           true);
  for (const auto& id : m.matched_papers) {
    const auto& c = m.per_paper_citations.at(id);
    const auto* p = corpus.find(id);
    html_row(out, {id, p ? std::to_string(p->year) : "", p ? p->title : "", std::to_string(c.all),
                   std::to_string(c.all - c.nonself), std::to_string(c.nonself)});
  }
  out << "</table>\n";
  html_close(out);
  return out.str();
}

std::string researcher_bibtex(const ResearcherMetrics& m, const Corpus& corpus) {
  std::ostringstream out;
  out << "% citation analysis: " << m.researcher << ", papers published " << m.period.to_string()
      << '\n';
  for (const auto& id : m.matched_papers) {
    const auto* p = corpus.find(id);
    if (!p) continue;
    out << '\n' << (p->venue ? "@article" : "@misc") << '{' << m.researcher << ':' << id << ",\n";
    out << "  author = {";
    for (std::size_t i = 0; i < p->authors.size(); ++i) {
      if (i) out << " and ";
      const auto& a = p->authors[i];
      out << bibtex_escape(a.family);
      if (!a.given.empty()) {
        out << ", ";
        for (std::size_t g = 0; g < a.given.size(); ++g) {
          if (g) out << ' ';
          out << bibtex_escape(a.given[g]);
        }
      }
    }
    out << "},\n";
    out << "  title = {" << bibtex_escape(p->title) << "},\n";
    if (p->venue) out << "  journal = {" << bibtex_escape(*p->venue) << "},\n";
    out << "  year = {" << p->year << "},\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace

std::string emit_researcher_report(const ResearcherMetrics& metrics, const Corpus& corpus,
                                   ReportFormat format, const FormatOptions& options) {
  switch (format) {
    case ReportFormat::kTsv: return researcher_tsv(metrics, corpus, options);
    case ReportFormat::kHtml: return researcher_html(metrics, corpus, options);
    case ReportFormat::kBibtex: return researcher_bibtex(metrics, corpus);
  }
  throw LookupError("unsupported report format");
}

namespace {

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("<report>", line, "expected an integer, found \"" + std::string(s) + "\"");
  }
  return v;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("<report>", line, "expected a number, found \"" + std::string(s) + "\"");
  }
  return v;
}

}  // namespace

ParsedResearcherReport parse_researcher_tsv(std::string_view tsv) {
  ParsedResearcherReport r;
  auto lines = text::split(tsv, '\n');
  enum class Block { kPreamble, kMetrics, kPapers } block = Block::kPreamble;
  bool saw_metrics = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    std::size_t n = i + 1;
    if (line.empty()) continue;
    auto f = text::split(line, '\t');
    if (f[0] == "metric") {
      block = Block::kMetrics;
      saw_metrics = true;
      continue;
    }
    if (f[0] == "paper") {
      block = Block::kPapers;
      continue;
    }
    switch (block) {
      case Block::kPreamble:
        if (f.size() != 2) throw ParseError("<report>", n, "expected key<tab>value");
        if (f[0] == "researcher") r.researcher = f[1];
        if (f[0] == "period") r.period = YearRange::parse(f[1]);
        break;
      case Block::kMetrics:
        if (f.size() != 3) throw ParseError("<report>", n, "metric row needs 3 fields");
        if (f[0] == "cited_papers") {
          r.cited_papers = {parse_int(f[1], n), parse_int(f[2], n)};
        } else if (f[0] == "citations") {
          r.citations = {parse_int(f[1], n), parse_int(f[2], n)};
        } else if (f[0] == "citations_per_paper") {
          r.citations_per_paper = {parse_double(f[1], n), parse_double(f[2], n)};
        } else if (f[0] == "h_index") {
          r.h_index = {parse_int(f[1], n), parse_int(f[2], n)};
        } else {
          throw ParseError("<report>", n, "unknown metric \"" + f[0] + "\"");
        }
        break;
      case Block::kPapers: {
        if (f.size() != 6) throw ParseError("<report>", n, "paper row needs 6 fields");
        CountPair c{parse_int(f[3], n), parse_int(f[5], n)};
        if (parse_int(f[4], n) != c.all - c.nonself) {
          throw ParseError("<report>", n, "self-citations column disagrees with all - nonself");
        }
        r.per_paper_citations.emplace(f[0], c);
        break;
      }
    }
  }
  if (!saw_metrics) throw ParseError("<report>", lines.size(), "missing metric table");
  return r;
}

// -----------------------------------------------------------------------------
//     Unit report
// -----------------------------------------------------------------------------

namespace {

struct UnitRow {
  std::string section;
  std::string parameter;
  std::string period;
  std::string all;
  std::string nonself;
};

std::vector<UnitRow> unit_rows(const UnitMetrics& u, const FormatOptions& opt) {
  const auto rcp = u.rcp.period.to_string();
  const auto ep = u.ep.period.to_string();
  auto count = [](const CountPair& p) {
    return std::pair{std::to_string(p.all), std::to_string(p.nonself)};
  };
  auto ratio = [&](const RatioPair& p) {
    return std::pair{format_ratio(p.all, opt), format_ratio(p.nonself, opt)};
  };
  std::vector<UnitRow> rows;
  auto add = [&](std::string section, std::string param, const std::string& period,
                 std::pair<std::string, std::string> v) {
    rows.push_back({std::move(section), std::move(param), period, std::move(v.first),
                    std::move(v.second)});
  };
  auto scalar = [](std::string v) { return std::pair{std::move(v), std::string()}; };

  const std::string wr = "weight_relevance_gross";
  add(wr, "int_phd", ep, scalar(std::to_string(u.n_int_phd)));
  add(wr, "unique_cited_papers", rcp, count(u.rcp.unique_cited_papers));
  add(wr, "unique_citations", rcp, count(u.rcp.unique_citations));

  const std::string pi = "production_impact_gross";
  add(pi, "unique_cited_papers", ep, count(u.ep.unique_cited_papers));
  add(pi, "unique_citations", ep, count(u.ep.unique_citations));
  add(pi, "projects_national", ep, scalar(std::to_string(u.projects_national)));
  add(pi, "projects_international", ep, scalar(std::to_string(u.projects_international)));
  add(pi, "projects_total", ep, scalar(std::to_string(u.projects_total)));
  add(pi, "phd_theses", ep, scalar(std::to_string(u.phd_theses)));

  const std::string ewr = "efficiency_weight_relevance";
  add(ewr, "unique_cited_papers_per_int_phd", rcp, ratio(u.rcp.per_capita_papers));
  add(ewr, "unique_citations_per_int_phd", rcp, ratio(u.rcp.per_capita_citations));
  add(ewr, "avg_h_index", rcp, ratio(u.rcp.avg_h_index));

  const std::string epi = "efficiency_production_impact";
  add(epi, "unique_cited_papers_per_int_phd", ep, ratio(u.ep.per_capita_papers));
  add(epi, "unique_citations_per_int_phd", ep, ratio(u.ep.per_capita_citations));
  add(epi, "projects_per_int_phd_scaled", ep, scalar(format_ratio(u.projects_per_capita_scaled, opt)));
  add(epi, "theses_per_int_phd_scaled", ep, scalar(format_ratio(u.theses_per_capita_scaled, opt)));

  const std::string avg = "average";
  for (const auto* f : {&u.rcp, &u.ep}) {
    const auto period = f->period.to_string();
    add(avg, "avg_cited_papers", period, ratio(f->avg_cited_papers));
    add(avg, "avg_citations", period, ratio(f->avg_citations));
    add(avg, "avg_h_index", period, ratio(f->avg_h_index));
  }
  return rows;
}

struct DistributionBlock {
  std::string name;
  std::string period;
  const Distribution* dist;
};

std::vector<DistributionBlock> distribution_blocks(const UnitMetrics& u) {
  const auto rcp = u.rcp.period.to_string();
  const auto ep = u.ep.period.to_string();
  return {
      {"balance_relevance_cited_papers", rcp, &u.papers_rcp},
      {"balance_relevance_citations_nonself", rcp, &u.citations_rcp},
      {"balance_relevance_h_index_nonself", rcp, &u.h_index_rcp},
      {"balance_impact_cited_papers", ep, &u.papers_ep},
      {"balance_impact_citations_nonself", ep, &u.citations_ep},
  };
}

std::string unit_tsv(const UnitMetrics& u, const FormatOptions& opt) {
  std::ostringstream out;
  out << "unit\t" << cell(u.unit) << '\n';
  out << "int_phd\t" << u.n_int_phd << '\n';
  out << "ep\t" << u.ep.period.to_string() << '\n';
  out << "rcp\t" << u.rcp.period.to_string() << '\n';
  out << "scale\t" << format_ratio(u.scale, opt) << '\n';
  for (const auto& w : u.warnings) out << "warning\t" << cell(w) << '\n';
  out << '\n';
  out << "section\tparameter\tperiod\tall\tnonself\n";
  for (const auto& r : unit_rows(u, opt)) {
    out << r.section << '\t' << r.parameter << '\t' << r.period << '\t' << r.all << '\t'
        << r.nonself << '\n';
  }
  out << '\n';
  out << "distribution\tperiod\tbucket\tpercent\n";
  for (const auto& b : distribution_blocks(u)) {
    for (std::size_t i = 0; i < b.dist->percentages.size(); ++i) {
      out << b.name << '\t' << b.period << '\t' << b.dist->spec.label(i) << '\t'
          << format_ratio(b.dist->percentages[i], opt) << '\n';
    }
  }
  return out.str();
}

std::string unit_html(const UnitMetrics& u, const FormatOptions& opt) {
  std::ostringstream out;
  html_open(out, "Unit report: " + u.unit);
  out << "<p>Int-PhD: " << u.n_int_phd << "; evaluation period " << u.ep.period.to_string()
      << "; reference contributing period " << u.rcp.period.to_string() << "</p>\n";
  for (const auto& w : u.warnings) out << "<p class=\"warning\">" << html_escape(w) << "</p>\n";
  std::string section;
  for (const auto& r : unit_rows(u, opt)) {
    if (r.section != section) {
      if (!section.empty()) out << "</table>\n";
      section = r.section;
      out << "<h2>" << html_escape(section) << "</h2>\n<table>\n";
      html_row(out, {"Parameter", "Period", "All", "Excluding self-citations"}, true);
    }
    html_row(out, {r.parameter, r.period, r.all, r.nonself});
  }
  if (!section.empty()) out << "</table>\n";
  for (const auto& b : distribution_blocks(u)) {
    out << "<h2>" << html_escape(b.name) << " (" << html_escape(b.period) << ")</h2>\n<table>\n";
    std::vector<std::string> head{"Bucket"}, values{"% of Int-PhD"};
    for (std::size_t i = 0; i < b.dist->percentages.size(); ++i) {
      head.push_back(b.dist->spec.label(i));
      values.push_back(format_ratio(b.dist->percentages[i], opt));
    }
    html_row(out, head, true);
    html_row(out, values);
    out << "</table>\n";
  }
  html_close(out);
  return out.str();
}

}  // namespace

std::string emit_unit_report(const UnitMetrics& unit, ReportFormat format,
                             const FormatOptions& options) {
  switch (format) {
    case ReportFormat::kTsv: return unit_tsv(unit, options);
    case ReportFormat::kHtml: return unit_html(unit, options);
    case ReportFormat::kBibtex: break;
  }
  throw LookupError("unsupported unit report format \"bibtex\"");
}

// -----------------------------------------------------------------------------
//     Figure CSV
// -----------------------------------------------------------------------------

namespace {

struct FigureInfo {
  Figure figure;
  std::string_view name;
};

constexpr std::array<FigureInfo, kFigureCount> kFigures = {{
    {Figure::kIntPhd, "int-phd"},
    {Figure::kUniqueCitedPapersRcp, "unique-cited-papers-rcp"},
    {Figure::kUniqueCitationsRcp, "unique-citations-rcp"},
    {Figure::kUniqueCitedPapersEp, "unique-cited-papers-ep"},
    {Figure::kUniqueCitationsEp, "unique-citations-ep"},
    {Figure::kProjectsEp, "projects-ep"},
    {Figure::kThesesEp, "theses-ep"},
    {Figure::kUniqueCitedPapersPerPhdRcp, "unique-cited-papers-per-phd-rcp"},
    {Figure::kUniqueCitationsPerPhdRcp, "unique-citations-per-phd-rcp"},
    {Figure::kAvgHIndexRcp, "avg-h-index-rcp"},
    {Figure::kUniqueCitedPapersPerPhdEp, "unique-cited-papers-per-phd-ep"},
    {Figure::kUniqueCitationsPerPhdEp, "unique-citations-per-phd-ep"},
    {Figure::kProjectsPerPhdEp, "projects-per-phd-ep"},
    {Figure::kThesesPerPhdEp, "theses-per-phd-ep"},
    {Figure::kDistributionPapersRcp, "distribution-papers-rcp"},
    {Figure::kDistributionCitationsRcp, "distribution-citations-rcp"},
    {Figure::kDistributionHIndexRcp, "distribution-h-index-rcp"},
    {Figure::kDistributionPapersEp, "distribution-papers-ep"},
    {Figure::kDistributionCitationsEp, "distribution-citations-ep"},
}};

const Distribution* figure_distribution(const UnitMetrics& u, Figure f) {
  switch (f) {
    case Figure::kDistributionPapersRcp: return &u.papers_rcp;
    case Figure::kDistributionCitationsRcp: return &u.citations_rcp;
    case Figure::kDistributionHIndexRcp: return &u.h_index_rcp;
    case Figure::kDistributionPapersEp: return &u.papers_ep;
    case Figure::kDistributionCitationsEp: return &u.citations_ep;
    default: return nullptr;
  }
}

}  // namespace

const std::array<Figure, kFigureCount>& all_figures() {
  static const std::array<Figure, kFigureCount> figures = [] {
    std::array<Figure, kFigureCount> out{};
    for (std::size_t i = 0; i < kFigureCount; ++i) out[i] = kFigures[i].figure;
    return out;
  }();
  return figures;
}

std::string_view figure_name(Figure figure) {
  for (const auto& f : kFigures) {
    if (f.figure == figure) return f.name;
  }
  return "unknown";
}

Figure parse_figure(std::string_view name) {
  for (const auto& f : kFigures) {
    if (f.name == name) return f.figure;
  }
  throw LookupError("unknown figure \"" + std::string(name) + "\"");
}

std::string emit_figure_csv(std::span<const UnitMetrics> units, Figure figure,
                            const FormatOptions& options) {
  if (units.empty()) throw std::invalid_argument("figure CSV needs at least one unit");
  std::ostringstream out;
  auto ratio = [&](double v) { return format_ratio(v, options); };
  auto pair_row = [&](const std::string& name, const std::string& all, const std::string& ns) {
    out << csv_field(name) << ',' << all << ',' << ns << '\n';
  };

  if (const auto* first = figure_distribution(units.front(), figure)) {
    out << "unit";
    for (std::size_t i = 0; i < first->spec.bucket_count(); ++i) {
      out << ',' << csv_field(first->spec.label(i));
    }
    out << '\n';
    for (const auto& u : units) {
      const auto* d = figure_distribution(u, figure);
      if (!(d->spec == first->spec)) {
        throw std::invalid_argument("units use different buckets for figure " +
                                    std::string(figure_name(figure)));
      }
      out << csv_field(u.unit);
      for (double p : d->percentages) out << ',' << ratio(p);
      out << '\n';
    }
    return out.str();
  }

  switch (figure) {
    case Figure::kIntPhd: out << "unit,int_phd\n"; break;
    case Figure::kProjectsEp: out << "unit,national,international,total\n"; break;
    case Figure::kThesesEp: out << "unit,phd_theses\n"; break;
    case Figure::kProjectsPerPhdEp: out << "unit,projects_per_int_phd_scaled\n"; break;
    case Figure::kThesesPerPhdEp: out << "unit,theses_per_int_phd_scaled\n"; break;
    default: out << "unit,all,nonself\n";
  }
  for (const auto& u : units) {
    auto count = [&](const CountPair& p) {
      pair_row(u.unit, std::to_string(p.all), std::to_string(p.nonself));
    };
    auto ratios = [&](const RatioPair& p) { pair_row(u.unit, ratio(p.all), ratio(p.nonself)); };
    switch (figure) {
      case Figure::kIntPhd: out << csv_field(u.unit) << ',' << u.n_int_phd << '\n'; break;
      case Figure::kUniqueCitedPapersRcp: count(u.rcp.unique_cited_papers); break;
      case Figure::kUniqueCitationsRcp: count(u.rcp.unique_citations); break;
      case Figure::kUniqueCitedPapersEp: count(u.ep.unique_cited_papers); break;
      case Figure::kUniqueCitationsEp: count(u.ep.unique_citations); break;
      case Figure::kProjectsEp:
        out << csv_field(u.unit) << ',' << u.projects_national << ',' << u.projects_international
            << ',' << u.projects_total << '\n';
        break;
      case Figure::kThesesEp: out << csv_field(u.unit) << ',' << u.phd_theses << '\n'; break;
      case Figure::kUniqueCitedPapersPerPhdRcp: ratios(u.rcp.per_capita_papers); break;
      case Figure::kUniqueCitationsPerPhdRcp: ratios(u.rcp.per_capita_citations); break;
      case Figure::kAvgHIndexRcp: ratios(u.rcp.avg_h_index); break;
      case Figure::kUniqueCitedPapersPerPhdEp: ratios(u.ep.per_capita_papers); break;
      case Figure::kUniqueCitationsPerPhdEp: ratios(u.ep.per_capita_citations); break;
      case Figure::kProjectsPerPhdEp:
        out << csv_field(u.unit) << ',' << ratio(u.projects_per_capita_scaled) << '\n';
        break;
      case Figure::kThesesPerPhdEp:
        out << csv_field(u.unit) << ',' << ratio(u.theses_per_capita_scaled) << '\n';
        break;
      default: throw LookupError("unknown figure");
    }
  }
  return out.str();
}

}  // namespace citemetrics
