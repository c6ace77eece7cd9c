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

/// @file report.hpp
/// @brief Byte-deterministic emitters for researcher reports (TSV, HTML,
/// BibTeX), unit reports (TSV, HTML), and plot-ready figure CSVs.
///
/// Number formatting is fixed: integers are printed bare, ratios with a fixed
/// number of decimals (4 unless overridden) rounded half-to-even on the exact
/// binary value. Line endings are LF.

#ifndef CITEMETRICS_REPORT_HPP
#define CITEMETRICS_REPORT_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citemetrics/aggregate.hpp"
#include "citemetrics/corpus.hpp"
#include "citemetrics/identity.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

enum class ReportFormat { kTsv, kHtml, kBibtex };

/// Throws LookupError for anything other than tsv, html, bibtex.
ReportFormat parse_report_format(std::string_view tag);
std::string_view format_extension(ReportFormat format);

struct FormatOptions {
  int decimals = 4;
};

std::string format_ratio(double value, const FormatOptions& options = {});

/// Researcher report. The corpus supplies titles, years and authors for the
/// per-paper table and the BibTeX entries.
std::string emit_researcher_report(const ResearcherMetrics& metrics, const Corpus& corpus,
                                   ReportFormat format, const FormatOptions& options = {});

/// Values recovered from a researcher TSV report.
struct ParsedResearcherReport {
  std::string researcher;
  YearRange period;
  CountPair cited_papers;
  CountPair citations;
  RatioPair citations_per_paper;
  CountPair h_index;
  std::map<PaperId, CountPair> per_paper_citations;
};

/// Inverse of the TSV researcher emitter. Throws ParseError.
ParsedResearcherReport parse_researcher_tsv(std::string_view tsv);

/// Unit report; only tsv and html are supported (bibtex throws LookupError).
std::string emit_unit_report(const UnitMetrics& unit, ReportFormat format,
                             const FormatOptions& options = {});

enum class Figure {
  kIntPhd,
  kUniqueCitedPapersRcp,
  kUniqueCitationsRcp,
  kUniqueCitedPapersEp,
  kUniqueCitationsEp,
  kProjectsEp,
  kThesesEp,
  kUniqueCitedPapersPerPhdRcp,
  kUniqueCitationsPerPhdRcp,
  kAvgHIndexRcp,
  kUniqueCitedPapersPerPhdEp,
  kUniqueCitationsPerPhdEp,
  kProjectsPerPhdEp,
  kThesesPerPhdEp,
  kDistributionPapersRcp,
  kDistributionCitationsRcp,
  kDistributionHIndexRcp,
  kDistributionPapersEp,
  kDistributionCitationsEp,
};

inline constexpr std::size_t kFigureCount = 19;

const std::array<Figure, kFigureCount>& all_figures();
std::string_view figure_name(Figure figure);
/// Throws LookupError("unknown figure ...").
Figure parse_figure(std::string_view name);

/// One row per unit, in the order given. Throws std::invalid_argument when
/// `units` is empty.
std::string emit_figure_csv(std::span<const UnitMetrics> units, Figure figure,
                            const FormatOptions& options = {});

}  // namespace citemetrics

#endif  // CITEMETRICS_REPORT_HPP
