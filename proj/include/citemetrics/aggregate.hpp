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

/// @file aggregate.hpp
/// @brief Unit-level figures: unique (union) and average aggregates over a
/// roster, per-capita efficiency, and bucketed member distributions.

#ifndef CITEMETRICS_AGGREGATE_HPP
#define CITEMETRICS_AGGREGATE_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "citemetrics/corpus.hpp"
#include "citemetrics/identity.hpp"
#include "citemetrics/metrics.hpp"

namespace citemetrics {

/// Bucket thresholds t1 < t2 < ... < tk. Bucket 0 is [0, t1], bucket i is
/// (t_i, t_{i+1}], the last is (tk, inf).
class BucketSpec {
 public:
  /// Throws std::invalid_argument unless non-empty, non-negative and strictly
  /// ascending.
  explicit BucketSpec(std::vector<double> thresholds);

  const std::vector<double>& thresholds() const noexcept { return thresholds_; }
  std::size_t bucket_count() const noexcept { return thresholds_.size() + 1; }
  std::size_t bucket_of(double value) const;

  /// Human-readable bucket label, e.g. "[0,50]", "(50,100]", ">150".
  std::string label(std::size_t bucket) const;

  bool operator==(const BucketSpec&) const = default;

 private:
  std::vector<double> thresholds_;
};

struct Distribution {
  BucketSpec spec{{50, 100, 150}};
  std::vector<double> percentages;
};

/// Percentage of `values` falling in each bucket. Throws std::invalid_argument
/// when `values` is empty.
Distribution qnt_distribution(std::span<const double> values, const BucketSpec& spec);

struct UniquePapers {
  CountPair counts;
  std::set<PaperId> all;
  std::set<PaperId> nonself;
};

struct UniqueCitations {
  CountPair counts;
  std::set<CitationEdge> all;
  std::set<CitationEdge> nonself;
};

/// Union over the roster of period-filtered matched papers with at least one
/// citation of the respective kind.
UniquePapers unique_cited_papers(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& period);

/// Distinct (citing, cited) edges into the unique cited papers; the nonself
/// set drops self-citations.
UniqueCitations unique_citations(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& period);

struct AverageMetrics {
  RatioPair cited_papers;
  RatioPair citations;
  RatioPair h_index;
};

/// Arithmetic mean of the members' ResearcherMetrics. Throws
/// std::invalid_argument on an empty roster.
AverageMetrics average_metrics(const UnitRecord& unit, const Registry& registry,
                               const Corpus& corpus, const YearRange& period);
AverageMetrics average_metrics(std::span<const ResearcherMetrics> members);

struct PerCapita {
  RatioPair papers;
  RatioPair citations;
  double projects = 0.0;
  double theses = 0.0;
};

/// Papers and citations over n; projects and theses over scale * n.
PerCapita per_capita(const CountPair& unique_papers, const CountPair& unique_citations,
                     long n_int_phd, long projects, long theses, double scale = 10.0);

/// Figures for one reference period.
struct PeriodFigures {
  YearRange period;
  CountPair unique_cited_papers;
  CountPair unique_citations;
  RatioPair avg_cited_papers;
  RatioPair avg_citations;
  RatioPair avg_h_index;
  RatioPair per_capita_papers;
  RatioPair per_capita_citations;
};

struct BucketConfig {
  BucketSpec papers{{50, 100, 150}};
  BucketSpec citations{{100, 500, 1000}};
  BucketSpec h_index{{3, 6, 9}};
};

/// Full figure set for a unit: gross and per-capita over the reference
/// contributing period (rcp) and the evaluation period (ep), projects and
/// theses, and the five member distributions.
struct UnitMetrics {
  std::string unit;
  long n_int_phd = 0;
  double scale = 10.0;

  PeriodFigures rcp;
  PeriodFigures ep;

  long projects_national = 0;
  long projects_international = 0;
  long projects_total = 0;
  long phd_theses = 0;
  double projects_per_capita_scaled = 0.0;
  double theses_per_capita_scaled = 0.0;

  Distribution papers_rcp;     ///< cited papers (all)
  Distribution citations_rcp;  ///< citations (nonself)
  Distribution h_index_rcp;    ///< h-index (nonself)
  Distribution papers_ep;
  Distribution citations_ep;

  std::vector<std::string> warnings;
};

UnitMetrics compute_unit_metrics(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& ep, const YearRange& rcp,
                                 const BucketConfig& buckets = {}, double scale = 10.0);

}  // namespace citemetrics

#endif  // CITEMETRICS_AGGREGATE_HPP
