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

#ifndef CITEMETRICS_METRICS_HPP
#define CITEMETRICS_METRICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "citemetrics/corpus.hpp"
#include "citemetrics/identity.hpp"

namespace citemetrics {

/// A metric evaluated over all citations and over non-self citations only.
template <typename T>
struct MetricPair {
  T all{};
  T nonself{};

  bool operator==(const MetricPair&) const = default;
};

using CountPair = MetricPair<std::int64_t>;
using RatioPair = MetricPair<double>;

/// A citation is a self-citation when the citing and cited papers share at
/// least one author (by AuthorKey). Throws LookupError on an unknown endpoint.
bool is_self_citation(const CitationEdge& edge, const Corpus& corpus);

/// Largest h such that at least h of `counts` are >= h. Throws
/// std::invalid_argument on a negative count.
std::int64_t h_index(std::span<const std::int64_t> counts);

struct ResearcherMetrics {
  std::string researcher;
  YearRange period;
  std::vector<PaperId> matched_papers;  ///< match order, period-filtered
  CountPair cited_papers;
  CountPair citations;
  RatioPair citations_per_paper;  ///< citations / cited_papers, 0 when none cited
  CountPair h_index;
  std::map<PaperId, CountPair> per_paper_citations;
};

/// Metrics for one researcher over papers published in `period`. Citing papers
/// count regardless of their year.
ResearcherMetrics compute_researcher_metrics(const ResearcherSpec& spec, const Corpus& corpus,
                                             const YearRange& period);

/// Looks up `ref` in the registry first; throws LookupError when absent.
ResearcherMetrics compute_researcher_metrics(std::string_view ref, const Registry& registry,
                                             const Corpus& corpus, const YearRange& period);

}  // namespace citemetrics

#endif  // CITEMETRICS_METRICS_HPP
