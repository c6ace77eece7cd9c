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

#include "citemetrics/metrics.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "citemetrics/errors.hpp"

namespace citemetrics {

bool is_self_citation(const CitationEdge& edge, const Corpus& corpus) {
  const auto* citing = corpus.find(edge.citing);
  const auto* cited = corpus.find(edge.cited);
  if (!citing || !cited) {
    throw LookupError("citation " + edge.citing + " -> " + edge.cited +
                      " has an endpoint missing from the corpus");
  }
  std::set<AuthorKey> cited_keys;
  for (const auto& a : cited->authors) cited_keys.insert(normalize_name(a));
  return std::any_of(citing->authors.begin(), citing->authors.end(),
                     [&](const PersonName& a) { return cited_keys.count(normalize_name(a)) > 0; });
}

std::int64_t h_index(std::span<const std::int64_t> counts) {
  std::vector<std::int64_t> sorted(counts.begin(), counts.end());
  if (std::any_of(sorted.begin(), sorted.end(), [](std::int64_t c) { return c < 0; })) {
    throw std::invalid_argument("h_index: negative citation count");
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  // sorted[i] >= i + 1 holds for a prefix; its length is h.
  std::int64_t h = 0;
  while (h < static_cast<std::int64_t>(sorted.size()) && sorted[h] >= h + 1) ++h;
  return h;
}

ResearcherMetrics compute_researcher_metrics(const ResearcherSpec& spec, const Corpus& corpus,
                                             const YearRange& period) {
  ResearcherMetrics m;
  m.researcher = spec.ref;
  m.period = period;

  std::vector<std::int64_t> all_counts, nonself_counts;
  for (auto& id : match_papers(spec, corpus)) {
    if (!period.contains(corpus.find(id)->year)) continue;
    CountPair c;
    for (const auto& e : corpus.citations_to(id)) {
      ++c.all;
      if (!is_self_citation(e, corpus)) ++c.nonself;
    }
    all_counts.push_back(c.all);
    nonself_counts.push_back(c.nonself);
    m.citations.all += c.all;
    m.citations.nonself += c.nonself;
    m.cited_papers.all += c.all > 0;
    m.cited_papers.nonself += c.nonself > 0;
    m.per_paper_citations.emplace(id, c);
    m.matched_papers.push_back(std::move(id));
  }
  m.h_index = {h_index(all_counts), h_index(nonself_counts)};
  auto ratio = [](std::int64_t num, std::int64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  m.citations_per_paper = {ratio(m.citations.all, m.cited_papers.all),
                           ratio(m.citations.nonself, m.cited_papers.nonself)};
  return m;
}

ResearcherMetrics compute_researcher_metrics(std::string_view ref, const Registry& registry,
                                             const Corpus& corpus, const YearRange& period) {
  return compute_researcher_metrics(registry.at(ref), corpus, period);
}

}  // namespace citemetrics
