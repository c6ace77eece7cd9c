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

#ifndef CITEMETRICS_QUALITY_HPP
#define CITEMETRICS_QUALITY_HPP

#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "citemetrics/corpus.hpp"

namespace citemetrics {

/// Canonical title form used for identity: folded, punctuation removed.
std::string normalize_title(std::string_view title);

struct DuplicateAudit {
  std::vector<std::pair<PaperId, PaperId>> pairs;  ///< first < second, sorted
  std::size_t n_entries = 0;
  double rate = 0.0;  ///< pairs / n_entries, 0 for an empty corpus
};

/// Every unordered pair of distinct papers with equal normalized titles.
DuplicateAudit find_duplicates(const Corpus& corpus);

struct CrosscheckResult {
  std::size_t returned = 0;
  std::size_t correct = 0;
  std::size_t curated = 0;
  double precision = 0.0;
  double recall = 0.0;
  /// Set when nothing was returned; precision is then 1.0 by convention.
  bool precision_by_convention = false;
};

/// Throws std::invalid_argument when `curated` is empty.
CrosscheckResult crosscheck(const std::set<PaperId>& returned, const std::set<PaperId>& curated);
CrosscheckResult crosscheck_citations(const std::set<CitationEdge>& returned,
                                      const std::set<CitationEdge>& curated);

/// Builds a result from bare counts, for audits whose item lists are not at
/// hand. Throws std::invalid_argument when curated == 0 or correct exceeds
/// either total.
CrosscheckResult crosscheck_counts(std::size_t returned, std::size_t correct,
                                   std::size_t curated);

/// Curated list: one paper id, or `citing <tab> cited`, per line.
struct CuratedList {
  std::set<PaperId> papers;
  std::set<CitationEdge> citations;
};

CuratedList load_curated(std::istream& in, const std::string& source = "<curated>");
CuratedList load_curated(const std::filesystem::path& path);

}  // namespace citemetrics

#endif  // CITEMETRICS_QUALITY_HPP
