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

#include "citemetrics/quality.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

#include "citemetrics/errors.hpp"
#include "citemetrics/text.hpp"
#include "line_reader.hpp"

namespace citemetrics {

std::string normalize_title(std::string_view title) { return text::fold_words(title); }

DuplicateAudit find_duplicates(const Corpus& corpus) {
  std::map<std::string, std::vector<PaperId>> by_title;
  for (const auto& [id, paper] : corpus.papers()) by_title[normalize_title(paper.title)].push_back(id);

  DuplicateAudit audit;
  audit.n_entries = corpus.papers().size();
  for (const auto& [title, ids] : by_title) {
    // ids are already sorted: papers() iterates in id order.
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) audit.pairs.emplace_back(ids[i], ids[j]);
    }
  }
  std::sort(audit.pairs.begin(), audit.pairs.end());
  if (audit.n_entries > 0) {
    audit.rate = static_cast<double>(audit.pairs.size()) / static_cast<double>(audit.n_entries);
  }
  return audit;
}

CrosscheckResult crosscheck_counts(std::size_t returned, std::size_t correct,
                                   std::size_t curated) {
  if (curated == 0) throw std::invalid_argument("crosscheck needs a non-empty curated list");
  if (correct > returned || correct > curated) {
    throw std::invalid_argument("correct items cannot exceed the returned or curated totals");
  }
  CrosscheckResult r{returned, correct, curated, 1.0, 0.0, false};
  if (returned == 0) {
    r.precision_by_convention = true;
  } else {
    r.precision = static_cast<double>(correct) / static_cast<double>(returned);
  }
  r.recall = static_cast<double>(correct) / static_cast<double>(curated);
  return r;
}

namespace {

template <typename T>
CrosscheckResult crosscheck_sets(const std::set<T>& returned, const std::set<T>& curated) {
  if (curated.empty()) throw std::invalid_argument("crosscheck needs a non-empty curated list");
  std::size_t correct = 0;
  for (const auto& item : returned) correct += curated.count(item);
  return crosscheck_counts(returned.size(), correct, curated.size());
}

}  // namespace

CrosscheckResult crosscheck(const std::set<PaperId>& returned, const std::set<PaperId>& curated) {
  return crosscheck_sets(returned, curated);
}

CrosscheckResult crosscheck_citations(const std::set<CitationEdge>& returned,
                                      const std::set<CitationEdge>& curated) {
  return crosscheck_sets(returned, curated);
}

CuratedList load_curated(std::istream& in, const std::string& source) {
  CuratedList list;
  detail::LineReader reader(in, source);
  while (auto line = reader.next()) {
    auto fields = text::split(*line, '\t');
    if (fields.size() == 1) {
      list.papers.emplace(text::trim(fields[0]));
    } else if (fields.size() == 2) {
      CitationEdge e{std::string(text::trim(fields[0])), std::string(text::trim(fields[1]))};
      if (e.citing.empty() || e.cited.empty()) reader.fail("curated citation has an empty id");
      list.citations.insert(std::move(e));
    } else {
      reader.fail("curated line needs a paper id or citing<tab>cited");
    }
  }
  return list;
}

CuratedList load_curated(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open curated list " + path.string());
  return load_curated(in, path.string());
}

}  // namespace citemetrics
