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

#ifndef CITEMETRICS_CONFIG_HPP
#define CITEMETRICS_CONFIG_HPP

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "citemetrics/aggregate.hpp"
#include "citemetrics/corpus.hpp"

namespace citemetrics {

/// Optional analysis settings read from a `key <tab> value` file.
///
/// Keys: ep, rcp (Y1:Y2), scale (positive number), decimals (0..12),
/// buckets.papers, buckets.citations, buckets.h_index (comma-separated
/// thresholds). Unset keys stay empty so command-line flags can take
/// precedence over file values.
struct AnalysisConfig {
  std::optional<YearRange> ep;
  std::optional<YearRange> rcp;
  std::optional<double> scale;
  std::optional<int> decimals;
  std::optional<BucketSpec> papers_buckets;
  std::optional<BucketSpec> citations_buckets;
  std::optional<BucketSpec> h_index_buckets;

  /// Fields set in `other` replace ours.
  void merge(const AnalysisConfig& other);
  BucketConfig buckets() const;
};

AnalysisConfig load_config(std::istream& in, const std::string& source = "<config>");
AnalysisConfig load_config(const std::filesystem::path& path);

/// Comma-separated thresholds, e.g. "50,100,150".
BucketSpec parse_bucket_spec(std::string_view text);

inline const YearRange kDefaultEvaluationPeriod{2003, 2006};

/// The reference contributing period: twice the length of `ep`, ending where
/// `ep` ends.
YearRange default_reference_period(const YearRange& ep);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partial file. Creates parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace citemetrics

#endif  // CITEMETRICS_CONFIG_HPP
