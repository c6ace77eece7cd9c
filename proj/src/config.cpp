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

#include "citemetrics/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "citemetrics/errors.hpp"
#include "citemetrics/text.hpp"
#include "line_reader.hpp"

namespace citemetrics {

void AnalysisConfig::merge(const AnalysisConfig& other) {
  if (other.ep) ep = other.ep;
  if (other.rcp) rcp = other.rcp;
  if (other.scale) scale = other.scale;
  if (other.decimals) decimals = other.decimals;
  if (other.papers_buckets) papers_buckets = other.papers_buckets;
  if (other.citations_buckets) citations_buckets = other.citations_buckets;
  if (other.h_index_buckets) h_index_buckets = other.h_index_buckets;
}

BucketConfig AnalysisConfig::buckets() const {
  BucketConfig b;
  if (papers_buckets) b.papers = *papers_buckets;
  if (citations_buckets) b.citations = *citations_buckets;
  if (h_index_buckets) b.h_index = *h_index_buckets;
  return b;
}

namespace {

double parse_number(std::string_view s) {
  s = text::trim(s);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("\"" + std::string(s) + "\" is not a number");
  }
  return v;
}

}  // namespace

BucketSpec parse_bucket_spec(std::string_view text) {
  std::vector<double> thresholds;
  for (const auto& part : text::split(text, ',')) thresholds.push_back(parse_number(part));
  return BucketSpec(std::move(thresholds));
}

AnalysisConfig load_config(std::istream& in, const std::string& source) {
  AnalysisConfig cfg;
  detail::LineReader reader(in, source);
  while (auto line = reader.next()) {
    auto fields = text::split(*line, '\t');
    if (fields.size() != 2) reader.fail("config line needs key<tab>value");
    auto key = std::string(text::trim(fields[0]));
    auto value = text::trim(fields[1]);
    try {
      if (key == "ep") {
        cfg.ep = YearRange::parse(value);
      } else if (key == "rcp") {
        cfg.rcp = YearRange::parse(value);
      } else if (key == "scale") {
        double s = parse_number(value);
        if (!(s > 0)) throw std::invalid_argument("scale must be positive");
        cfg.scale = s;
      } else if (key == "decimals") {
        double d = parse_number(value);
        if (d < 0 || d > 12 || d != std::floor(d)) {
          throw std::invalid_argument("decimals must be an integer in [0, 12]");
        }
        cfg.decimals = static_cast<int>(d);
      } else if (key == "buckets.papers") {
        cfg.papers_buckets = parse_bucket_spec(value);
      } else if (key == "buckets.citations") {
        cfg.citations_buckets = parse_bucket_spec(value);
      } else if (key == "buckets.h_index") {
        cfg.h_index_buckets = parse_bucket_spec(value);
      } else {
        reader.fail("unknown config key \"" + key + "\"");
      }
    } catch (const std::invalid_argument& e) {
      reader.fail(key + ": " + e.what());
    }
  }
  return cfg;
}

AnalysisConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open config file " + path.string());
  return load_config(in, path.string());
}

YearRange default_reference_period(const YearRange& ep) {
  return YearRange(ep.end - 2 * ep.length() + 1, ep.end);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DataError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw DataError("cannot rename " + tmp.string() + " to " + path.string());
  }
}

}  // namespace citemetrics
