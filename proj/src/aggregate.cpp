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

#include "citemetrics/aggregate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace citemetrics {

// -----------------------------------------------------------------------------
//     Buckets
// -----------------------------------------------------------------------------

BucketSpec::BucketSpec(std::vector<double> thresholds) : thresholds_(std::move(thresholds)) {
  if (thresholds_.empty()) throw std::invalid_argument("bucket thresholds must not be empty");
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    if (!std::isfinite(thresholds_[i]) || thresholds_[i] < 0) {
      throw std::invalid_argument("bucket thresholds must be finite and non-negative");
    }
    if (i > 0 && !(thresholds_[i - 1] < thresholds_[i])) {
      throw std::invalid_argument("bucket thresholds must be strictly ascending");
    }
  }
}

std::size_t BucketSpec::bucket_of(double value) const {
  auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), value);
  return static_cast<std::size_t>(it - thresholds_.begin());
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string BucketSpec::label(std::size_t bucket) const {
  if (bucket == 0) return "[0," + shortest(thresholds_.front()) + "]";
  if (bucket >= thresholds_.size()) return ">" + shortest(thresholds_.back());
  return "(" + shortest(thresholds_[bucket - 1]) + "," + shortest(thresholds_[bucket]) + "]";
}

Distribution qnt_distribution(std::span<const double> values, const BucketSpec& spec) {
  if (values.empty()) throw std::invalid_argument("distribution over an empty value list");
  std::vector<std::size_t> counts(spec.bucket_count(), 0);
  for (double v : values) ++counts[spec.bucket_of(v)];
  Distribution d{spec, {}};
  d.percentages.reserve(counts.size());
  for (auto c : counts) {
    d.percentages.push_back(100.0 * static_cast<double>(c) / static_cast<double>(values.size()));
  }
  return d;
}

// -----------------------------------------------------------------------------
//     Unique and average aggregates
// -----------------------------------------------------------------------------

namespace {

std::vector<ResearcherMetrics> member_metrics(const UnitRecord& unit, const Registry& registry,
                                              const Corpus& corpus, const YearRange& period) {
  std::vector<ResearcherMetrics> out;
  out.reserve(unit.int_phd.size());
  for (const auto& ref : unit.int_phd) {
    out.push_back(compute_researcher_metrics(ref, registry, corpus, period));
  }
  return out;
}

UniquePapers union_papers(std::span<const ResearcherMetrics> members) {
  UniquePapers u;
  for (const auto& m : members) {
    for (const auto& [id, c] : m.per_paper_citations) {
      if (c.all > 0) u.all.insert(id);
      if (c.nonself > 0) u.nonself.insert(id);
    }
  }
  u.counts = {static_cast<std::int64_t>(u.all.size()),
              static_cast<std::int64_t>(u.nonself.size())};
  return u;
}

UniqueCitations union_citations(const UniquePapers& papers, const Corpus& corpus) {
  UniqueCitations u;
  for (const auto& id : papers.all) {
    for (const auto& e : corpus.citations_to(id)) u.all.insert(e);
  }
  for (const auto& id : papers.nonself) {
    for (const auto& e : corpus.citations_to(id)) {
      if (!is_self_citation(e, corpus)) u.nonself.insert(e);
    }
  }
  u.counts = {static_cast<std::int64_t>(u.all.size()),
              static_cast<std::int64_t>(u.nonself.size())};
  return u;
}

}  // namespace

UniquePapers unique_cited_papers(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& period) {
  return union_papers(member_metrics(unit, registry, corpus, period));
}

UniqueCitations unique_citations(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& period) {
  return union_citations(unique_cited_papers(unit, registry, corpus, period), corpus);
}

AverageMetrics average_metrics(std::span<const ResearcherMetrics> members) {
  if (members.empty()) throw std::invalid_argument("average over an empty roster");
  AverageMetrics avg;
  CountPair papers, cits, h;
  for (const auto& m : members) {
    papers.all += m.cited_papers.all;
    papers.nonself += m.cited_papers.nonself;
    cits.all += m.citations.all;
    cits.nonself += m.citations.nonself;
    h.all += m.h_index.all;
    h.nonself += m.h_index.nonself;
  }
  auto n = static_cast<double>(members.size());
  auto mean = [n](const CountPair& sum) {
    return RatioPair{static_cast<double>(sum.all) / n, static_cast<double>(sum.nonself) / n};
  };
  avg.cited_papers = mean(papers);
  avg.citations = mean(cits);
  avg.h_index = mean(h);
  return avg;
}

AverageMetrics average_metrics(const UnitRecord& unit, const Registry& registry,
                               const Corpus& corpus, const YearRange& period) {
  return average_metrics(member_metrics(unit, registry, corpus, period));
}

PerCapita per_capita(const CountPair& unique_papers, const CountPair& unique_citations,
                     long n_int_phd, long projects, long theses, double scale) {
  if (n_int_phd < 1) throw std::invalid_argument("per-capita figures need at least one Int-PhD");
  if (!(scale > 0)) throw std::invalid_argument("per-capita scale must be positive");
  auto n = static_cast<double>(n_int_phd);
  PerCapita pc;
  pc.papers = {static_cast<double>(unique_papers.all) / n,
               static_cast<double>(unique_papers.nonself) / n};
  pc.citations = {static_cast<double>(unique_citations.all) / n,
                  static_cast<double>(unique_citations.nonself) / n};
  pc.projects = static_cast<double>(projects) / (scale * n);
  pc.theses = static_cast<double>(theses) / (scale * n);
  return pc;
}

// -----------------------------------------------------------------------------
//     Full unit figures
// -----------------------------------------------------------------------------

namespace {

PeriodFigures period_figures(std::span<const ResearcherMetrics> members, const Corpus& corpus,
                             const YearRange& period) {
  PeriodFigures f;
  f.period = period;
  auto papers = union_papers(members);
  auto cits = union_citations(papers, corpus);
  f.unique_cited_papers = papers.counts;
  f.unique_citations = cits.counts;
  auto avg = average_metrics(members);
  f.avg_cited_papers = avg.cited_papers;
  f.avg_citations = avg.citations;
  f.avg_h_index = avg.h_index;
  auto pc = per_capita(papers.counts, cits.counts, static_cast<long>(members.size()), 0, 0);
  f.per_capita_papers = pc.papers;
  f.per_capita_citations = pc.citations;
  return f;
}

template <typename Proj>
std::vector<double> member_values(std::span<const ResearcherMetrics> members, Proj proj) {
  std::vector<double> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(static_cast<double>(proj(m)));
  return out;
}

}  // namespace

UnitMetrics compute_unit_metrics(const UnitRecord& unit, const Registry& registry,
                                 const Corpus& corpus, const YearRange& ep, const YearRange& rcp,
                                 const BucketConfig& buckets, double scale) {
  if (unit.int_phd.empty()) {
    throw std::invalid_argument("unit \"" + unit.name + "\" has an empty Int-PhD roster");
  }
  UnitMetrics u;
  u.unit = unit.name;
  u.n_int_phd = static_cast<long>(unit.int_phd.size());
  u.scale = scale;
  if (!rcp.contains(ep)) {
    u.warnings.push_back("evaluation period " + ep.to_string() +
                         " is not contained in reference period " + rcp.to_string());
  }

  auto rcp_members = member_metrics(unit, registry, corpus, rcp);
  auto ep_members = member_metrics(unit, registry, corpus, ep);
  u.rcp = period_figures(rcp_members, corpus, rcp);
  u.ep = period_figures(ep_members, corpus, ep);

  u.projects_national = unit.projects_national;
  u.projects_international = unit.projects_international;
  u.projects_total = unit.projects_national + unit.projects_international;
  u.phd_theses = unit.phd_theses;
  auto pc = per_capita(u.ep.unique_cited_papers, u.ep.unique_citations, u.n_int_phd,
                       u.projects_total, u.phd_theses, scale);
  u.projects_per_capita_scaled = pc.projects;
  u.theses_per_capita_scaled = pc.theses;

  auto papers_all = [](const ResearcherMetrics& m) { return m.cited_papers.all; };
  auto cits_nonself = [](const ResearcherMetrics& m) { return m.citations.nonself; };
  auto h_nonself = [](const ResearcherMetrics& m) { return m.h_index.nonself; };
  u.papers_rcp = qnt_distribution(member_values(rcp_members, papers_all), buckets.papers);
  u.citations_rcp = qnt_distribution(member_values(rcp_members, cits_nonself), buckets.citations);
  u.h_index_rcp = qnt_distribution(member_values(rcp_members, h_nonself), buckets.h_index);
  u.papers_ep = qnt_distribution(member_values(ep_members, papers_all), buckets.papers);
  u.citations_ep = qnt_distribution(member_values(ep_members, cits_nonself), buckets.citations);
  return u;
}

}  // namespace citemetrics
