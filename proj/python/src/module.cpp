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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "citemetrics/aggregate.hpp"
#include "citemetrics/config.hpp"
#include "citemetrics/corpus.hpp"
#include "citemetrics/errors.hpp"
#include "citemetrics/identity.hpp"
#include "citemetrics/metrics.hpp"
#include "citemetrics/quality.hpp"
#include "citemetrics/report.hpp"

namespace py = pybind11;
using namespace citemetrics;

namespace {

template <typename T>
void bind_pair(py::module_& m, const char* name) {
  using P = MetricPair<T>;
  py::class_<P>(m, name)
      .def(py::init<>())
      .def(py::init([](T all, T nonself) { return P{all, nonself}; }), py::arg("all"),
           py::arg("nonself"))
      .def_readwrite("all", &P::all)
      .def_readwrite("nonself", &P::nonself)
      .def(py::self == py::self)
      .def("__iter__",
           [](const P& p) { return py::iter(py::make_tuple(p.all, p.nonself)); })
      .def("__repr__", [name](const P& p) {
        return std::string(name) + "(all=" + std::string(py::repr(py::cast(p.all))) +
               ", nonself=" + std::string(py::repr(py::cast(p.nonself))) + ")";
      });
}

std::istringstream stream_of(const std::string& text) { return std::istringstream(text); }

FormatOptions options_of(int decimals) {
  FormatOptions o;
  o.decimals = decimals;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Citation metrics for researchers and research units.";

  auto data_error = py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", data_error);
  py::register_exception<IntegrityError>(m, "IntegrityError", data_error);
  py::register_exception<LookupError>(m, "LookupError", data_error);

  // corpus

  py::class_<YearRange>(m, "YearRange")
      .def(py::init<int, int>(), py::arg("start"), py::arg("end"))
      .def_static("parse", &YearRange::parse)
      .def_readonly("start", &YearRange::start)
      .def_readonly("end", &YearRange::end)
      .def("__len__", &YearRange::length)
      .def("__contains__", py::overload_cast<int>(&YearRange::contains, py::const_))
      .def("contains", py::overload_cast<const YearRange&>(&YearRange::contains, py::const_))
      .def(py::self == py::self)
      .def("__hash__", [](const YearRange& r) { return std::hash<int>{}(r.start * 10000 + r.end); })
      .def("__str__", &YearRange::to_string)
      .def("__repr__", [](const YearRange& r) { return "YearRange('" + r.to_string() + "')"; });

  py::class_<PersonName>(m, "PersonName")
      .def_static("parse", &PersonName::parse)
      .def_readonly("family", &PersonName::family)
      .def_readonly("given", &PersonName::given)
      .def("initials", &PersonName::initials)
      .def(py::self == py::self)
      .def("__str__", &PersonName::to_string)
      .def("__repr__",
           [](const PersonName& n) { return "PersonName('" + n.to_string() + "')"; });

  py::class_<PaperRecord>(m, "PaperRecord")
      .def(py::init<>())
      .def_readwrite("id", &PaperRecord::id)
      .def_readwrite("title", &PaperRecord::title)
      .def_readwrite("year", &PaperRecord::year)
      .def_readwrite("authors", &PaperRecord::authors)
      .def_readwrite("venue", &PaperRecord::venue)
      .def_readwrite("affiliation_terms", &PaperRecord::affiliation_terms)
      .def(py::self == py::self)
      .def("__repr__", [](const PaperRecord& p) {
        return "PaperRecord('" + p.id + "', " + std::to_string(p.year) + ")";
      });

  py::class_<CitationEdge>(m, "CitationEdge")
      .def(py::init([](PaperId citing, PaperId cited) {
             return CitationEdge{std::move(citing), std::move(cited)};
           }),
           py::arg("citing"), py::arg("cited"))
      .def_readonly("citing", &CitationEdge::citing)
      .def_readonly("cited", &CitationEdge::cited)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const CitationEdge& e) {
             return std::hash<std::string>{}(e.citing + '\n' + e.cited);
           })
      .def("__repr__", [](const CitationEdge& e) {
        return "CitationEdge('" + e.citing + "', '" + e.cited + "')";
      });

  py::enum_<Grade>(m, "Grade")
      .value("EXCELLENT", Grade::kExcellent)
      .value("VERY_GOOD", Grade::kVeryGood)
      .value("GOOD", Grade::kGood)
      .value("UNPUBLISHED", Grade::kUnpublished)
      .def_property_readonly("code", [](Grade g) { return std::string(grade_code(g)); });

  py::class_<UnitRecord>(m, "UnitRecord")
      .def(py::init<>())
      .def_readwrite("name", &UnitRecord::name)
      .def_readwrite("int_phd", &UnitRecord::int_phd)
      .def_readwrite("projects_national", &UnitRecord::projects_national)
      .def_readwrite("projects_international", &UnitRecord::projects_international)
      .def_readwrite("phd_theses", &UnitRecord::phd_theses)
      .def_readwrite("grade", &UnitRecord::grade)
      .def(py::self == py::self)
      .def("__repr__", [](const UnitRecord& u) { return "UnitRecord('" + u.name + "')"; });

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<std::vector<PaperRecord>, std::vector<CitationEdge>>(), py::arg("papers"),
           py::arg("edges"))
      .def("__len__", [](const Corpus& c) { return c.papers().size(); })
      .def("__contains__", [](const Corpus& c, const PaperId& id) { return c.find(id) != nullptr; })
      .def("paper_ids",
           [](const Corpus& c) {
             std::vector<PaperId> ids;
             for (const auto& [id, p] : c.papers()) ids.push_back(id);
             return ids;
           })
      .def("paper",
           [](const Corpus& c, const PaperId& id) {
             const auto* p = c.find(id);
             if (p == nullptr) throw py::key_error(id);
             return *p;
           })
      .def_property_readonly("edges", &Corpus::edges)
      .def("citations_to", &Corpus::citations_to)
      .def("citation_count", &Corpus::citation_count)
      .def(py::self == py::self);

  py::class_<Finding>(m, "Finding")
      .def_property_readonly("kind",
                             [](const Finding& f) { return std::string(finding_kind_name(f.kind)); })
      .def_readonly("message", &Finding::message)
      .def("__repr__", [](const Finding& f) {
        return "Finding('" + std::string(finding_kind_name(f.kind)) + "', '" + f.message + "')";
      });

  m.def("load_corpus", py::overload_cast<const std::filesystem::path&>(&load_corpus),
        py::arg("path"));
  m.def(
      "corpus_from_string",
      [](const std::string& text, const std::string& source) {
        auto in = stream_of(text);
        return load_corpus(in, source);
      },
      py::arg("text"), py::arg("source") = "<corpus>");
  m.def("corpus_to_string", [](const Corpus& c) {
    std::ostringstream out;
    save_corpus(c, out);
    return out.str();
  });
  m.def("validate", &validate);

  // identity

  py::class_<AuthorKey>(m, "AuthorKey")
      .def_readonly("family", &AuthorKey::family_norm)
      .def_readonly("first_initial", &AuthorKey::first_initial)
      .def(py::self == py::self)
      .def("__repr__", [](const AuthorKey& k) {
        return "AuthorKey('" + k.family_norm + "', '" + k.first_initial + "')";
      });

  m.def(
      "normalize_name", [](const std::string& raw) { return normalize_name(PersonName::parse(raw)); },
      py::arg("name"));
  m.def(
      "same_author",
      [](const std::string& a, const std::string& b) {
        return same_author(PersonName::parse(a), PersonName::parse(b));
      },
      py::arg("a"), py::arg("b"));

  py::class_<QueryExpr>(m, "QueryExpr")
      .def_static("parse", &QueryExpr::parse)
      .def("matches", &QueryExpr::matches)
      .def(py::self == py::self)
      .def("__str__", &QueryExpr::to_string)
      .def("__repr__", [](const QueryExpr& q) { return "QueryExpr('" + q.to_string() + "')"; });

  py::class_<ResearcherSpec>(m, "ResearcherSpec")
      .def_readonly("ref", &ResearcherSpec::ref)
      .def_readonly("display_name", &ResearcherSpec::display_name)
      .def_readonly("query", &ResearcherSpec::query)
      .def_readonly("result_cap", &ResearcherSpec::result_cap);

  py::class_<Registry>(m, "Registry")
      .def(py::init<>())
      .def("__len__", &Registry::size)
      .def("__contains__", &Registry::contains)
      .def("__getitem__", &Registry::at, py::return_value_policy::reference_internal)
      .def("refs", [](const Registry& r) {
        std::vector<std::string> refs;
        for (const auto& [ref, spec] : r.specs()) refs.push_back(ref);
        return refs;
      });

  m.def("load_registry", py::overload_cast<const std::filesystem::path&>(&load_registry),
        py::arg("path"));
  m.def(
      "registry_from_string",
      [](const std::string& text) {
        auto in = stream_of(text);
        return load_registry(in);
      },
      py::arg("text"));
  m.def("load_units",
        py::overload_cast<const std::filesystem::path&, const Registry&>(&load_units),
        py::arg("path"), py::arg("registry"));
  m.def(
      "units_from_string",
      [](const std::string& text, const Registry& registry) {
        auto in = stream_of(text);
        return load_units(in, registry);
      },
      py::arg("text"), py::arg("registry"));
  m.def("match_papers", &match_papers, py::arg("spec"), py::arg("corpus"));

  // metrics

  bind_pair<std::int64_t>(m, "CountPair");
  bind_pair<double>(m, "RatioPair");

  m.def(
      "h_index", [](const std::vector<std::int64_t>& counts) { return h_index(counts); },
      py::arg("counts"));
  m.def("is_self_citation", &is_self_citation, py::arg("edge"), py::arg("corpus"));

  py::class_<ResearcherMetrics>(m, "ResearcherMetrics")
      .def_readonly("researcher", &ResearcherMetrics::researcher)
      .def_readonly("period", &ResearcherMetrics::period)
      .def_readonly("matched_papers", &ResearcherMetrics::matched_papers)
      .def_readonly("cited_papers", &ResearcherMetrics::cited_papers)
      .def_readonly("citations", &ResearcherMetrics::citations)
      .def_readonly("citations_per_paper", &ResearcherMetrics::citations_per_paper)
      .def_readonly("h_index", &ResearcherMetrics::h_index)
      .def_readonly("per_paper_citations", &ResearcherMetrics::per_paper_citations);

  m.def(
      "researcher_metrics",
      [](const std::string& ref, const Registry& registry, const Corpus& corpus,
         const YearRange& period) {
        return compute_researcher_metrics(ref, registry, corpus, period);
      },
      py::arg("ref"), py::arg("registry"), py::arg("corpus"), py::arg("period"));

  // aggregate

  py::class_<BucketSpec>(m, "BucketSpec")
      .def(py::init<std::vector<double>>(), py::arg("thresholds"))
      .def_property_readonly("thresholds", &BucketSpec::thresholds)
      .def("__len__", &BucketSpec::bucket_count)
      .def("bucket_of", &BucketSpec::bucket_of)
      .def("label", &BucketSpec::label)
      .def(py::self == py::self);

  py::class_<BucketConfig>(m, "BucketConfig")
      .def(py::init<>())
      .def_readwrite("papers", &BucketConfig::papers)
      .def_readwrite("citations", &BucketConfig::citations)
      .def_readwrite("h_index", &BucketConfig::h_index);

  py::class_<Distribution>(m, "Distribution")
      .def_readonly("spec", &Distribution::spec)
      .def_readonly("percentages", &Distribution::percentages);

  m.def(
      "qnt_distribution",
      [](const std::vector<double>& values, const BucketSpec& spec) {
        return qnt_distribution(values, spec);
      },
      py::arg("values"), py::arg("spec"));

  py::class_<PeriodFigures>(m, "PeriodFigures")
      .def_readonly("period", &PeriodFigures::period)
      .def_readonly("unique_cited_papers", &PeriodFigures::unique_cited_papers)
      .def_readonly("unique_citations", &PeriodFigures::unique_citations)
      .def_readonly("avg_cited_papers", &PeriodFigures::avg_cited_papers)
      .def_readonly("avg_citations", &PeriodFigures::avg_citations)
      .def_readonly("avg_h_index", &PeriodFigures::avg_h_index)
      .def_readonly("per_capita_papers", &PeriodFigures::per_capita_papers)
      .def_readonly("per_capita_citations", &PeriodFigures::per_capita_citations);

  py::class_<UnitMetrics>(m, "UnitMetrics")
      .def_readonly("unit", &UnitMetrics::unit)
      .def_readonly("n_int_phd", &UnitMetrics::n_int_phd)
      .def_readonly("scale", &UnitMetrics::scale)
      .def_readonly("rcp", &UnitMetrics::rcp)
      .def_readonly("ep", &UnitMetrics::ep)
      .def_readonly("projects_national", &UnitMetrics::projects_national)
      .def_readonly("projects_international", &UnitMetrics::projects_international)
      .def_readonly("projects_total", &UnitMetrics::projects_total)
      .def_readonly("phd_theses", &UnitMetrics::phd_theses)
      .def_readonly("projects_per_capita_scaled", &UnitMetrics::projects_per_capita_scaled)
      .def_readonly("theses_per_capita_scaled", &UnitMetrics::theses_per_capita_scaled)
      .def_readonly("papers_rcp", &UnitMetrics::papers_rcp)
      .def_readonly("citations_rcp", &UnitMetrics::citations_rcp)
      .def_readonly("h_index_rcp", &UnitMetrics::h_index_rcp)
      .def_readonly("papers_ep", &UnitMetrics::papers_ep)
      .def_readonly("citations_ep", &UnitMetrics::citations_ep)
      .def_readonly("warnings", &UnitMetrics::warnings);

  m.def("unit_metrics", &compute_unit_metrics, py::arg("unit"), py::arg("registry"),
        py::arg("corpus"), py::arg("ep"), py::arg("rcp"), py::arg("buckets") = BucketConfig{},
        py::arg("scale") = 10.0);

  m.def("load_buckets",
        [](const std::filesystem::path& path) { return load_config(path).buckets(); },
        py::arg("path"));
  m.def("default_reference_period", &default_reference_period, py::arg("ep"));

  // report

  m.def(
      "format_ratio",
      [](double value, int decimals) { return format_ratio(value, options_of(decimals)); },
      py::arg("value"), py::arg("decimals") = 4);
  m.def(
      "researcher_report",
      [](const ResearcherMetrics& metrics, const Corpus& corpus, const std::string& format,
         int decimals) {
        return emit_researcher_report(metrics, corpus, parse_report_format(format),
                                      options_of(decimals));
      },
      py::arg("metrics"), py::arg("corpus"), py::arg("format") = "tsv", py::arg("decimals") = 4);
  m.def(
      "unit_report",
      [](const UnitMetrics& unit, const std::string& format, int decimals) {
        return emit_unit_report(unit, parse_report_format(format), options_of(decimals));
      },
      py::arg("unit"), py::arg("format") = "tsv", py::arg("decimals") = 4);
  m.def("figure_names", [] {
    std::vector<std::string> names;
    for (auto f : all_figures()) names.emplace_back(figure_name(f));
    return names;
  });
  m.def(
      "figure_csv",
      [](const std::vector<UnitMetrics>& units, const std::string& figure, int decimals) {
        return emit_figure_csv(units, parse_figure(figure), options_of(decimals));
      },
      py::arg("units"), py::arg("figure"), py::arg("decimals") = 4);

  // quality

  m.def("normalize_title", &normalize_title, py::arg("title"));

  py::class_<DuplicateAudit>(m, "DuplicateAudit")
      .def_readonly("pairs", &DuplicateAudit::pairs)
      .def_readonly("n_entries", &DuplicateAudit::n_entries)
      .def_readonly("rate", &DuplicateAudit::rate);
  m.def("find_duplicates", &find_duplicates, py::arg("corpus"));

  py::class_<CrosscheckResult>(m, "CrosscheckResult")
      .def_readonly("returned", &CrosscheckResult::returned)
      .def_readonly("correct", &CrosscheckResult::correct)
      .def_readonly("curated", &CrosscheckResult::curated)
      .def_readonly("precision", &CrosscheckResult::precision)
      .def_readonly("recall", &CrosscheckResult::recall)
      .def_readonly("precision_by_convention", &CrosscheckResult::precision_by_convention);
  m.def("crosscheck", &crosscheck, py::arg("returned"), py::arg("curated"));
  m.def("crosscheck_citations", &crosscheck_citations, py::arg("returned"), py::arg("curated"));
  m.def("crosscheck_counts", &crosscheck_counts, py::arg("returned"), py::arg("correct"),
        py::arg("curated"));
}
