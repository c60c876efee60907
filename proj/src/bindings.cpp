// Python bindings over the string-level surface: formulas go in and out
// as text, reports as json strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "logiceval/drs.hpp"
#include "logiceval/harness.hpp"
#include "logiceval/normalize.hpp"
#include "logiceval/parse.hpp"
#include "logiceval/tptp.hpp"

namespace py = pybind11;

namespace {

using namespace logiceval;

py::dict check_text(const std::string& text) {
  WffReport report = check_wff(text);
  py::list diagnostics;
  for (const Diagnostic& d : report.diagnostics) diagnostics.append(d.message);
  py::dict out;
  out["parsed"] = report.parsed;
  out["closed"] = report.closed;
  out["duplicate_bindings"] = report.duplicate_bindings;
  out["wff"] = report.is_wff;
  out["diagnostics"] = diagnostics;
  return out;
}

std::string normalize_text(const std::string& text) {
  return print_formula(normalize(parse_formula(text)));
}

std::string canonical_text(const std::string& text) {
  return print_formula(parse_formula(text));
}

int complexity_text(const std::string& text) {
  return complexity(parse_formula(text));
}

std::string clauses_text(const std::string& text) {
  return clause_dump(formula_to_clauses(parse_formula(text)));
}

SearchConfig search_config(int restarts, std::uint64_t seed) {
  SearchConfig cfg;
  cfg.restarts = restarts;
  cfg.rng_seed = seed;
  return cfg;
}

py::dict dmatch_text(const std::string& gold, const std::string& predicted,
                     int restarts, std::uint64_t seed) {
  MatchScore score =
      dmatch_score(formula_to_clauses(parse_formula(gold)),
                   formula_to_clauses(parse_formula(predicted)),
                   search_config(restarts, seed));
  py::dict out;
  out["precision"] = score.precision;
  out["recall"] = score.recall;
  out["f1"] = score.f1;
  out["matched"] = score.matched;
  return out;
}

std::string relation_text(const std::string& gold,
                          const std::string& predicted) {
  return relation_name(
      logical_relation(parse_formula(gold), parse_formula(predicted)));
}

bool equivalent_text(const std::string& gold, const std::string& predicted) {
  return prover_accuracy_verdict(parse_formula(gold),
                                 parse_formula(predicted));
}

std::string error_label_text(const std::string& gold,
                             const std::string& predicted) {
  return error_label_name(
      classify_error(parse_formula(gold), parse_formula(predicted)));
}

py::dict categories_text(const std::string& text,
                         const std::string& sentence) {
  CategoryFlags flags = detect_categories(parse_formula(text), sentence);
  py::dict out;
  out["cc"] = flags.cc;
  out["pp"] = flags.pp;
  out["pss"] = flags.pss;
  return out;
}

std::string tptp_text(const std::string& first, const std::string& second,
                      const std::string& direction) {
  return to_tptp(parse_formula(first), parse_formula(second),
                 direction == "backward" ? TptpDirection::Backward
                                         : TptpDirection::Forward);
}

std::string evaluate_jsonl(const std::string& jsonl, int restarts,
                           std::uint64_t seed, int bins, int jobs) {
  std::istringstream in(jsonl);
  std::vector<PairRecord> records = parse_corpus(in, CorpusFormat::Jsonl);
  EvalConfig cfg;
  cfg.search = search_config(restarts, seed);
  cfg.k_bins = bins;
  cfg.jobs = jobs;
  Report report = aggregate(evaluate_corpus(records, cfg), bins);
  return render_report(report, ReportFormat::Json);
}

}  // namespace

PYBIND11_MODULE(logiceval, m) {
  m.doc() = "Evaluation toolkit for event-semantics formulas";

  py::register_exception<ParseError>(m, "FormulaParseError");
  py::register_exception<NormalizationError>(m, "NormalizationError");
  py::register_exception<ConversionError>(m, "ConversionError");

  m.def("check", &check_text, py::arg("text"),
        "Well-formedness report for a formula string");
  m.def("normalize", &normalize_text, py::arg("text"),
        "Prenex normal form under canonical printing");
  m.def("canonical", &canonical_text, py::arg("text"),
        "Parse and reprint without normalizing");
  m.def("exact_match", &exact_match, py::arg("gold"), py::arg("predicted"),
        "Whitespace-insensitive string equality");
  m.def("complexity", &complexity_text, py::arg("text"),
        "Bound variables + negations + conjunction arity excess");
  m.def("clauses", &clauses_text, py::arg("text"),
        "Clause dump of the formula's box structure");
  m.def("dmatch", &dmatch_text, py::arg("gold"), py::arg("predicted"),
        py::arg("restarts") = 20, py::arg("seed") = 1,
        "Clause-matching precision/recall/F1");
  m.def("relation", &relation_text, py::arg("gold"), py::arg("predicted"),
        "Logical relation name between two formulas");
  m.def("equivalent", &equivalent_text, py::arg("gold"), py::arg("predicted"),
        "True when the formulas entail each other");
  m.def("error_label", &error_label_text, py::arg("gold"),
        py::arg("predicted"), "Error category for a non-equivalent pair");
  m.def("categories", &categories_text, py::arg("text"),
        py::arg("sentence") = std::string(),
        "Heuristic coordination/prepositional/passive flags");
  m.def("to_tptp", &tptp_text, py::arg("first"), py::arg("second"),
        py::arg("direction") = std::string("forward"),
        "TPTP problem with one side as the conjecture");
  m.def("evaluate_jsonl", &evaluate_jsonl, py::arg("jsonl"),
        py::arg("restarts") = 20, py::arg("seed") = 1, py::arg("bins") = 6,
        py::arg("jobs") = 1,
        "Evaluate a jsonl corpus given as a string; returns the json report");
}
