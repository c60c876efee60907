// Command-line front end. Subcommands: evaluate, normalize, check,
// dmatch, entail, tptp. Exit 0 on success, 1 on input or validation
// problems, 2 on internal errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logiceval/drs.hpp"
#include "logiceval/harness.hpp"
#include "logiceval/normalize.hpp"
#include "logiceval/parse.hpp"
#include "logiceval/tptp.hpp"

namespace {

using namespace logiceval;

struct Options {
  std::string corpus;
  std::string format = "jsonl";
  std::string out;
  std::string report_fmt = "json";
  std::string per_pair;
  int restarts = 20;
  std::uint64_t seed = 1;
  std::string prover_cmd;
  double prover_timeout = 10.0;
  int bins = 6;
  int jobs = 1;
  std::string direction = "forward";
  bool dump_clauses = false;
  std::vector<std::string> formulas;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
  if (!out.flush()) throw IoError("cannot write output file: " + path);
}

int run_evaluate(const Options& opt) {
  CorpusFormat format =
      opt.format == "tsv" ? CorpusFormat::Tsv : CorpusFormat::Jsonl;
  std::vector<PairRecord> records = load_corpus(opt.corpus, format);
  if (records.empty()) throw EmptyInputError("corpus has no records");

  EvalConfig cfg;
  cfg.search.restarts = opt.restarts;
  cfg.search.rng_seed = opt.seed;
  cfg.entail.prover_command = opt.prover_cmd;
  cfg.entail.prover_timeout_seconds = opt.prover_timeout;
  cfg.k_bins = opt.bins;
  cfg.jobs = opt.jobs;

  std::vector<PairResult> results = evaluate_corpus(records, cfg);
  Report report = aggregate(results, cfg.k_bins);

  ReportFormat fmt = ReportFormat::Json;
  if (opt.report_fmt == "markdown") fmt = ReportFormat::Markdown;
  else if (opt.report_fmt == "csv") fmt = ReportFormat::Csv;
  write_output(opt.out, render_report(report, fmt));
  if (!opt.per_pair.empty())
    write_output(opt.per_pair, render_pair_results(results));
  return 0;
}

int run_normalize() {
  std::string line;
  int lineno = 0;
  bool failed = false;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      std::cout << print_formula(normalize(parse_formula(line))) << "\n";
    } catch (const std::exception& e) {
      std::cerr << "line " << lineno << ": " << e.what() << "\n";
      failed = true;
    }
  }
  return failed ? 1 : 0;
}

int run_check() {
  std::string line;
  int lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    WffReport report = check_wff(line);
    std::cout << "line " << lineno << ": "
              << (report.is_wff ? "wff" : "not wff");
    for (const Diagnostic& d : report.diagnostics)
      std::cout << "; " << d.message;
    std::cout << "\n";
  }
  return 0;
}

int run_dmatch(const Options& opt) {
  ClauseSet gold = formula_to_clauses(parse_formula(opt.formulas[0]));
  ClauseSet pred = formula_to_clauses(parse_formula(opt.formulas[1]));
  if (opt.dump_clauses) {
    std::cout << "# first\n" << clause_dump(gold) << "# second\n"
              << clause_dump(pred);
  }
  SearchConfig cfg;
  cfg.restarts = opt.restarts;
  cfg.rng_seed = opt.seed;
  MatchScore score = dmatch_score(gold, pred, cfg);
  std::cout << "P: " << round3(score.precision) << "\n"
            << "R: " << round3(score.recall) << "\n"
            << "F1: " << round3(score.f1) << "\n"
            << "matched: " << score.matched << "\n";
  return 0;
}

int run_entail(const Options& opt) {
  EntailConfig cfg;
  cfg.prover_command = opt.prover_cmd;
  cfg.prover_timeout_seconds = opt.prover_timeout;
  Relation relation = logical_relation(parse_formula(opt.formulas[0]),
                                       parse_formula(opt.formulas[1]), cfg);
  std::cout << relation_name(relation) << "\n";
  return 0;
}

int run_tptp(const Options& opt) {
  TptpDirection direction = opt.direction == "backward"
                                ? TptpDirection::Backward
                                : TptpDirection::Forward;
  std::cout << to_tptp(parse_formula(opt.formulas[0]),
                       parse_formula(opt.formulas[1]), direction);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation toolkit for event-semantics formulas"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score a corpus of gold/predicted pairs");
  evaluate->add_option("--corpus", opt.corpus, "Corpus file")->required();
  evaluate->add_option("--format", opt.format, "Corpus format")
      ->check(CLI::IsMember({"jsonl", "tsv"}))
      ->capture_default_str();
  evaluate->add_option("--out", opt.out, "Report file (default stdout)");
  evaluate->add_option("--report-fmt", opt.report_fmt, "Report format")
      ->check(CLI::IsMember({"json", "markdown", "csv"}))
      ->capture_default_str();
  evaluate->add_option("--per-pair", opt.per_pair,
                       "Also write per-pair results (jsonl)");
  evaluate->add_option("--restarts", opt.restarts, "Alignment restarts")
      ->envname("LOGICEVAL_RESTARTS")
      ->capture_default_str();
  evaluate->add_option("--seed", opt.seed, "Alignment rng seed")
      ->envname("LOGICEVAL_SEED")
      ->capture_default_str();
  evaluate->add_option("--prover-cmd", opt.prover_cmd, "External prover command")
      ->envname("LOGICEVAL_PROVER_CMD");
  evaluate
      ->add_option("--prover-timeout", opt.prover_timeout,
                   "External prover timeout, seconds")
      ->envname("LOGICEVAL_PROVER_TIMEOUT")
      ->capture_default_str();
  evaluate->add_option("--bins", opt.bins, "Complexity bin count")
      ->envname("LOGICEVAL_BINS")
      ->capture_default_str();
  evaluate->add_option("--jobs", opt.jobs, "Worker threads")
      ->envname("LOGICEVAL_JOBS")
      ->capture_default_str();

  CLI::App* normalize_cmd = app.add_subcommand(
      "normalize", "Rewrite formulas from stdin into prenex form");
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Report well-formedness for each stdin line");

  CLI::App* dmatch_cmd =
      app.add_subcommand("dmatch", "Clause-matching score for two formulas");
  dmatch_cmd->add_option("formulas", opt.formulas, "Two formulas")
      ->expected(2)
      ->required();
  dmatch_cmd->add_option("--restarts", opt.restarts, "Alignment restarts")
      ->envname("LOGICEVAL_RESTARTS")
      ->capture_default_str();
  dmatch_cmd->add_option("--seed", opt.seed, "Alignment rng seed")
      ->envname("LOGICEVAL_SEED")
      ->capture_default_str();
  dmatch_cmd->add_flag("--dump-clauses", opt.dump_clauses,
                       "Print both clause sets first");

  CLI::App* entail_cmd = app.add_subcommand(
      "entail", "Logical relation between two formulas (first vs second)");
  entail_cmd->add_option("formulas", opt.formulas, "Two formulas")
      ->expected(2)
      ->required();
  entail_cmd->add_option("--prover-cmd", opt.prover_cmd,
                         "External prover command")
      ->envname("LOGICEVAL_PROVER_CMD");
  entail_cmd
      ->add_option("--prover-timeout", opt.prover_timeout,
                   "External prover timeout, seconds")
      ->envname("LOGICEVAL_PROVER_TIMEOUT")
      ->capture_default_str();

  CLI::App* tptp_cmd =
      app.add_subcommand("tptp", "Emit a TPTP problem for two formulas");
  tptp_cmd->add_option("formulas", opt.formulas, "Two formulas")
      ->expected(2)
      ->required();
  tptp_cmd->add_option("--direction", opt.direction,
                       "Which side becomes the conjecture")
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << app.help() << "\n";
    return 1;
  }

  try {
    if (evaluate->parsed()) return run_evaluate(opt);
    if (normalize_cmd->parsed()) return run_normalize();
    if (check_cmd->parsed()) return run_check();
    if (dmatch_cmd->parsed()) return run_dmatch(opt);
    if (entail_cmd->parsed()) return run_entail(opt);
    if (tptp_cmd->parsed()) return run_tptp(opt);
  } catch (const std::runtime_error& e) {
    // parse, conversion, io, format, and validation problems all land here
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
