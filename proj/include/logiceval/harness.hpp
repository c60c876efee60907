// Corpus ingestion, per-pair scoring, aggregation, and report rendering.
//
// Corpus formats. JSONL: one object per line with keys id, sentence,
// gold, predicted, and optional booleans cc, pp, pss. TSV: a header row
// naming the same columns in that fixed order, category columns optional.
// Provided category flags override the sentence/formula heuristics.
//
// Reports are deterministic: same corpus, seed, and config produce a
// byte-identical json rendering. Timings stay out of the report.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logiceval/analysis.hpp"
#include "logiceval/dmatch.hpp"
#include "logiceval/entail.hpp"

namespace logiceval {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, int line);
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, std::vector<std::string> ids);
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

class EmptyInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairRecord {
  std::string id;
  std::string sentence;
  std::string gold;
  std::string predicted;
  std::optional<bool> cc;  // provided flags; unset means use the heuristic
  std::optional<bool> pp;
  std::optional<bool> pss;
};

enum class CorpusFormat { Jsonl, Tsv };

// Reads records from an open stream; line numbers are 1-based.
std::vector<PairRecord> parse_corpus(std::istream& in, CorpusFormat format);

// Opens the file, parses, validates gold formulas and id uniqueness.
std::vector<PairRecord> load_corpus(const std::string& path,
                                    CorpusFormat format);

struct EvalConfig {
  SearchConfig search;  // dmatch restarts, iteration cap, rng seed
  EntailConfig entail;  // step budget; optional external prover
  int k_bins = 6;
  int jobs = 1;         // worker threads for evaluate_corpus
  int prover_jobs = 4;  // concurrent external prover subprocesses
};

struct PairResult {
  std::string id;
  bool wff = false;    // the predicted formula
  bool exact = false;  // whitespace-insensitive string equality
  bool prover = false;
  Relation relation = Relation::Unsupported;
  MatchScore dmatch;
  int complexity = 0;  // of the gold formula
  CategoryFlags categories;
  std::optional<ErrorLabel> error_label;  // present iff wff and not prover
  double dmatch_ms = 0.0;  // wall-clock, excluded from reports
  double entail_ms = 0.0;
};

PairResult evaluate_pair(const PairRecord& record, const EvalConfig& cfg = {});

// Evaluates every record, cfg.jobs at a time. Results keep input order.
std::vector<PairResult> evaluate_corpus(const std::vector<PairRecord>& records,
                                        const EvalConfig& cfg = {});

struct BinStat {
  int n = 0;
  int min_complexity = 0;
  int max_complexity = 0;
  double prover_acc = 0.0;
  double dmatch_f1 = 0.0;
};

struct StratumStat {
  std::string category;  // "cc", "pp", or "pss"
  bool present = false;
  int n = 0;
  double prover_acc = 0.0;
};

struct Report {
  int n = 0;
  double exact_match = 0.0;
  double prover_acc = 0.0;
  double dmatch_p = 0.0;
  double dmatch_r = 0.0;
  double dmatch_f1 = 0.0;
  double non_wff_ratio = 0.0;
  // The same means restricted to pairs whose prediction is well formed.
  int n_wff = 0;
  double wff_exact_match = 0.0;
  double wff_prover_acc = 0.0;
  double wff_dmatch_p = 0.0;
  double wff_dmatch_r = 0.0;
  double wff_dmatch_f1 = 0.0;
  std::vector<BinStat> complexity_bins;
  std::vector<StratumStat> category_strata;  // present/absent per category
  std::map<std::string, int> error_distribution;
};

// Means over all results (non-WFF pairs count with zero scores), a
// WFF-only block, complexity bins, category strata, error counts.
// Throws EmptyInputError on an empty list.
Report aggregate(const std::vector<PairResult>& results, int k_bins = 6);

enum class ReportFormat { Json, Markdown, Csv };

std::string render_report(const Report& report, ReportFormat fmt);

// One json object per pair, input order; the per-pair companion output.
std::string render_pair_results(const std::vector<PairResult>& results);

// Three-decimal rendering, rounding half away from zero: 0.6895 -> "0.690".
std::string round3(double value);

}  // namespace logiceval
