#include "logiceval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "logiceval/drs.hpp"
#include "logiceval/parse.hpp"

namespace logiceval {

namespace {

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

FormatError::FormatError(const std::string& message, int line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

ValidationError::ValidationError(const std::string& message,
                                 std::vector<std::string> ids)
    : std::runtime_error(message + ": " + join_ids(ids)), ids_(std::move(ids)) {}

// ── corpus loading ──

namespace {

bool blank_line(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string json_text(const nlohmann::json& obj, const char* key, int line) {
  if (!obj.contains(key))
    throw FormatError(std::string("missing field '") + key + "'", line);
  const nlohmann::json& v = obj.at(key);
  if (!v.is_string())
    throw FormatError(std::string("field '") + key + "' must be a string",
                      line);
  return v.get<std::string>();
}

std::optional<bool> json_flag(const nlohmann::json& obj, const char* key,
                              int line) {
  if (!obj.contains(key) || obj.at(key).is_null()) return std::nullopt;
  const nlohmann::json& v = obj.at(key);
  if (!v.is_boolean())
    throw FormatError(std::string("field '") + key + "' must be a boolean",
                      line);
  return v.get<bool>();
}

std::vector<PairRecord> parse_jsonl(std::istream& in) {
  std::vector<PairRecord> records;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_line(line)) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw FormatError("not a valid json object", lineno);
    }
    if (!obj.is_object())
      throw FormatError("not a valid json object", lineno);
    PairRecord r;
    r.id = json_text(obj, "id", lineno);
    r.sentence = json_text(obj, "sentence", lineno);
    r.gold = json_text(obj, "gold", lineno);
    r.predicted = json_text(obj, "predicted", lineno);
    r.cc = json_flag(obj, "cc", lineno);
    r.pp = json_flag(obj, "pp", lineno);
    r.pss = json_flag(obj, "pss", lineno);
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    std::string::size_type tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<bool> tsv_flag(const std::string& value, const std::string& column,
                             int line) {
  if (value.empty()) return std::nullopt;
  std::string low;
  for (char c : value) low += char(std::tolower(static_cast<unsigned char>(c)));
  if (low == "true" || low == "1") return true;
  if (low == "false" || low == "0") return false;
  throw FormatError("column '" + column + "' must be a boolean", line);
}

std::vector<PairRecord> parse_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing header row", 1);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_tabs(line);

  static const std::vector<std::string> required = {"id", "sentence", "gold",
                                                    "predicted"};
  static const std::vector<std::string> optional = {"cc", "pp", "pss"};
  if (header.size() < required.size() ||
      !std::equal(required.begin(), required.end(), header.begin()))
    throw FormatError("header must start with: id, sentence, gold, predicted",
                      1);
  std::size_t opt_at = 0;
  for (std::size_t i = required.size(); i < header.size(); ++i) {
    while (opt_at < optional.size() && optional[opt_at] != header[i]) ++opt_at;
    if (opt_at == optional.size())
      throw FormatError("unknown column '" + header[i] + "'", 1);
    ++opt_at;
  }

  std::vector<PairRecord> records;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != header.size())
      throw FormatError("expected " + std::to_string(header.size()) +
                            " columns, got " + std::to_string(fields.size()),
                        lineno);
    PairRecord r;
    r.id = fields[0];
    r.sentence = fields[1];
    r.gold = fields[2];
    r.predicted = fields[3];
    for (std::size_t i = required.size(); i < header.size(); ++i) {
      if (header[i] == "cc") r.cc = tsv_flag(fields[i], "cc", lineno);
      else if (header[i] == "pp") r.pp = tsv_flag(fields[i], "pp", lineno);
      else r.pss = tsv_flag(fields[i], "pss", lineno);
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

std::vector<PairRecord> parse_corpus(std::istream& in, CorpusFormat format) {
  return format == CorpusFormat::Jsonl ? parse_jsonl(in) : parse_tsv(in);
}

std::vector<PairRecord> load_corpus(const std::string& path,
                                    CorpusFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::vector<PairRecord> records = parse_corpus(in, format);

  std::map<std::string, int> seen;
  std::vector<std::string> duplicates;
  for (const PairRecord& r : records)
    if (++seen[r.id] == 2) duplicates.push_back(r.id);
  if (!duplicates.empty())
    throw ValidationError("duplicate ids", std::move(duplicates));

  std::vector<std::string> malformed;
  for (const PairRecord& r : records)
    if (!check_wff(r.gold).is_wff) malformed.push_back(r.id);
  if (!malformed.empty())
    throw ValidationError("gold formula is not well formed",
                          std::move(malformed));
  return records;
}

// ── per-pair evaluation ──

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

PairResult evaluate_pair(const PairRecord& record, const EvalConfig& cfg) {
  PairResult out;
  out.id = record.id;

  WffReport gold_report = check_wff(record.gold);
  WffReport pred_report = check_wff(record.predicted);
  out.wff = pred_report.is_wff;
  // load_corpus rejects malformed gold; calls that bypass it score nothing.
  if (!gold_report.is_wff) return out;

  const Formula& gold = *gold_report.formula;
  out.complexity = complexity(gold);
  out.categories = detect_categories(gold, record.sentence);
  if (record.cc || record.pp || record.pss) {
    out.categories.source = CategoryFlags::Source::Provided;
    if (record.cc) out.categories.cc = *record.cc;
    if (record.pp) out.categories.pp = *record.pp;
    if (record.pss) out.categories.pss = *record.pss;
  }
  if (!out.wff) return out;

  const Formula& pred = *pred_report.formula;
  out.exact = exact_match(record.gold, record.predicted);

  auto dmatch_start = std::chrono::steady_clock::now();
  try {
    ClauseSet gold_clauses = formula_to_clauses(gold);
    ClauseSet pred_clauses = formula_to_clauses(pred);
    out.dmatch = dmatch_score(gold_clauses, pred_clauses, cfg.search);
  } catch (const ConversionError&) {
    // well formed but outside the convertible fragment: scores stay zero
  }
  out.dmatch_ms = ms_since(dmatch_start);

  auto entail_start = std::chrono::steady_clock::now();
  out.relation = logical_relation(gold, pred, cfg.entail);
  out.prover = out.relation == Relation::Equivalent;
  out.entail_ms = ms_since(entail_start);

  if (!out.prover) out.error_label = classify_error(gold, pred, cfg.search);
  return out;
}

std::vector<PairResult> evaluate_corpus(const std::vector<PairRecord>& records,
                                        const EvalConfig& cfg) {
  std::vector<PairResult> results(records.size());
  std::size_t jobs = std::max(1, cfg.jobs);
  // Each worker runs at most one prover subprocess, so capping the workers
  // caps the subprocesses.
  if (!cfg.entail.prover_command.empty())
    jobs = std::min<std::size_t>(jobs, std::max(1, cfg.prover_jobs));
  jobs = std::min(jobs, records.size());

  if (jobs <= 1) {
    for (std::size_t i = 0; i < records.size(); ++i)
      results[i] = evaluate_pair(records[i], cfg);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= records.size() || failed.load()) return;
      try {
        results[i] = evaluate_pair(records[i], cfg);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

// ── aggregation ──

Report aggregate(const std::vector<PairResult>& results, int k_bins) {
  if (results.empty()) throw EmptyInputError("no results to aggregate");

  Report rep;
  rep.n = int(results.size());
  for (const PairResult& r : results) {
    rep.exact_match += r.exact;
    rep.prover_acc += r.prover;
    rep.dmatch_p += r.dmatch.precision;
    rep.dmatch_r += r.dmatch.recall;
    rep.dmatch_f1 += r.dmatch.f1;
    rep.non_wff_ratio += !r.wff;
    // Identical text must never score below equivalence; budget
    // exhaustion (relation Unsupported) is the one excuse.
    if (r.exact && r.relation != Relation::Equivalent &&
        r.relation != Relation::Unsupported)
      throw std::logic_error("exact match without equivalence for id " + r.id);
    if (r.wff) {
      ++rep.n_wff;
      rep.wff_exact_match += r.exact;
      rep.wff_prover_acc += r.prover;
      rep.wff_dmatch_p += r.dmatch.precision;
      rep.wff_dmatch_r += r.dmatch.recall;
      rep.wff_dmatch_f1 += r.dmatch.f1;
    }
    if (r.error_label)
      ++rep.error_distribution[error_label_name(*r.error_label)];
  }
  rep.exact_match /= rep.n;
  rep.prover_acc /= rep.n;
  rep.dmatch_p /= rep.n;
  rep.dmatch_r /= rep.n;
  rep.dmatch_f1 /= rep.n;
  rep.non_wff_ratio /= rep.n;
  if (rep.n_wff > 0) {
    rep.wff_exact_match /= rep.n_wff;
    rep.wff_prover_acc /= rep.n_wff;
    rep.wff_dmatch_p /= rep.n_wff;
    rep.wff_dmatch_r /= rep.n_wff;
    rep.wff_dmatch_f1 /= rep.n_wff;
  }

  std::vector<std::pair<std::string, int>> items;
  items.reserve(results.size());
  std::map<std::string, std::vector<std::size_t>> by_id;
  for (std::size_t i = 0; i < results.size(); ++i) {
    items.emplace_back(results[i].id, results[i].complexity);
    by_id[results[i].id].push_back(i);
  }
  std::map<std::string, std::size_t> taken;
  for (const std::vector<std::string>& bin : bin_by_complexity(items, k_bins)) {
    BinStat stat;
    stat.n = int(bin.size());
    bool first = true;
    for (const std::string& id : bin) {
      const PairResult& r = results[by_id[id][taken[id]++]];
      if (first || r.complexity < stat.min_complexity)
        stat.min_complexity = r.complexity;
      if (first || r.complexity > stat.max_complexity)
        stat.max_complexity = r.complexity;
      first = false;
      stat.prover_acc += r.prover;
      stat.dmatch_f1 += r.dmatch.f1;
    }
    if (stat.n > 0) {
      stat.prover_acc /= stat.n;
      stat.dmatch_f1 /= stat.n;
    }
    rep.complexity_bins.push_back(stat);
  }

  auto flag_of = [](const PairResult& r, const std::string& category) {
    if (category == "cc") return r.categories.cc;
    if (category == "pp") return r.categories.pp;
    return r.categories.pss;
  };
  for (const std::string& category : {"cc", "pp", "pss"}) {
    for (bool present : {true, false}) {
      StratumStat stat;
      stat.category = category;
      stat.present = present;
      for (const PairResult& r : results) {
        if (flag_of(r, category) != present) continue;
        ++stat.n;
        stat.prover_acc += r.prover;
      }
      if (stat.n > 0) stat.prover_acc /= stat.n;
      rep.category_strata.push_back(std::move(stat));
    }
  }
  return rep;
}

// ── rendering ──

std::string round3(double value) {
  bool negative = value < 0.0;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.9f", negative ? -value : value);
  std::string s = buf;
  std::string::size_type dot = s.find('.');
  std::string whole = s.substr(0, dot);
  std::string frac = s.substr(dot + 1, 3);
  // Half-up on the fourth decimal; ties read off the first nine decimals.
  if (s[dot + 4] >= '5') {
    int i = 2;
    for (; i >= 0 && frac[i] == '9'; --i) frac[i] = '0';
    if (i >= 0) {
      ++frac[i];
    } else {
      int j = int(whole.size()) - 1;
      for (; j >= 0 && whole[j] == '9'; --j) whole[j] = '0';
      if (j >= 0) ++whole[j];
      else whole.insert(whole.begin(), '1');
    }
  }
  std::string out = whole + "." + frac;
  if (negative && out != "0.000") out.insert(out.begin(), '-');
  return out;
}

namespace {

const char* stratum_tag(bool present) { return present ? "present" : "absent"; }

std::string render_json(const Report& rep) {
  // Built by hand so the fixed three-decimal forms survive into the file.
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << rep.n << ",\n";
  out << "  \"exact_match\": " << round3(rep.exact_match) << ",\n";
  out << "  \"prover_acc\": " << round3(rep.prover_acc) << ",\n";
  out << "  \"dmatch_p\": " << round3(rep.dmatch_p) << ",\n";
  out << "  \"dmatch_r\": " << round3(rep.dmatch_r) << ",\n";
  out << "  \"dmatch_f1\": " << round3(rep.dmatch_f1) << ",\n";
  out << "  \"non_wff_ratio\": " << round3(rep.non_wff_ratio) << ",\n";
  out << "  \"wff_only\": {\n";
  out << "    \"n\": " << rep.n_wff << ",\n";
  out << "    \"exact_match\": " << round3(rep.wff_exact_match) << ",\n";
  out << "    \"prover_acc\": " << round3(rep.wff_prover_acc) << ",\n";
  out << "    \"dmatch_p\": " << round3(rep.wff_dmatch_p) << ",\n";
  out << "    \"dmatch_r\": " << round3(rep.wff_dmatch_r) << ",\n";
  out << "    \"dmatch_f1\": " << round3(rep.wff_dmatch_f1) << "\n";
  out << "  },\n";
  out << "  \"complexity_bins\": [";
  for (std::size_t i = 0; i < rep.complexity_bins.size(); ++i) {
    const BinStat& b = rep.complexity_bins[i];
    out << (i ? "," : "") << "\n    {\"bin\": " << (i + 1)
        << ", \"n\": " << b.n
        << ", \"min_complexity\": " << b.min_complexity
        << ", \"max_complexity\": " << b.max_complexity
        << ", \"prover_acc\": " << round3(b.prover_acc)
        << ", \"dmatch_f1\": " << round3(b.dmatch_f1) << "}";
  }
  out << (rep.complexity_bins.empty() ? "" : "\n  ") << "],\n";
  out << "  \"category_strata\": [";
  for (std::size_t i = 0; i < rep.category_strata.size(); ++i) {
    const StratumStat& s = rep.category_strata[i];
    out << (i ? "," : "") << "\n    {\"category\": \"" << s.category
        << "\", \"present\": " << (s.present ? "true" : "false")
        << ", \"n\": " << s.n
        << ", \"prover_acc\": " << round3(s.prover_acc) << "}";
  }
  out << (rep.category_strata.empty() ? "" : "\n  ") << "],\n";
  out << "  \"error_distribution\": {";
  bool first = true;
  for (const auto& [label, count] : rep.error_distribution) {
    out << (first ? "" : ",") << "\n    \"" << label << "\": " << count;
    first = false;
  }
  out << (rep.error_distribution.empty() ? "" : "\n  ") << "}\n";
  out << "}\n";
  return out.str();
}

std::string render_markdown(const Report& rep) {
  std::ostringstream out;
  out << "| Items | Exact Match | Prover Acc | Dmatch Precision | "
         "Dmatch Recall | Dmatch F1 | Non-WFF Ratio |\n";
  out << "|---|---|---|---|---|---|---|\n";
  out << "| all (n=" << rep.n << ") | " << round3(rep.exact_match) << " | "
      << round3(rep.prover_acc) << " | " << round3(rep.dmatch_p) << " | "
      << round3(rep.dmatch_r) << " | " << round3(rep.dmatch_f1) << " | "
      << round3(rep.non_wff_ratio) << " |\n";
  out << "| wff only (n=" << rep.n_wff << ") | "
      << round3(rep.wff_exact_match) << " | " << round3(rep.wff_prover_acc)
      << " | " << round3(rep.wff_dmatch_p) << " | "
      << round3(rep.wff_dmatch_r) << " | " << round3(rep.wff_dmatch_f1)
      << " | " << round3(0.0) << " |\n";

  if (!rep.complexity_bins.empty()) {
    out << "\n## Complexity bins\n\n";
    out << "| Bin | n | Complexity | Prover Acc | Dmatch F1 |\n";
    out << "|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < rep.complexity_bins.size(); ++i) {
      const BinStat& b = rep.complexity_bins[i];
      out << "| " << (i + 1) << " | " << b.n << " | " << b.min_complexity
          << " to " << b.max_complexity << " | " << round3(b.prover_acc)
          << " | " << round3(b.dmatch_f1) << " |\n";
    }
  }

  if (!rep.category_strata.empty()) {
    out << "\n## Category strata\n\n";
    out << "| Category | Present | n | Prover Acc |\n";
    out << "|---|---|---|---|\n";
    for (const StratumStat& s : rep.category_strata)
      out << "| " << s.category << " | " << (s.present ? "yes" : "no")
          << " | " << s.n << " | " << round3(s.prover_acc) << " |\n";
  }

  if (!rep.error_distribution.empty()) {
    out << "\n## Error distribution\n\n";
    out << "| Label | Count |\n";
    out << "|---|---|\n";
    for (const auto& [label, count] : rep.error_distribution)
      out << "| " << label << " | " << count << " |\n";
  }
  return out.str();
}

std::string render_csv(const Report& rep) {
  std::ostringstream out;
  out << "section,name,n,exact_match,prover_acc,dmatch_p,dmatch_r,dmatch_f1,"
         "non_wff_ratio\n";
  out << "overall,all," << rep.n << "," << round3(rep.exact_match) << ","
      << round3(rep.prover_acc) << "," << round3(rep.dmatch_p) << ","
      << round3(rep.dmatch_r) << "," << round3(rep.dmatch_f1) << ","
      << round3(rep.non_wff_ratio) << "\n";
  out << "overall,wff_only," << rep.n_wff << ","
      << round3(rep.wff_exact_match) << "," << round3(rep.wff_prover_acc)
      << "," << round3(rep.wff_dmatch_p) << "," << round3(rep.wff_dmatch_r)
      << "," << round3(rep.wff_dmatch_f1) << "," << round3(0.0) << "\n";
  for (std::size_t i = 0; i < rep.complexity_bins.size(); ++i) {
    const BinStat& b = rep.complexity_bins[i];
    out << "bin," << (i + 1) << "," << b.n << ",," << round3(b.prover_acc)
        << ",,," << round3(b.dmatch_f1) << ",\n";
  }
  for (const StratumStat& s : rep.category_strata)
    out << "stratum," << s.category << "_" << stratum_tag(s.present) << ","
        << s.n << ",," << round3(s.prover_acc) << ",,,,\n";
  for (const auto& [label, count] : rep.error_distribution)
    out << "error," << label << "," << count << ",,,,,,\n";
  return out.str();
}

}  // namespace

std::string render_report(const Report& report, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Markdown: return render_markdown(report);
    case ReportFormat::Csv: return render_csv(report);
  }
  return {};
}

std::string render_pair_results(const std::vector<PairResult>& results) {
  std::string out;
  for (const PairResult& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["wff"] = r.wff;
    j["exact"] = r.exact;
    j["prover"] = r.prover;
    j["relation"] = relation_name(r.relation);
    j["dmatch_p"] = nlohmann::json::parse(round3(r.dmatch.precision));
    j["dmatch_r"] = nlohmann::json::parse(round3(r.dmatch.recall));
    j["dmatch_f1"] = nlohmann::json::parse(round3(r.dmatch.f1));
    j["matched"] = r.dmatch.matched;
    j["complexity"] = r.complexity;
    j["cc"] = r.categories.cc;
    j["pp"] = r.categories.pp;
    j["pss"] = r.categories.pss;
    j["category_source"] =
        r.categories.source == CategoryFlags::Source::Provided ? "provided"
                                                               : "heuristic";
    if (r.error_label) j["error_label"] = error_label_name(*r.error_label);
    else j["error_label"] = nullptr;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace logiceval
