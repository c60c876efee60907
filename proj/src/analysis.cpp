#include "logiceval/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "logiceval/entail.hpp"

namespace logiceval {

int complexity(const Formula& f) {
  int score = 0;
  switch (f.kind) {
    case Formula::Kind::Exists:
      score += int(f.bound.size());
      break;
    case Formula::Kind::Neg:
      score += 1;
      break;
    case Formula::Kind::Conj:
      score += int(f.children.size()) - 1;
      break;
    case Formula::Kind::Atomic:
      break;
  }
  for (const Formula& c : f.children) score += complexity(c);
  return score;
}

std::vector<std::vector<std::string>> bin_by_complexity(
    std::vector<std::pair<std::string, int>> items, int k) {
  if (k <= 0) throw std::invalid_argument("bin count must be positive");
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  std::vector<std::vector<std::string>> bins(k);
  std::size_t n = items.size();
  std::size_t base = n / k, extra = n % k;
  std::size_t cursor = 0;
  for (int b = 0; b < k; ++b) {
    std::size_t size = base + (std::size_t(b) < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) bins[b].push_back(items[cursor++].first);
  }
  return bins;
}

namespace {

bool sentence_has_word(std::string_view sentence, std::string_view word) {
  std::string lowered;
  lowered.reserve(sentence.size());
  for (char c : sentence) lowered += char(std::tolower(static_cast<unsigned char>(c)));
  std::istringstream stream(lowered);
  std::string token;
  while (stream >> token) {
    while (!token.empty() && !std::isalpha(static_cast<unsigned char>(token.back())))
      token.pop_back();
    if (token == word) return true;
  }
  return false;
}

bool passive_shape(std::string_view sentence) {
  std::string lowered;
  for (char c : sentence) lowered += char(std::tolower(static_cast<unsigned char>(c)));
  std::istringstream stream(lowered);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) {
    while (!token.empty() && !std::isalpha(static_cast<unsigned char>(token.back())))
      token.pop_back();
    tokens.push_back(token);
  }
  static const std::set<std::string> aux = {"is",   "are",  "was", "were",
                                            "be",   "been", "being"};
  auto participle = [](const std::string& w) {
    return w.size() > 3 && (w.ends_with("ed") || w.ends_with("en"));
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (participle(tokens[i])) {
      if (i > 0 && aux.count(tokens[i - 1])) return true;
      if (i + 1 < tokens.size() && tokens[i + 1] == "by") return true;
    }
  }
  return false;
}

}  // namespace

CategoryFlags detect_categories(const Formula& f, std::string_view sentence) {
  CategoryFlags flags;
  flags.source = CategoryFlags::Source::Heuristic;

  // Role structure per event variable, and the unary predicates on events.
  std::map<std::string, std::set<std::string>> subj_of, roles_of;
  std::map<std::string, std::set<std::string>> event_preds;  // pred -> events
  bool event_entity_binary = false;
  for_each_atom(f, [&](const Atom& a) {
    if (a.kind == AtomKind::RoleEq) {
      if (!is_variable(a.args[0])) return;
      const std::string& event = term_name(a.args[0]);
      roles_of[event].insert(a.predicate);
      if (a.predicate == "subj" && is_variable(a.args[1]))
        subj_of[event].insert(term_name(a.args[1]));
      return;
    }
    if (a.kind != AtomKind::Predicate) return;
    const auto* first = std::get_if<Variable>(&a.args[0]);
    if (a.args.size() == 1 && first && first->sort == Sort::Event)
      event_preds[a.predicate].insert(first->name);
    if (a.args.size() == 2 && first && first->sort == Sort::Event) {
      const auto* second = std::get_if<Variable>(&a.args[1]);
      if (second && second->sort == Sort::Entity) event_entity_binary = true;
    }
  });

  // Coordination expands into either two events of the same predicate or
  // two events hanging off one subject.
  bool shared_subject = false;
  std::map<std::string, int> subject_fanout;
  for (const auto& [event, subjects] : subj_of)
    for (const std::string& s : subjects)
      if (++subject_fanout[s] > 1) shared_subject = true;
  bool repeated_event_pred = false;
  for (const auto& [pred, events] : event_preds)
    if (events.size() > 1) repeated_event_pred = true;
  flags.cc = shared_subject || repeated_event_pred ||
             sentence_has_word(sentence, "and") || sentence_has_word(sentence, "or");

  flags.pp = event_entity_binary;

  bool obj_without_subj = false;
  for (const auto& [event, roles] : roles_of)
    if (roles.count("obj") && !roles.count("subj")) obj_without_subj = true;
  flags.pss = obj_without_subj || passive_shape(sentence);

  return flags;
}

const char* error_label_name(ErrorLabel label) {
  switch (label) {
    case ErrorLabel::QuantifierCount: return "QuantifierCount";
    case ErrorLabel::PolarityMismatch: return "PolarityMismatch";
    case ErrorLabel::ArgumentRoleOrder: return "ArgumentRoleOrder";
    case ErrorLabel::SubformulaPresence: return "SubformulaPresence";
    case ErrorLabel::PredicateSymbols: return "PredicateSymbols";
    case ErrorLabel::Other: return "Other";
  }
  return "Other";
}

namespace {

ClauseSet swap_role_labels(ClauseSet cs) {
  for (Clause& c : cs.clauses) {
    if (c.label == "subj") c.label = "obj";
    else if (c.label == "obj") c.label = "subj";
  }
  return cs;
}

// Collapses every predicate and role label to one token, keeping the
// reserved structural labels. Two clause sets that align perfectly after
// blinding differ at most in what their clauses are called.
ClauseSet blind_labels(ClauseSet cs) {
  for (Clause& c : cs.clauses)
    if (c.label != "NOT" && c.label != "EQ") c.label = "*";
  return cs;
}

}  // namespace

ErrorLabel classify_error(const Formula& gold, const Formula& predicted,
                          const SearchConfig& cfg) {
  if (!free_variables(gold).empty() || !free_variables(predicted).empty())
    throw PreconditionError("classify_error requires closed formulas");

  QuantifierCounts gold_counts = bound_variable_counts(gold);
  QuantifierCounts pred_counts = bound_variable_counts(predicted);
  if (gold_counts != pred_counts) return ErrorLabel::QuantifierCount;

  if (count_negations(gold) != count_negations(predicted))
    return ErrorLabel::PolarityMismatch;

  ClauseSet gold_cs, pred_cs;
  try {
    gold_cs = formula_to_clauses(gold);
    pred_cs = formula_to_clauses(predicted);
  } catch (const ConversionError&) {
    return ErrorLabel::Other;
  }

  auto perfect = [&](const ClauseSet& a, const ClauseSet& b) {
    if (a.clauses.size() != b.clauses.size()) return false;
    Alignment alignment = best_alignment(a, b, cfg);
    return alignment.matched == int(a.clauses.size());
  };

  if (perfect(gold_cs, swap_role_labels(pred_cs)))
    return ErrorLabel::ArgumentRoleOrder;

  Alignment alignment = best_alignment(gold_cs, pred_cs, cfg);
  std::size_t smaller = std::min(gold_cs.clauses.size(), pred_cs.clauses.size());
  if (gold_cs.clauses.size() != pred_cs.clauses.size() &&
      alignment.matched == int(smaller))
    return ErrorLabel::SubformulaPresence;

  if (gold_cs.clauses.size() == pred_cs.clauses.size() &&
      only_label_mismatches(gold_cs, pred_cs, alignment))
    return ErrorLabel::PredicateSymbols;
  return ErrorLabel::Other;
}

}  // namespace logiceval
