// Stratification helpers: the structural complexity measure, equal-width
// binning over it, the linguistic-category heuristics, and the error
// taxonomy for pairs the prover rejects.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logiceval/dmatch.hpp"
#include "logiceval/formula.hpp"

namespace logiceval {

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bound variables + negations + (n-1) per n-ary conjunction.
int complexity(const Formula& f);

// Splits (id, complexity) items into k contiguous groups of nearly equal
// size (first groups take the remainder), after a stable sort by
// complexity with ties broken by id. Returns the ids per bin.
std::vector<std::vector<std::string>> bin_by_complexity(
    std::vector<std::pair<std::string, int>> items, int k = 6);

struct CategoryFlags {
  bool cc = false;   // coordination
  bool pp = false;   // prepositional phrase
  bool pss = false;  // passive
  enum class Source { Provided, Heuristic };
  Source source = Source::Heuristic;
};

// Fallback heuristics for corpora without provided flags:
//   cc   "and"/"or" in the sentence, or two events sharing a subject or a
//        predicate (the two coordination expansion shapes)
//   pp   a binary predicate over an event and an entity
//   pss  an event with an obj role but no subj role, or a passive
//        auxiliary shape in the sentence
CategoryFlags detect_categories(const Formula& f, std::string_view sentence = {});

enum class ErrorLabel {
  QuantifierCount,
  PolarityMismatch,
  ArgumentRoleOrder,
  SubformulaPresence,
  PredicateSymbols,
  Other,
};

const char* error_label_name(ErrorLabel label);

// Assigns the first matching label, checked in the order: per-sort bound
// variable counts differ; negation counts differ; clause sets equal after
// swapping subj/obj; one clause set strictly contains the other; the only
// residue is same-argument clauses with different labels; otherwise Other.
// Inputs must be closed (PreconditionError). Meant for non-equivalent
// pairs; labels carry no meaning for matching ones.
ErrorLabel classify_error(const Formula& gold, const Formula& predicted,
                          const SearchConfig& cfg = {});

}  // namespace logiceval
