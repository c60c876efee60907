// Prenex normalization: strip raw-output predicate decorations, pull all
// existential quantifiers into one prefix, renumber variables canonically.
// The composition is idempotent and preserves the atom multiset, the
// negation count, and every variable's sort.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "logiceval/formula.hpp"

namespace logiceval {

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A prefix of negations wrapping a quantifier-and-conjunction structure,
// flattened into the quantified variables (occurrence order) and the atoms
// (depth-first, left-to-right). Binders that reuse an earlier name are
// renamed apart.
struct PositiveBody {
  std::vector<Variable> vars;
  std::vector<Atom> atoms;
};

// Flattens a negation-free, closed formula. Throws NormalizationError when
// a negation sits below a quantifier or conjunction, or when the formula
// is not closed.
PositiveBody collect_positive_body(const Formula& f);

// Removes leading underscores from every predicate and role name; nothing
// else is touched, so "_in_front_of" becomes "in_front_of".
Formula strip_predicate_decorations(const Formula& f);

// Moves all quantifiers into a single prefix above one n-ary conjunction,
// keeping the original variable names. Events come first (by first
// quantifier occurrence), then entities, matching the corpus convention.
// Negations stay outermost; a negation anywhere deeper raises
// NormalizationError.
Formula pull_quantifiers(const Formula& f);

// Ordered variable renaming, injective and sort-preserving.
struct Renaming {
  std::vector<std::pair<Variable, Variable>> pairs;
};

// The canonical renaming for a prenex formula: the i-th prefix variable
// maps to index i (1-based) under its own sort letter.
Renaming prenex_renumbering(const Formula& f);

// Applies the canonical renaming. Requires prenex shape (negations, then
// at most one quantifier node, then a negation-free body).
Formula renumber_variables(const Formula& f);

// strip, pull, renumber, in that order.
Formula normalize(const Formula& f);

}  // namespace logiceval
