// Box-style discourse representation of fragment formulas, and the flat
// clause inventory used for matching. Only conditions become clauses;
// referent introductions do not, so a box contributes exactly one clause
// per condition. Negation appears as a NOT clause linking two boxes.

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "logiceval/formula.hpp"

namespace logiceval {

class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Drs;

// A condition is an atom of the owning box or a negated sub-box.
struct NegBox;
using Condition = std::variant<Atom, NegBox>;

struct Drs {
  std::vector<Variable> referents;  // in order of first occurrence
  std::vector<Condition> conditions;
};

struct NegBox {
  std::vector<Drs> inner;  // exactly one element; vector sidesteps recursion
  const Drs& box() const { return inner.front(); }
};

// Converts a closed fragment formula (negations outermost). All quantified
// variables become referents of the innermost content box; each prefix
// negation wraps it in a box holding a single negated sub-box.
Drs fol_to_drs(const Formula& f);

struct ClauseArg {
  enum class Kind { Var, Const, Box };
  Kind kind = Kind::Var;
  std::string name;  // variable name, constant name, or box id

  bool operator==(const ClauseArg&) const = default;
  auto operator<=>(const ClauseArg&) const = default;
};

// One line of the flat inventory: <box> <label> <arg>*. Labels are
// predicate or role names plus the reserved uppercase EQ and NOT.
struct Clause {
  std::string box;
  std::string label;
  std::vector<ClauseArg> args;

  bool operator==(const Clause&) const = default;
  auto operator<=>(const Clause&) const = default;
};

struct ClauseSet {
  std::vector<Clause> clauses;
  std::vector<std::string> boxes;      // b1 (root), b2, ... in DFS order
  std::set<std::string> variables;
};

// Flattens a DRS. Box ids are canonical: b1 is the root, nested boxes are
// numbered in depth-first order of appearance.
ClauseSet drs_to_clauses(const Drs& drs);

// The textual dump, one clause per line, space separated.
std::string clause_dump(const ClauseSet& cs);

// fol_to_drs followed by drs_to_clauses.
ClauseSet formula_to_clauses(const Formula& f);

}  // namespace logiceval
