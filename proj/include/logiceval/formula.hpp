// Core AST for the event-semantics first-order fragment:
// possibly-negated existentially quantified conjunctions of atoms.
//
// Variables carry a sort in their surface name ("e.." events, "x.."
// entities). All nodes are immutable value types; every operation in this
// library is a pure function over them.

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace logiceval {

enum class Sort { Event, Entity };

// A quantifiable variable. The surface name fully determines it: sort
// letter ('e' or 'x') followed by an optional numeric index.
struct Variable {
  Sort sort = Sort::Entity;
  int index = 0;     // numeric suffix; 0 when the name has none ("e", "x")
  std::string name;  // surface token, e.g. "e1", "x2"

  // Parses a token of variable shape; nullopt for anything else.
  static std::optional<Variable> from_name(std::string_view token);
  static Variable make(Sort sort, int index);

  bool operator==(const Variable& o) const noexcept { return name == o.name; }
  std::strong_ordering operator<=>(const Variable& o) const noexcept {
    return name <=> o.name;
  }
};

// An individual constant: a bare identifier without variable shape.
struct Constant {
  std::string name;
  bool operator==(const Constant&) const = default;
  auto operator<=>(const Constant&) const = default;
};

using Term = std::variant<Variable, Constant>;

bool is_variable(const Term& t);
const std::string& term_name(const Term& t);

enum class AtomKind { Predicate, RoleEq, TermEq };

// Atomic condition, one of three shapes:
//   Predicate  jump(e1), in(e1,x3)     name + args, arity >= 1
//   RoleEq     (subj(e1) = x2)         role name + [event term, value term]
//   TermEq     (x1 = x2)               two terms, no name
struct Atom {
  AtomKind kind = AtomKind::Predicate;
  std::string predicate;  // Predicate and RoleEq kinds only
  std::vector<Term> args;

  static Atom pred(std::string name, std::vector<Term> args);
  static Atom role_eq(std::string role, Term event, Term value);
  static Atom term_eq(Term lhs, Term rhs);

  bool operator==(const Atom&) const = default;
};

// Formula node. An Exists node binds an ordered list of variables at once
// ("exists e1 x2 x3" is a single node binding three).
struct Formula {
  enum class Kind { Atomic, Neg, Exists, Conj };

  Kind kind = Kind::Atomic;
  Atom atom;                      // Atomic
  std::vector<Variable> bound;    // Exists: nonempty
  std::vector<Formula> children;  // Neg: 1, Exists: 1, Conj: >= 2

  bool operator==(const Formula&) const = default;
};

Formula make_atom(Atom a);
Formula make_neg(Formula f);
Formula make_exists(std::vector<Variable> vars, Formula body);
Formula make_conj(std::vector<Formula> children);

// Canonical surface form: "exists e1 x2." prefixes with parenthesized
// bodies, " & " separators, equalities parenthesized with spaces around
// "=", no space after argument commas. parse(print(f)) == f structurally.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);
std::string print_atom(const Atom& a);

// Variables occurring in atoms without an enclosing binder. Variables
// bound but never used do not appear.
std::set<Variable> free_variables(const Formula& f);

// Renames binder lists and term occurrences by surface name. Intended for
// formulas whose binders are pairwise distinct; names missing from the map
// are kept. Target names must have variable shape.
Formula rename_variables(const Formula& f,
                         const std::map<std::string, std::string>& renaming);

// Number of negation nodes anywhere in the formula.
int count_negations(const Formula& f);

struct QuantifierCounts {
  int events = 0;
  int entities = 0;
  bool operator==(const QuantifierCounts&) const = default;
};

// Counts bound variables per sort across all quantifier nodes, counting
// every entry of an abbreviated list (duplicates included).
QuantifierCounts bound_variable_counts(const Formula& f);

// Visits every atom in depth-first, left-to-right order.
template <typename Fn>
void for_each_atom(const Formula& f, Fn&& fn) {
  switch (f.kind) {
    case Formula::Kind::Atomic:
      fn(f.atom);
      break;
    default:
      for (const Formula& c : f.children) for_each_atom(c, fn);
      break;
  }
}

}  // namespace logiceval
