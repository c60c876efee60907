// Decision procedure for entailment between fragment sentences. A
// sentence is a stack of outer negations over a positive existential
// conjunction; double negations cancel, which leaves four polarity cases:
//
//   pos  |= pos   homomorphism from the conclusion's atoms into the
//                 congruence-closed canonical model of the premise
//   neg  |= neg   contrapositive, decided as the flipped positive case
//   pos  |= neg   never holds (positive conjunctions are satisfiable
//                 jointly with anything positive)
//   neg  |= pos   holds exactly when the conclusion is valid, i.e. its
//                 atoms are term equalities solvable by identifying
//                 variables
//
// A role equation reads as a partial function: a conclusion role atom
// must be witnessed by a premise role fact, and two facts for the same
// role on the same event merge their value classes. Domains are never
// empty.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logiceval/formula.hpp"
#include "logiceval/tptp.hpp"

namespace logiceval {

struct FragmentShape {
  int negations = 0;
  bool supported = false;  // outermost negations over a negation-free body
  Formula body;            // the positive part; meaningful when supported
};

FragmentShape classify_fragment(const Formula& f);

// Ground image of a positive existential conjunction: one Skolem constant
// per bound variable (keeping its name), plus the input constants.
struct FactBase {
  struct Fact {
    std::string predicate;
    std::vector<std::string> args;
    auto operator<=>(const Fact&) const = default;
  };
  struct RoleAssign {
    std::string role;
    std::string event;
    std::string value;
  };

  std::vector<std::string> universe;   // Skolem constants, binder order
  std::vector<std::string> constants;  // first-occurrence order
  std::vector<Fact> facts;
  std::vector<RoleAssign> roles;
  std::vector<std::pair<std::string, std::string>> equalities;
};

FactBase skolemize(const Formula& positive_body);

// Equality saturation over the fact base. Role assignments behave as
// functions: equal events force their role values together. Facts and
// role values are canonicalized to class representatives (the
// lexicographically smallest member).
struct CongruenceResult {
  std::vector<std::vector<std::string>> classes;
  std::map<std::string, std::string> representative;
  std::vector<FactBase::Fact> facts;  // deduplicated, canonical args
  std::map<std::pair<std::string, std::string>, std::string> role_values;
};

CongruenceResult congruence_closure(const FactBase& fb);

enum class EntailVerdict { Entails, NotEntails, Unsupported, Timeout };

struct EntailConfig {
  std::uint64_t max_steps = 2'000'000;  // homomorphism search nodes
  // When nonempty, shapes the internal procedure cannot classify are
  // handed to an external prover over the TPTP export.
  std::string prover_command;
  double prover_timeout_seconds = 10.0;
};

struct EntailResult {
  EntailVerdict verdict = EntailVerdict::Unsupported;
  // Homomorphism witness for the positive/positive Entails case:
  // conclusion variable -> premise model element.
  std::optional<std::map<std::string, std::string>> witness;
};

// Does premise entail conclusion? Both formulas must be closed.
EntailResult entails(const Formula& premise, const Formula& conclusion,
                     const EntailConfig& cfg = {});

enum class Relation {
  Equivalent,
  ForwardOnly,
  BackwardOnly,
  Contradiction,
  Neutral,
  Unsupported,
};

const char* relation_name(Relation r);

// Joint classification with precedence Equivalent, then one-directional,
// then Contradiction (the conjunction is unsatisfiable), then Neutral.
// Budget exhaustion in a direction that matters degrades to Unsupported.
Relation logical_relation(const Formula& gold, const Formula& predicted,
                          const EntailConfig& cfg = {});

// The strict score: true exactly when gold and predicted are equivalent.
bool prover_accuracy_verdict(const Formula& gold, const Formula& predicted,
                             const EntailConfig& cfg = {});

}  // namespace logiceval
