// TPTP FOF export and the external prover bridge. Symbol mangling is
// deterministic: variables are uppercased (e1 -> E1), every other symbol
// is emitted verbatim when it already matches the TPTP lower_word shape
// [a-z][a-zA-Z0-9_]* and as a single-quoted atom otherwise. A role
// equality "(subj(e1) = x2)" renders as the binary atom r_subj(E1,X2),
// and each role gets an axiom making it functional in its first argument.
// Binary atoms instead of function equations keep roles partial: an event
// need not have a subj, so "exists e x.(eat(e) & (subj(e) = x))" is
// strictly stronger than "exists e.eat(e)".

#pragma once

#include <string>

#include "logiceval/formula.hpp"

namespace logiceval {

enum class TptpDirection { Forward, Backward };

// A complete FOF problem: role functionality axioms, the axiom, and the
// conjecture. Forward proves first |= second; Backward swaps them.
std::string to_tptp(const Formula& first, const Formula& second,
                    TptpDirection direction = TptpDirection::Forward);

enum class ProverOutcome { Theorem, NotTheorem, Timeout, Error };

struct ProverConfig {
  // Executable plus flags; the problem file path is appended. Example:
  // "vampire --mode casc -t 10".
  std::string command;
  double timeout_seconds = 10.0;
};

// Runs the configured prover on a problem string and maps its SZS status
// line: Theorem/Unsatisfiable to Theorem, CounterSatisfiable/Satisfiable
// to NotTheorem, GaveUp/ResourceOut/Timeout (or a wall-clock kill) to
// Timeout, anything else to Error.
ProverOutcome external_prove(const std::string& problem, const ProverConfig& cfg);

}  // namespace logiceval
