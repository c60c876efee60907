// Parser and surface-level checks for the fragment grammar:
//
//   formula  := '-' formula
//             | 'exists' var+ '.' formula
//             | '(' group ')'
//             | name '(' term (',' term)* ')'
//   group    := formula ('&' formula)*
//             | name '(' term ')' '=' term        role equality
//             | term '=' term                     term equality
//
// Equalities require their surrounding parentheses; '&' sequences are
// n-ary. Universal quantification, disjunction, and implication are
// outside the fragment and rejected with a pointed message.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "logiceval/formula.hpp"

namespace logiceval {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  // Byte offset into the input at which the problem was detected.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text);

struct Diagnostic {
  std::string message;
  std::size_t begin = 0;  // byte span [begin, end)
  std::size_t end = 0;
};

// Well-formedness is decided by three checks: the text parses, the formula
// is closed, and no variable name is bound twice along one scope chain.
// Bound-but-unused variables pass. Predicates used with inconsistent
// arities are reported as diagnostics without failing the formula.
struct WffReport {
  bool parsed = false;
  bool closed = false;
  bool duplicate_bindings = false;
  bool is_wff = false;
  std::vector<Diagnostic> diagnostics;
  std::optional<Formula> formula;  // present iff parsed
};

WffReport check_wff(std::string_view text);

// Surface equality up to whitespace: token breaks between word characters
// need a single space, all other whitespace is ignored. No reordering or
// renaming, so "exists e1.( jump(e1) )" matches "exists e1.(jump(e1))"
// while reordered conjuncts do not.
bool exact_match(std::string_view gold, std::string_view predicted);

}  // namespace logiceval
