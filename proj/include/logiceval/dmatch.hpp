// Clause-set matching by variable alignment, Smatch-style: a restarted
// hill-climbing search over injective variable and box mappings from the
// gold side into the predicted side, maximizing the number of clauses that
// coincide under the mapping. Root boxes are always pre-paired. The
// exhaustive search is kept alongside as an oracle for small inputs.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "logiceval/drs.hpp"

namespace logiceval {

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Alignment {
  std::map<std::string, std::string> var_map;  // gold var -> predicted var
  std::map<std::string, std::string> box_map;  // gold box -> predicted box
  int matched = 0;
};

struct MatchScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int matched = 0;
};

struct SearchConfig {
  int restarts = 20;        // first restart is the smart initialization
  int max_iterations = 1000;
  std::uint64_t rng_seed = 1;
};

// Best alignment the search finds; deterministic for a fixed config.
Alignment best_alignment(const ClauseSet& gold, const ClauseSet& predicted,
                         const SearchConfig& cfg = {});

// Global optimum by enumeration of all injective mappings, with the
// smaller variable side mapped totally into the larger. Raises SizeError
// when either side has more than max_vars variables (or more than
// max_boxes boxes).
Alignment brute_force_alignment(const ClauseSet& gold, const ClauseSet& predicted,
                                int max_vars = 8, int max_boxes = 6);

// Precision = matched/|predicted|, recall = matched/|gold|, harmonic F1.
// Two empty clause sets score 1.0; exactly one empty scores 0.0.
MatchScore dmatch_score(const ClauseSet& gold, const ClauseSet& predicted,
                        const SearchConfig& cfg = {});

}  // namespace logiceval
