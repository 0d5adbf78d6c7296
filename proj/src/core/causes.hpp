#pragma once

// Cause computation for query answers: a candidate cause for a tuple is the
// support of one body match producing that tuple; exact causes are the
// inclusion-minimal consistent candidates.

#include <vector>

#include "core/kb.hpp"

namespace priorepair {

struct AnswerCauses {
  std::vector<Constant> tuple;                  // one value per answer position
  std::vector<std::vector<FactIndex>> causes;   // sorted sets, deduped, lexicographic order

  friend bool operator==(const AnswerCauses&, const AnswerCauses&) = default;
};

// Candidate causes grouped by answer tuple (tuples sorted). Sets containing a
// self-inconsistent fact are dropped.
std::vector<AnswerCauses> candidate_causes(const Dataset& data, const QueryRewriting& query,
                                           const std::vector<FactIndex>& self_inconsistent);

// Inclusion-minimal consistent candidates per tuple. Tuples whose candidates
// are all inconsistent keep an empty cause list.
std::vector<AnswerCauses> exact_causes(const Dataset& data, const QueryRewriting& query,
                                       const std::vector<FactIndex>& self_inconsistent,
                                       const std::vector<Conflict>& conflicts);

}  // namespace priorepair
