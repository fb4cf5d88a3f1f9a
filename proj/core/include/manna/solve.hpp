#pragma once

#include <vector>

#include "manna/classify.hpp"
#include "manna/division.hpp"
#include "manna/solve_negative.hpp"
#include "manna/solve_null.hpp"
#include "manna/solve_positive.hpp"

namespace manna {

struct CompetitiveSolution {
  Classification classification;
  std::vector<CompetitiveDivision> divisions;
};

/// True when several allocations implement this competitive profile
/// (the divisions then differ in shares but not in welfare).
bool allocation_ambiguous(const Problem& p, const UtilityProfile& profile);

/// Classifies and dispatches to the matching solver. Positive and null
/// problems yield one division; negative problems yield every division
/// up to utility-profile equivalence.
inline CompetitiveSolution solve_competitive(const Problem& p) {
  CompetitiveSolution out;
  out.classification = classify(p);
  switch (out.classification.kind) {
    case Kind::Positive:
      out.divisions.push_back(solve_positive(p));
      break;
    case Kind::Negative:
      out.divisions = solve_negative(p);
      break;
    case Kind::Null:
      out.divisions.push_back(solve_null(p));
      break;
  }
  return out;
}

}  // namespace manna
