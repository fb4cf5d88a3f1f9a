#pragma once

#include "manna/problem.hpp"

namespace manna {

/// Reference profiles the competitive rule is compared against.
struct BaselineResult {
  UtilityProfile fairShare;    // u_i.e/n
  UtilityProfile uMax;         // per-agent best: sum of positive entries
  UtilityProfile egalitarian;  // equal normalized gains, then efficiency
};

UtilityProfile fair_share(const Problem& p);
UtilityProfile max_feasible(const Problem& p);

struct EgalitarianResult {
  UtilityProfile profile;
  Allocation allocation;
};

/// Maximizes the common normalized gain (U_i - FS_i)/(uMax_i - FS_i),
/// then restores efficiency by maximizing total utility subject to that
/// gain level. Throws DegenerateAgent when some uMax_i equals FS_i.
EgalitarianResult egalitarian(const Problem& p);

BaselineResult baselines(const Problem& p);

}  // namespace manna
