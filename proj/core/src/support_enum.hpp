#pragma once

#include <vector>

#include "manna/problem.hpp"

namespace manna::detail {

/// A competitive-division candidate recovered from one consumption
/// forest: the ratio identities on the forest edges determine utilities
/// and prices up to one scalar per connected component, the scalar is
/// pinned by the component budget sum, and the allocation solves the
/// column/budget system on the tree edges.
struct CriticalCandidate {
  UtilityProfile profile;  // full length, zero outside the agent scope
  RatVec prices;           // full length, zero on neutral items
  Allocation allocation;   // witness with support inside the forest
};

/// Enumerates forest-shaped consumption graphs and keeps candidates that
/// survive the exact demand filters (ratio bounds on every agent/item
/// pair, budget-sign scaling, nonnegative allocation).
///
/// negative_mode = false: scope is the optimistic agents, budgets +1,
/// every scope agent needs an edge into some good it values positively.
/// negative_mode = true: scope is every agent, budgets -1, every agent
/// needs an edge into a bad.
///
/// `p` must already be ILB-normalized. Returns candidates deduplicated
/// by profile (lexicographically smallest witness allocation kept) and
/// sorted by profile.
std::vector<CriticalCandidate> enumerate_critical_candidates(
    const Problem& p, const Partitions& part, bool negative_mode);

}  // namespace manna::detail
