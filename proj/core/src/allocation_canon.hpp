#pragma once

#include "manna/problem.hpp"

namespace manna::detail {

/// Canonical allocation implementing a competitive profile: neutral
/// items go whole to the lowest-index agent valuing them zero, and the
/// remaining columns are the lexicographically smallest point (row-major
/// agent/item order) of {z >= 0, unit columns, u_i.z_i = U_i}, computed
/// by sequential minimization. Every implementing allocation of a
/// competitive profile is itself competitive, so the choice is only a
/// tie-break.
Allocation canonical_allocation(const Problem& p, const Partitions& part,
                                const UtilityProfile& profile);

/// True when the polytope above contains more than one point.
bool allocation_ambiguous(const Problem& p, const Partitions& part,
                          const UtilityProfile& profile);

}  // namespace manna::detail
