#pragma once

#include "manna/classify.hpp"
#include "manna/division.hpp"
#include "manna/problem.hpp"

namespace manna {

/// The unique utility profile maximizing the product of utilities over
/// the optimistic agents among feasible nonnegative profiles. Certified
/// by the supporting-hyperplane program: positive_support_value at the
/// result equals the number of optimistic agents, exactly.
/// Throws NotPositive unless classify(p) is Positive.
UtilityProfile nash_optimum(const Problem& p);

/// The competitive division of a positive problem: budget +1, prices
/// p_a = max_i u_ia / U_i over goods, p_b = -min_i |u_ib| / U_i over
/// bads (optimistic agents only), zero on neutral items. Every
/// optimistic agent spends exactly 1; the rest consume only items they
/// value at zero and spend 0. Throws NotPositive.
CompetitiveDivision solve_positive(const Problem& p);

/// Optimum of  max sum_{i optimistic} (u_i.z_i)/U_i  over feasible
/// allocations keeping pessimistic agents at zero utility. Equals the
/// number of optimistic agents iff U is the product maximizer.
Rat positive_support_value(const Problem& p, const UtilityProfile& U);

}  // namespace manna
