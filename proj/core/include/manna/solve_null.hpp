#pragma once

#include "manna/division.hpp"
#include "manna/problem.hpp"

namespace manna {

/// Agent weights separating the feasible utility set from the positive
/// orthant of the optimistic agents: max sum_i lambda_i (u_i.z_i) over
/// feasible allocations is exactly zero. Strictly positive on the
/// optimistic agents; the weights of the remaining agents account for
/// the bads they could otherwise absorb for free.
struct SeparatingWeights {
  RatVec lambdaFull;   // per agent
  RatVec lambdaNPlus;  // restriction to the optimistic agents, in order
};

/// Extracted from the classifier duals at optimum zero; re-solved on the
/// dual-optimal face for a strictly positive vector if any optimistic
/// component comes back zero. Throws NotNull.
SeparatingWeights separating_weights(const Problem& p);

/// The competitive division of a null problem: zero utility profile,
/// budget 0, prices p_a = max_i lambda_i u_ia on goods and
/// p_b = -min_i lambda_i |u_ib| on bads (optimistic agents), zero on
/// neutral items; every agent spends exactly 0. Throws NotNull.
CompetitiveDivision solve_null(const Problem& p);

}  // namespace manna
