#pragma once

#include <vector>

#include "manna/division.hpp"
#include "manna/problem.hpp"

namespace manna {

/// All competitive divisions of a negative problem, one representative
/// per utility profile, sorted lexicographically by profile. Every
/// profile is strictly negative, efficient, and critical for the product
/// of disutilities; prices make each agent spend exactly -1.
/// Throws NotNegative unless classify(p) is Negative.
std::vector<CompetitiveDivision> solve_negative(const Problem& p);

/// True iff the hyperplane with normal 1/|U_i| supports the feasible
/// utility set at U: the welfare program with those weights has optimum
/// exactly -n. Throws NonNegativeComponent unless U < 0 componentwise.
bool criticality_check(const Problem& p, const UtilityProfile& U);

}  // namespace manna
