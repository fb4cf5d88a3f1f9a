#pragma once

#include <vector>

#include "manna/problem.hpp"

namespace manna {

/// Common income sign of a competitive division.
enum class Budget : int { Negative = -1, Zero = 0, Positive = 1 };

inline int budget_value(Budget b) { return static_cast<int>(b); }

/// A competitive division: allocation, supporting prices and the common
/// budget. Prices are positive on goods, negative on bads and zero on
/// neutral items; every bundle is utility-maximal in the budget set and
/// spends as little as possible among such bundles.
struct CompetitiveDivision {
  Allocation allocation;
  RatVec prices;
  Budget budget = Budget::Zero;
  UtilityProfile profile;
};

}  // namespace manna
