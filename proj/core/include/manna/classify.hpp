#pragma once

#include <optional>
#include <string>

#include "manna/problem.hpp"

namespace manna {

/// Trichotomy of problems by the position of the feasible utility set
/// relative to the nonnegative cone on the optimistic agents:
///   Positive: some feasible profile is strictly positive on nPlus and
///             zero on nMinus;
///   Null:     the zero profile is the only such nonnegative point;
///   Negative: no feasible profile is nonnegative in that sense.
enum class Kind { Positive, Negative, Null };

std::string to_string(Kind k);

struct Classification {
  Kind kind = Kind::Null;
  /// Optimum of the classifier program; empty when its constraints are
  /// infeasible (a Negative outcome).
  std::optional<Rat> lpValue;
  /// For Positive/Null: an allocation attaining the optimum.
  Allocation witness;
  /// Agent weights certifying the outcome: the classifier duals. For
  /// Negative problems they witness that no nonnegative profile exists.
  RatVec dualWeights;
};

/// Solves  max t  s.t.  z feasible, u_i.z_i >= t on nPlus,
/// u_j.z_j >= 0 on nMinus, and maps the optimum t* to the kind
/// (t* > 0 positive, t* = 0 null, t* < 0 or infeasible negative).
/// With nPlus empty the objective is dropped and feasibility alone
/// decides between Null and Negative.
Classification classify(const Problem& p);

/// True iff no feasible allocation weakly dominates z's profile with at
/// least one strict gain (checked by one LP with exact optimum zero).
bool efficiency_check(const Problem& p, const Allocation& z);

/// max sum_i weights_i (u_i.z_i) over feasible allocations.
Rat welfare_optimum(const Problem& p, const RatVec& weights);

}  // namespace manna
