#pragma once

#include <vector>

#include "manna/rational.hpp"

namespace manna {

enum class Sense { LessEq, Equal, GreaterEq };
enum class VarBound { NonNegative, Free };
enum class LpStatus { Optimal, Infeasible, Unbounded };

/// max objective·x  subject to  constraints x {<=,=,>=} rhs,
/// x_j >= 0 or free per `bounds` (all nonnegative when empty).
struct LinearProgram {
  RatVec objective;
  RatMat constraints;
  RatVec rhs;
  std::vector<Sense> senses;
  std::vector<VarBound> bounds;

  size_t num_vars() const { return objective.size(); }
  size_t num_rows() const { return rhs.size(); }
};

/// Exact optimum with certificates.
///
/// When Optimal:
///   - value = objective·primal = rhs·dual (strong duality, exact);
///   - dual_i >= 0 on LessEq rows, <= 0 on GreaterEq rows, free on Equal;
///   - dual feasibility: sum_i dual_i A_ij >= objective_j for nonnegative
///     variables, with equality for free variables;
///   - complementary slackness holds exactly.
/// When Infeasible, `dual` carries a Farkas certificate y with the row
/// signs above, yᵀA_j >= 0 for nonnegative variables (= 0 for free ones)
/// and y·rhs < 0.
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  RatVec primal;
  RatVec dual;
};

/// Two-phase primal simplex on exact rationals, Bland's rule throughout;
/// deterministic. Throws InputError on inconsistent dimensions.
LpResult lp_solve(const LinearProgram& lp);

}  // namespace manna
