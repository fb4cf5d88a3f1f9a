#pragma once

#include <cstdint>
#include <vector>

#include "manna/problem.hpp"

namespace manna {

/// Parameters of the weight-grid search. The tolerance bounds both the
/// accepted feasibility violation and the cluster radius when comparing
/// against exact profiles.
struct GridSpec {
  int resolution = 200;
  Rat tolerance = Rat(1, 1000000);
};

/// Approximate search for every critical profile of a negative problem,
/// independent of the exact solver: for each strictly positive weight
/// vector w on the simplex grid, the welfare optimum W(w) (computed in
/// closed form, item by item) proposes the candidate U_i = W/(n w_i);
/// candidates are polished by iterating w <- normalized 1/|U| against a
/// floating-point feasibility program, then kept when they are feasible
/// within tolerance and strictly negative, and clustered. Returns one
/// representative per cluster, sorted. Throws NotNegative when the
/// problem is not negative; supports up to four agents.
std::vector<std::vector<double>> grid_critical_points(const Problem& p,
                                                      const GridSpec& spec);

/// Deterministic random instance: integer utilities in [-9, 9], columns
/// never all-zero; roughly `mix` of the columns are drawn all-negative
/// and the remaining columns always contain a positive entry.
Problem random_problem(int nAgents, int nItems, std::uint64_t seed,
                       double mix);

}  // namespace manna
