#include "manna/solve_positive.hpp"

#include <stdexcept>

#include "allocation_canon.hpp"
#include "manna/errors.hpp"
#include "manna/linprog.hpp"
#include "support_enum.hpp"

namespace manna {
namespace {

// Price formula from the optimum profile: on goods the largest utility
// per unit of optimistic utility, on bads the smallest disutility rate.
RatVec positive_prices(const Problem& norm, const Partitions& part,
                       const UtilityProfile& U) {
  RatVec p(norm.num_items());
  for (size_t a : part.aPlus) {
    bool first = true;
    for (size_t i : part.nPlus) {
      const Rat r = norm.u[i][a] / U[i];
      if (first || r > p[a]) p[a] = r;
      first = false;
    }
  }
  for (size_t b : part.aMinus) {
    bool first = true;
    for (size_t i : part.nPlus) {
      const Rat r = norm.u[i][b] / U[i];
      if (first || r > p[b]) p[b] = r;  // least negative = smallest |u|/U
      first = false;
    }
  }
  return p;
}

}  // namespace

Rat positive_support_value(const Problem& p, const UtilityProfile& U) {
  const size_t n = p.num_agents(), m = p.num_items();
  const Partitions part = partition(p);
  LinearProgram lp;
  lp.objective.assign(n * m, Rat());
  for (size_t i : part.nPlus) {
    if (U[i].sign() <= 0)
      throw std::invalid_argument("support value needs a positive profile");
    for (size_t a = 0; a < m; ++a)
      lp.objective[i * m + a] = p.u[i][a] / U[i];
  }
  for (size_t a = 0; a < m; ++a) {
    RatVec row(n * m);
    for (size_t i = 0; i < n; ++i) row[i * m + a] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat(1));
    lp.senses.push_back(Sense::Equal);
  }
  for (size_t j : part.nMinus) {
    RatVec row(n * m);
    for (size_t a = 0; a < m; ++a) row[j * m + a] = p.u[j][a];
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat());
    lp.senses.push_back(Sense::GreaterEq);
  }
  return lp_solve(lp).value;
}

UtilityProfile nash_optimum(const Problem& p) {
  return solve_positive(p).profile;
}

CompetitiveDivision solve_positive(const Problem& p) {
  p.validate();
  const Classification cls = classify(p);
  if (cls.kind != Kind::Positive) throw NotPositive();

  const Problem norm = normalize_ilb(p);
  const Partitions part = partition(p);
  const Rat target(static_cast<long long>(part.nPlus.size()));

  const auto candidates =
      detail::enumerate_critical_candidates(norm, part, /*negative=*/false);
  const detail::CriticalCandidate* winner = nullptr;
  for (const auto& cand : candidates) {
    if (positive_support_value(norm, cand.profile) == target) {
      winner = &cand;
      break;  // the certified profile is unique
    }
  }
  if (winner == nullptr)
    throw std::logic_error("no certified support candidate on a positive problem");

  CompetitiveDivision division;
  division.budget = Budget::Positive;
  division.profile = winner->profile;
  division.prices = positive_prices(norm, part, winner->profile);
  division.allocation = detail::canonical_allocation(p, part, winner->profile);
  return division;
}

}  // namespace manna
