#include "manna/solve_negative.hpp"

#include "allocation_canon.hpp"
#include "manna/classify.hpp"
#include "manna/errors.hpp"
#include "support_enum.hpp"

namespace manna {
namespace {

// Prices at a critical profile: goods priced by the optimistic agents,
// bads by the smallest disutility rate over everyone.
RatVec negative_prices(const Problem& norm, const Partitions& part,
                       const UtilityProfile& U) {
  RatVec p(norm.num_items());
  for (size_t a : part.aPlus) {
    bool first = true;
    for (size_t i : part.nPlus) {
      const Rat r = norm.u[i][a] / U[i].abs();
      if (first || r > p[a]) p[a] = r;
      first = false;
    }
  }
  for (size_t b : part.aMinus) {
    bool first = true;
    for (size_t i = 0; i < norm.num_agents(); ++i) {
      const Rat r = norm.u[i][b] / U[i].abs();
      if (first || r > p[b]) p[b] = r;  // -min |u|/|U| = max u/|U|
      first = false;
    }
  }
  return p;
}

}  // namespace

bool criticality_check(const Problem& p, const UtilityProfile& U) {
  if (U.size() != p.num_agents())
    throw InputError("profile size mismatch");
  RatVec weights(p.num_agents());
  for (size_t i = 0; i < U.size(); ++i) {
    if (U[i].sign() >= 0)
      throw NonNegativeComponent("criticality check needs U_" +
                                 std::to_string(i + 1) + " < 0");
    weights[i] = U[i].abs().reciprocal();
  }
  const Rat n(static_cast<long long>(p.num_agents()));
  return welfare_optimum(p, weights) == -n;
}

std::vector<CompetitiveDivision> solve_negative(const Problem& p) {
  p.validate();
  if (classify(p).kind != Kind::Negative) throw NotNegative();

  const Problem norm = normalize_ilb(p);
  const Partitions part = partition(p);
  const auto candidates =
      detail::enumerate_critical_candidates(norm, part, /*negative=*/true);

  std::vector<CompetitiveDivision> out;
  for (const auto& cand : candidates) {
    bool strictly_negative = true;
    for (const Rat& u : cand.profile)
      if (u.sign() >= 0) { strictly_negative = false; break; }
    if (!strictly_negative) continue;
    if (!criticality_check(norm, cand.profile)) continue;

    CompetitiveDivision d;
    d.budget = Budget::Negative;
    d.profile = cand.profile;
    d.prices = negative_prices(norm, part, cand.profile);
    d.allocation = detail::canonical_allocation(p, part, cand.profile);
    out.push_back(std::move(d));
  }
  // Candidates arrive deduplicated and profile-sorted.
  return out;
}

}  // namespace manna
