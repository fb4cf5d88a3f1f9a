#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "manna/classify.hpp"
#include "manna/division.hpp"
#include "manna/problem.hpp"

namespace manna {

struct CheckResult {
  bool pass = true;
  std::string witness;  // filled on failure
};

/// Named results of every competitive-division check. All true certifies
/// the division: bundle optimality and minimal wealth per agent, price
/// signs, clean consumption, efficiency, no envy, fair share, weak core
/// from equal split and sign solidarity.
struct VerificationReport {
  CheckResult priceSigns, consumption, demand, wealthMin, efficiency,
      noEnvy, fairShare, weakCore, solidarity;

  bool all_pass() const;
  std::vector<std::pair<std::string, const CheckResult*>> entries() const;
};

/// Exact per-bundle demand test: the bundle maximizes the agent's
/// utility in the budget set {p.y <= beta} and spends as little as any
/// maximizer. Covers the optimistic and pessimistic cases for every
/// budget sign. Throws PriceSignError when prices break the required
/// sign pattern.
bool check_demand(const Problem& p, size_t agent, const RatVec& bundle,
                  const RatVec& prices, Budget beta);

/// u_i.z_i >= u_i.z_j for every ordered pair.
bool check_no_envy(const Problem& p, const Allocation& z);

/// u_i.z_i >= u_i.e/n for every agent.
bool check_fair_share(const Problem& p, const Allocation& z);

/// No coalition S can strictly improve every member using |S|/n of the
/// whole endowment (one LP per coalition). Throws InputError beyond
/// twelve agents.
bool check_weak_core(const Problem& p, const Allocation& z);

/// Standard-core diagnostic: weak improvement for all of S, strict for
/// at least one. Returns the first blocking coalition in bitmask order,
/// or nothing. Competitive divisions can fail this stronger notion.
std::optional<std::vector<size_t>> standard_core_blocking(const Problem& p,
                                                          const Allocation& z);

/// All profiles weakly positive for positive/null problems, or all
/// weakly negative for negative/null problems.
bool check_solidarity(const std::vector<CompetitiveDivision>& divisions,
                      Kind kind);

/// Runs every check against one division. The division's profile must
/// match its allocation (InputError otherwise).
VerificationReport verify_division(const Problem& p,
                                   const CompetitiveDivision& d, Kind kind);

}  // namespace manna
