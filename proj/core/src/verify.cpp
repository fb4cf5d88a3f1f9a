#include "manna/verify.hpp"

#include <sstream>

#include "manna/errors.hpp"
#include "manna/linprog.hpp"

namespace manna {
namespace {

struct DemandParts {
  bool utility_max = true;
  bool wealth_min = true;
};

void require_price_signs(const Problem& p, const Partitions& part,
                         const RatVec& prices) {
  if (prices.size() != p.num_items())
    throw InputError("price vector size mismatch");
  for (size_t a = 0; a < p.num_items(); ++a) {
    const int s = prices[a].sign();
    const bool ok = part.is_good(a) ? s > 0 : part.is_bad(a) ? s < 0 : s == 0;
    if (!ok)
      throw PriceSignError("price of item '" + p.items[a] +
                           "' breaks the sign pattern: " + prices[a].str());
  }
}

// Case analysis of one bundle against (prices, beta).
DemandParts demand_parts(const Problem& p, const Partitions& part,
                         size_t agent, const RatVec& bundle,
                         const RatVec& prices, Budget beta) {
  if (bundle.size() != p.num_items())
    throw InputError("bundle size mismatch");
  for (const Rat& x : bundle)
    if (x.sign() < 0) throw InputError("bundle has a negative entry");

  DemandParts out;
  const Rat cost = dot(prices, bundle);
  const RatVec& u = p.u[agent];

  if (!part.agent_plus[agent]) {
    if (beta != Budget::Negative) {
      out.utility_max = dot(u, bundle).is_zero();
      out.wealth_min = cost.is_zero();
      return out;
    }
    out.wealth_min = cost == Rat(-1);
    for (size_t a = 0; a < p.num_items() && out.utility_max; ++a) {
      if (bundle[a].sign() == 0) continue;
      if (part.is_good(a)) out.utility_max = false;
      if (part.is_neutral(a) && !u[a].is_zero()) out.utility_max = false;
    }
    // consumed bads must carry the least disutility per unit of money:
    // flag |u_b|/|p_b| > |u_b2|/|p_b2|, i.e. u_b p_b2 > u_b2 p_b with
    // both products positive.
    for (size_t b : part.aMinus) {
      if (bundle[b].sign() == 0) continue;
      for (size_t b2 : part.aMinus)
        if (u[b] * prices[b2] > u[b2] * prices[b]) out.utility_max = false;
    }
    return out;
  }

  // optimistic agent: bounded demand requires every good rate to stay
  // below every bad rate
  for (size_t a : part.aPlus)
    for (size_t b : part.aMinus) {
      // u_a/p_a <= |u_b|/|p_b|  <=>  u_a |p_b| <= |u_b| p_a
      if (u[a] * -prices[b] > -u[b] * prices[a]) out.utility_max = false;
    }
  out.wealth_min = cost == Rat(budget_value(beta));

  for (size_t a = 0; a < p.num_items() && out.utility_max; ++a) {
    if (bundle[a].sign() == 0) continue;
    if (part.is_neutral(a)) {
      if (!u[a].is_zero()) out.utility_max = false;
    } else if (part.is_good(a)) {
      if (u[a].sign() <= 0) out.utility_max = false;
      // consumed goods maximize the utility rate
      for (size_t a2 : part.aPlus)
        if (u[a] * prices[a2] < u[a2] * prices[a]) out.utility_max = false;
    } else {
      // consumed bads minimize the disutility rate
      for (size_t b2 : part.aMinus)
        if (u[a] * prices[b2] > u[b2] * prices[a]) out.utility_max = false;
    }
  }
  // a good and a bad consumed together must have equal rates
  for (size_t a : part.aPlus) {
    if (bundle[a].sign() == 0) continue;
    for (size_t b : part.aMinus) {
      if (bundle[b].sign() == 0) continue;
      if (u[a] * prices[b] != u[b] * prices[a]) out.utility_max = false;
    }
  }
  return out;
}

// Blocking program for coalition S: the members reallocate |S|/n of the
// endowment. Weak core blocks need a uniform strict gain; standard core
// blocks need a weak gain with positive total.
struct CoalitionLp {
  LinearProgram lp;
  size_t nvars;
};

CoalitionLp coalition_base(const Problem& p, const Allocation& z,
                           const std::vector<size_t>& members, size_t extra) {
  const size_t m = p.num_items(), k = members.size();
  CoalitionLp c;
  c.nvars = k * m + extra;
  c.lp.objective.assign(c.nvars, Rat());
  const Rat share(static_cast<long long>(k),
                  static_cast<long long>(p.num_agents()));
  for (size_t a = 0; a < m; ++a) {
    RatVec row(c.nvars);
    for (size_t j = 0; j < k; ++j) row[j * m + a] = Rat(1);
    c.lp.constraints.push_back(std::move(row));
    c.lp.rhs.push_back(share);
    c.lp.senses.push_back(Sense::Equal);
  }
  for (size_t j = 0; j < k; ++j) {
    RatVec row(c.nvars);
    for (size_t a = 0; a < m; ++a) row[j * m + a] = p.u[members[j]][a];
    c.lp.constraints.push_back(std::move(row));
    c.lp.rhs.push_back(dot(p.u[members[j]], z[members[j]]));
    c.lp.senses.push_back(Sense::GreaterEq);
  }
  return c;
}

std::vector<std::vector<size_t>> all_coalitions(size_t n) {
  if (n > 12) throw InputError("coalition enumeration capped at 12 agents");
  std::vector<std::vector<size_t>> out;
  for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
    std::vector<size_t> members;
    for (size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    out.push_back(std::move(members));
  }
  return out;
}

std::string agent_list(const Problem& p, const std::vector<size_t>& members) {
  std::string s = "{";
  for (size_t j = 0; j < members.size(); ++j) {
    if (j) s += ",";
    s += p.agents[members[j]];
  }
  return s + "}";
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& [name, r] : entries())
    if (!r->pass) return false;
  return true;
}

std::vector<std::pair<std::string, const CheckResult*>>
VerificationReport::entries() const {
  return {{"priceSigns", &priceSigns}, {"consumption", &consumption},
          {"demand", &demand},         {"wealthMin", &wealthMin},
          {"efficiency", &efficiency}, {"noEnvy", &noEnvy},
          {"fairShare", &fairShare},   {"weakCore", &weakCore},
          {"solidarity", &solidarity}};
}

bool check_demand(const Problem& p, size_t agent, const RatVec& bundle,
                  const RatVec& prices, Budget beta) {
  p.validate();
  if (agent >= p.num_agents()) throw InputError("agent index out of range");
  const Partitions part = partition(p);
  require_price_signs(p, part, prices);
  const DemandParts parts = demand_parts(p, part, agent, bundle, prices, beta);
  return parts.utility_max && parts.wealth_min;
}

bool check_no_envy(const Problem& p, const Allocation& z) {
  validate_allocation(p, z);
  for (size_t i = 0; i < p.num_agents(); ++i)
    for (size_t j = 0; j < p.num_agents(); ++j)
      if (dot(p.u[i], z[i]) < dot(p.u[i], z[j])) return false;
  return true;
}

bool check_fair_share(const Problem& p, const Allocation& z) {
  validate_allocation(p, z);
  const UtilityProfile fs = equal_split_profile(p);
  for (size_t i = 0; i < p.num_agents(); ++i)
    if (dot(p.u[i], z[i]) < fs[i]) return false;
  return true;
}

bool check_weak_core(const Problem& p, const Allocation& z) {
  validate_allocation(p, z);
  for (const auto& members : all_coalitions(p.num_agents())) {
    CoalitionLp c = coalition_base(p, z, members, 1);
    const size_t dvar = c.nvars - 1;
    c.lp.objective[dvar] = Rat(1);
    c.lp.bounds.assign(c.nvars, VarBound::NonNegative);
    c.lp.bounds[dvar] = VarBound::Free;
    for (size_t j = 0; j < members.size(); ++j)
      c.lp.constraints[p.num_items() + j][dvar] = Rat(-1);
    const LpResult r = lp_solve(c.lp);
    if (r.status == LpStatus::Optimal && r.value.sign() > 0) return false;
    if (r.status == LpStatus::Unbounded) return false;
  }
  return true;
}

std::optional<std::vector<size_t>> standard_core_blocking(const Problem& p,
                                                          const Allocation& z) {
  validate_allocation(p, z);
  for (const auto& members : all_coalitions(p.num_agents())) {
    CoalitionLp c = coalition_base(p, z, members, members.size());
    for (size_t j = 0; j < members.size(); ++j) {
      const size_t evar = members.size() * p.num_items() + j;
      c.lp.objective[evar] = Rat(1);
      c.lp.constraints[p.num_items() + j][evar] = Rat(-1);
    }
    const LpResult r = lp_solve(c.lp);
    if (r.status == LpStatus::Unbounded ||
        (r.status == LpStatus::Optimal && r.value.sign() > 0))
      return members;
  }
  return std::nullopt;
}

bool check_solidarity(const std::vector<CompetitiveDivision>& divisions,
                      Kind kind) {
  auto all_sign = [&](int wanted) {
    for (const auto& d : divisions)
      for (const Rat& u : d.profile)
        if (u.sign() * wanted < 0) return false;
    return true;
  };
  if (kind == Kind::Positive) return all_sign(+1);
  if (kind == Kind::Negative) return all_sign(-1);
  return all_sign(+1) || all_sign(-1);
}

VerificationReport verify_division(const Problem& p,
                                   const CompetitiveDivision& d, Kind kind) {
  validate_allocation(p, d.allocation);
  const UtilityProfile derived = utility_profile(p, d.allocation);
  if (!d.profile.empty() && d.profile != derived)
    throw InputError("division profile does not match its allocation");

  VerificationReport rep;
  const Partitions part = partition(p);

  try {
    require_price_signs(p, part, d.prices);
  } catch (const PriceSignError& e) {
    rep.priceSigns = {false, e.what()};
  }

  for (size_t i = 0; i < p.num_agents() && rep.consumption.pass; ++i) {
    for (size_t a : part.aPlus) {
      if (d.allocation[i][a].sign() > 0 && p.u[i][a].sign() <= 0) {
        rep.consumption = {false, "agent " + p.agents[i] + " consumes '" +
                                      p.items[a] +
                                      "' without positive utility"};
        break;
      }
    }
  }

  if (rep.priceSigns.pass) {
    for (size_t i = 0; i < p.num_agents(); ++i) {
      const DemandParts parts =
          demand_parts(p, part, i, d.allocation[i], d.prices, d.budget);
      if (!parts.utility_max && rep.demand.pass)
        rep.demand = {false,
                      "agent " + p.agents[i] + "'s bundle is not a cheapest "
                      "utility maximizer in the budget set"};
      if (!parts.wealth_min && rep.wealthMin.pass) {
        std::ostringstream os;
        os << "agent " << p.agents[i] << " spends "
           << dot(d.prices, d.allocation[i]) << " instead of "
           << budget_value(d.budget);
        rep.wealthMin = {false, os.str()};
      }
    }
  } else {
    rep.demand = {false, "skipped: bad price signs"};
    rep.wealthMin = {false, "skipped: bad price signs"};
  }

  if (!efficiency_check(p, d.allocation))
    rep.efficiency = {false, "a feasible allocation dominates this one"};

  if (!check_no_envy(p, d.allocation)) {
    for (size_t i = 0; i < p.num_agents(); ++i)
      for (size_t j = 0; j < p.num_agents(); ++j)
        if (dot(p.u[i], d.allocation[i]) < dot(p.u[i], d.allocation[j])) {
          rep.noEnvy = {false, "agent " + p.agents[i] + " envies agent " +
                                   p.agents[j]};
          i = p.num_agents();
          break;
        }
  }

  if (!check_fair_share(p, d.allocation)) {
    const UtilityProfile fs = equal_split_profile(p);
    for (size_t i = 0; i < p.num_agents(); ++i)
      if (derived[i] < fs[i]) {
        rep.fairShare = {false, "agent " + p.agents[i] + " gets " +
                                    derived[i].str() + " below fair share " +
                                    fs[i].str()};
        break;
      }
  }

  if (!check_weak_core(p, d.allocation)) {
    for (const auto& members : all_coalitions(p.num_agents())) {
      CoalitionLp c = coalition_base(p, d.allocation, members, 1);
      const size_t dvar = c.nvars - 1;
      c.lp.objective[dvar] = Rat(1);
      c.lp.bounds.assign(c.nvars, VarBound::NonNegative);
      c.lp.bounds[dvar] = VarBound::Free;
      for (size_t j = 0; j < members.size(); ++j)
        c.lp.constraints[p.num_items() + j][dvar] = Rat(-1);
      const LpResult r = lp_solve(c.lp);
      if (r.status == LpStatus::Unbounded ||
          (r.status == LpStatus::Optimal && r.value.sign() > 0)) {
        rep.weakCore = {false,
                        "coalition " + agent_list(p, members) + " blocks"};
        break;
      }
    }
  }

  if (!check_solidarity({d}, kind))
    rep.solidarity = {false, "profile mixes signs: " + to_string(derived)};

  return rep;
}

}  // namespace manna
