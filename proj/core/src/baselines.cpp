#include "manna/baselines.hpp"

#include "manna/errors.hpp"
#include "manna/linprog.hpp"

namespace manna {

UtilityProfile fair_share(const Problem& p) {
  p.validate();
  return equal_split_profile(p);
}

UtilityProfile max_feasible(const Problem& p) {
  p.validate();
  UtilityProfile out(p.num_agents());
  for (size_t i = 0; i < p.num_agents(); ++i)
    for (const Rat& u : p.u[i])
      if (u.sign() > 0) out[i] += u;
  return out;
}

EgalitarianResult egalitarian(const Problem& p) {
  p.validate();
  const size_t n = p.num_agents(), m = p.num_items();
  const UtilityProfile fs = fair_share(p);
  const UtilityProfile umax = max_feasible(p);
  RatVec span(n);
  for (size_t i = 0; i < n; ++i) {
    span[i] = umax[i] - fs[i];
    if (span[i].sign() <= 0)
      throw DegenerateAgent("agent '" + p.agents[i] +
                            "' has no gain above fair share");
  }

  // Stage 1: maximize the common normalized gain t.
  const size_t tvar = n * m;
  LinearProgram lp;
  lp.objective.assign(n * m + 1, Rat());
  lp.objective[tvar] = Rat(1);
  lp.bounds.assign(n * m + 1, VarBound::NonNegative);
  lp.bounds[tvar] = VarBound::Free;
  for (size_t a = 0; a < m; ++a) {
    RatVec row(n * m + 1);
    for (size_t i = 0; i < n; ++i) row[i * m + a] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat(1));
    lp.senses.push_back(Sense::Equal);
  }
  for (size_t i = 0; i < n; ++i) {
    RatVec row(n * m + 1);
    for (size_t a = 0; a < m; ++a) row[i * m + a] = p.u[i][a];
    row[tvar] = -span[i];
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(fs[i]);
    lp.senses.push_back(Sense::GreaterEq);
  }
  const LpResult stage1 = lp_solve(lp);
  const Rat tstar = stage1.value;

  // Stage 2: efficiency refinement at the achieved gain level.
  LinearProgram lp2;
  lp2.objective.assign(n * m, Rat());
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a) lp2.objective[i * m + a] = p.u[i][a];
  for (size_t a = 0; a < m; ++a) {
    RatVec row(n * m);
    for (size_t i = 0; i < n; ++i) row[i * m + a] = Rat(1);
    lp2.constraints.push_back(std::move(row));
    lp2.rhs.push_back(Rat(1));
    lp2.senses.push_back(Sense::Equal);
  }
  for (size_t i = 0; i < n; ++i) {
    RatVec row(n * m);
    for (size_t a = 0; a < m; ++a) row[i * m + a] = p.u[i][a];
    lp2.constraints.push_back(std::move(row));
    lp2.rhs.push_back(fs[i] + tstar * span[i]);
    lp2.senses.push_back(Sense::GreaterEq);
  }
  const LpResult stage2 = lp_solve(lp2);

  EgalitarianResult out;
  out.allocation.assign(n, RatVec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a)
      out.allocation[i][a] = stage2.primal[i * m + a];
  out.profile.assign(n, Rat());
  for (size_t i = 0; i < n; ++i) out.profile[i] = dot(p.u[i], out.allocation[i]);
  return out;
}

BaselineResult baselines(const Problem& p) {
  return {fair_share(p), max_feasible(p), egalitarian(p).profile};
}

}  // namespace manna
