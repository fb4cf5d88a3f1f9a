#include "manna/solve_null.hpp"

#include <stdexcept>

#include "allocation_canon.hpp"
#include "manna/classify.hpp"
#include "manna/errors.hpp"
#include "manna/linprog.hpp"

namespace manna {
namespace {

// Strictly positive weights on the dual-optimal face of the classifier:
// max d  s.t.  sum_{nPlus} lambda = 1, mu_a >= lambda_i u_ia for all i,a,
// sum_a mu_a = 0, lambda_i >= d on nPlus, lambda >= 0.
RatVec reoptimized_weights(const Problem& p, const Partitions& part) {
  const size_t n = p.num_agents(), m = p.num_items();
  const size_t lam0 = 0, mu0 = n, dvar = n + m;
  LinearProgram lp;
  lp.objective.assign(n + m + 1, Rat());
  lp.objective[dvar] = Rat(1);
  lp.bounds.assign(n + m + 1, VarBound::NonNegative);
  for (size_t a = 0; a < m; ++a) lp.bounds[mu0 + a] = VarBound::Free;
  lp.bounds[dvar] = VarBound::Free;

  RatVec norm_row(n + m + 1);
  for (size_t i : part.nPlus) norm_row[lam0 + i] = Rat(1);
  lp.constraints.push_back(norm_row);
  lp.rhs.push_back(Rat(1));
  lp.senses.push_back(Sense::Equal);

  for (size_t i = 0; i < n; ++i) {
    for (size_t a = 0; a < m; ++a) {
      RatVec row(n + m + 1);
      row[mu0 + a] = Rat(1);
      row[lam0 + i] = -p.u[i][a];
      lp.constraints.push_back(std::move(row));
      lp.rhs.push_back(Rat());
      lp.senses.push_back(Sense::GreaterEq);
    }
  }
  RatVec opt_row(n + m + 1);
  for (size_t a = 0; a < m; ++a) opt_row[mu0 + a] = Rat(1);
  lp.constraints.push_back(opt_row);
  lp.rhs.push_back(Rat());
  lp.senses.push_back(Sense::Equal);

  for (size_t i : part.nPlus) {
    RatVec row(n + m + 1);
    row[lam0 + i] = Rat(1);
    row[dvar] = Rat(-1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat());
    lp.senses.push_back(Sense::GreaterEq);
  }

  LpResult r = lp_solve(lp);
  if (r.status != LpStatus::Optimal || r.value.sign() <= 0)
    throw std::logic_error("no strictly positive separating weights found");
  RatVec lambda(n);
  for (size_t i = 0; i < n; ++i) lambda[i] = r.primal[lam0 + i];
  return lambda;
}

SeparatingWeights weights_impl(const Problem& p, const Partitions& part,
                               const Classification& cls) {
  RatVec lambda = cls.dualWeights;
  bool positive = true;
  for (size_t i : part.nPlus)
    if (lambda[i].sign() <= 0) { positive = false; break; }
  if (!positive && !part.nPlus.empty())
    lambda = reoptimized_weights(p, part);

  SeparatingWeights w;
  w.lambdaFull = lambda;
  for (size_t i : part.nPlus) w.lambdaNPlus.push_back(lambda[i]);
  return w;
}

}  // namespace

SeparatingWeights separating_weights(const Problem& p) {
  p.validate();
  const Classification cls = classify(p);
  if (cls.kind != Kind::Null) throw NotNull();
  return weights_impl(p, partition(p), cls);
}

CompetitiveDivision solve_null(const Problem& p) {
  p.validate();
  const Classification cls = classify(p);
  if (cls.kind != Kind::Null) throw NotNull();
  const Partitions part = partition(p);
  const SeparatingWeights w = weights_impl(p, part, cls);

  CompetitiveDivision d;
  d.budget = Budget::Zero;
  d.profile.assign(p.num_agents(), Rat());
  d.prices.assign(p.num_items(), Rat());
  for (size_t a : part.aPlus) {
    bool first = true;
    for (size_t i : part.nPlus) {
      const Rat r = w.lambdaFull[i] * p.u[i][a];
      if (first || r > d.prices[a]) d.prices[a] = r;
      first = false;
    }
  }
  for (size_t b : part.aMinus) {
    bool first = true;
    for (size_t i : part.nPlus) {
      const Rat r = w.lambdaFull[i] * p.u[i][b];
      if (first || r > d.prices[b]) d.prices[b] = r;  // -min lambda|u|
      first = false;
    }
  }
  d.allocation = detail::canonical_allocation(p, part, d.profile);
  return d;
}

}  // namespace manna
