#include "manna/classify.hpp"

#include <cstddef>

#include "manna/errors.hpp"
#include "manna/linprog.hpp"

namespace manna {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Positive: return "positive";
    case Kind::Negative: return "negative";
    case Kind::Null: return "null";
  }
  return "?";
}

namespace {

// Variable layout shared by several programs over allocations: z_ia is
// column i*m + a, optionally followed by extra variables.
size_t zvar(size_t i, size_t a, size_t m) { return i * m + a; }

}  // namespace

Classification classify(const Problem& p) {
  p.validate();
  const size_t n = p.num_agents(), m = p.num_items();
  const Partitions part = partition(p);
  const bool has_plus = !part.nPlus.empty();
  const size_t nvars = n * m + (has_plus ? 1 : 0);
  const size_t tvar = n * m;

  LinearProgram lp;
  lp.objective.assign(nvars, Rat());
  if (has_plus) lp.objective[tvar] = Rat(1);
  lp.bounds.assign(nvars, VarBound::NonNegative);
  if (has_plus) lp.bounds[tvar] = VarBound::Free;

  for (size_t a = 0; a < m; ++a) {
    RatVec row(nvars);
    for (size_t i = 0; i < n; ++i) row[zvar(i, a, m)] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat(1));
    lp.senses.push_back(Sense::Equal);
  }
  for (size_t i = 0; i < n; ++i) {
    RatVec row(nvars);
    for (size_t a = 0; a < m; ++a) row[zvar(i, a, m)] = p.u[i][a];
    if (has_plus && part.agent_plus[i]) row[tvar] = Rat(-1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat());
    lp.senses.push_back(Sense::GreaterEq);
  }

  LpResult r = lp_solve(lp);
  Classification out;
  if (r.status == LpStatus::Infeasible) {
    out.kind = Kind::Negative;
    out.lpValue = std::nullopt;
    out.dualWeights.assign(n, Rat());
    for (size_t i = 0; i < n; ++i) out.dualWeights[i] = r.dual[m + i].abs();
    return out;
  }
  // The classifier is never unbounded: utilities bound t from above.
  out.lpValue = r.value;
  if (!has_plus) {
    out.kind = Kind::Null;
  } else if (r.value.sign() > 0) {
    out.kind = Kind::Positive;
  } else if (r.value.sign() == 0) {
    out.kind = Kind::Null;
  } else {
    out.kind = Kind::Negative;
  }
  out.witness.assign(n, RatVec(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a) out.witness[i][a] = r.primal[zvar(i, a, m)];
  out.dualWeights.assign(n, Rat());
  for (size_t i = 0; i < n; ++i) out.dualWeights[i] = r.dual[m + i].abs();
  return out;
}

bool efficiency_check(const Problem& p, const Allocation& z) {
  validate_allocation(p, z);
  const size_t n = p.num_agents(), m = p.num_items();
  const size_t nvars = n * m + n;  // z' then eps
  LinearProgram lp;
  lp.objective.assign(nvars, Rat());
  for (size_t i = 0; i < n; ++i) lp.objective[n * m + i] = Rat(1);

  for (size_t a = 0; a < m; ++a) {
    RatVec row(nvars);
    for (size_t i = 0; i < n; ++i) row[zvar(i, a, m)] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat(1));
    lp.senses.push_back(Sense::Equal);
  }
  for (size_t i = 0; i < n; ++i) {
    RatVec row(nvars);
    for (size_t a = 0; a < m; ++a) row[zvar(i, a, m)] = p.u[i][a];
    row[n * m + i] = Rat(-1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(dot(p.u[i], z[i]));
    lp.senses.push_back(Sense::GreaterEq);
  }

  LpResult r = lp_solve(lp);
  return r.status == LpStatus::Optimal && r.value.is_zero();
}

Rat welfare_optimum(const Problem& p, const RatVec& weights) {
  if (weights.size() != p.num_agents())
    throw InputError("welfare weights size mismatch");
  const size_t n = p.num_agents(), m = p.num_items();
  LinearProgram lp;
  lp.objective.assign(n * m, Rat());
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a)
      lp.objective[zvar(i, a, m)] = weights[i] * p.u[i][a];
  for (size_t a = 0; a < m; ++a) {
    RatVec row(n * m);
    for (size_t i = 0; i < n; ++i) row[zvar(i, a, m)] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(Rat(1));
    lp.senses.push_back(Sense::Equal);
  }
  return lp_solve(lp).value;
}

}  // namespace manna
