#include "allocation_canon.hpp"

#include <cstddef>

#include "manna/errors.hpp"
#include "manna/linprog.hpp"
#include "manna/solve.hpp"

namespace manna::detail {
namespace {

// Shared frame: variables are z_ia over non-neutral columns only.
struct Frame {
  const Problem& p;
  std::vector<size_t> cols;          // global item indices
  std::vector<size_t> var_of;        // (i, colpos) -> variable
  size_t nvars = 0;

  Frame(const Problem& p_, const Partitions& part) : p(p_) {
    for (size_t a = 0; a < p.num_items(); ++a)
      if (!part.is_neutral(a)) cols.push_back(a);
    nvars = p.num_agents() * cols.size();
  }
  size_t var(size_t i, size_t c) const { return i * cols.size() + c; }

  LinearProgram base(const UtilityProfile& profile) const {
    LinearProgram lp;
    lp.objective.assign(nvars, Rat());
    for (size_t c = 0; c < cols.size(); ++c) {
      RatVec row(nvars);
      for (size_t i = 0; i < p.num_agents(); ++i) row[var(i, c)] = Rat(1);
      lp.constraints.push_back(std::move(row));
      lp.rhs.push_back(Rat(1));
      lp.senses.push_back(Sense::Equal);
    }
    for (size_t i = 0; i < p.num_agents(); ++i) {
      RatVec row(nvars);
      for (size_t c = 0; c < cols.size(); ++c)
        row[var(i, c)] = p.u[i][cols[c]];
      lp.constraints.push_back(std::move(row));
      lp.rhs.push_back(profile[i]);
      lp.senses.push_back(Sense::Equal);
    }
    return lp;
  }
};

void place_neutral(const Problem& p, const Partitions& part, Allocation& z) {
  for (size_t a : part.aZero) {
    for (size_t i = 0; i < p.num_agents(); ++i) {
      if (p.u[i][a].is_zero()) {
        z[i][a] = Rat(1);
        break;
      }
    }
  }
}

}  // namespace

Allocation canonical_allocation(const Problem& p, const Partitions& part,
                                const UtilityProfile& profile) {
  Frame f(p, part);
  Allocation z(p.num_agents(), RatVec(p.num_items()));
  place_neutral(p, part, z);
  if (f.cols.empty()) return z;

  LinearProgram lp = f.base(profile);
  for (size_t k = 0; k < f.nvars; ++k) {
    lp.objective.assign(f.nvars, Rat());
    lp.objective[k] = Rat(-1);  // minimize variable k
    LpResult r = lp_solve(lp);
    if (r.status != LpStatus::Optimal)
      throw InputError("profile is not implementable by any allocation");
    // Pin the minimized coordinate and continue with the next one.
    RatVec row(f.nvars);
    row[k] = Rat(1);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(r.primal[k]);
    lp.senses.push_back(Sense::Equal);
  }
  // Pin rows were appended in variable order; read the values back.
  const size_t base_rows = f.cols.size() + p.num_agents();
  for (size_t i = 0; i < p.num_agents(); ++i)
    for (size_t c = 0; c < f.cols.size(); ++c)
      z[i][f.cols[c]] = lp.rhs[base_rows + f.var(i, c)];
  return z;
}

bool allocation_ambiguous(const Problem& p, const Partitions& part,
                          const UtilityProfile& profile) {
  Frame f(p, part);
  if (f.cols.empty()) return false;
  LinearProgram lp = f.base(profile);
  for (size_t k = 0; k < f.nvars; ++k) {
    lp.objective.assign(f.nvars, Rat());
    lp.objective[k] = Rat(-1);
    LpResult lo = lp_solve(lp);
    lp.objective[k] = Rat(1);
    LpResult hi = lp_solve(lp);
    if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
      throw InputError("profile is not implementable by any allocation");
    if (-lo.value != hi.value) return true;
  }
  return false;
}

}  // namespace manna::detail

namespace manna {

bool allocation_ambiguous(const Problem& p, const UtilityProfile& profile) {
  return detail::allocation_ambiguous(p, partition(p), profile);
}

}  // namespace manna
