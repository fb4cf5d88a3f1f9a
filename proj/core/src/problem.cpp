#include "manna/problem.hpp"

#include <string>

#include "manna/errors.hpp"

namespace manna {

void Problem::validate() const {
  if (agents.empty()) throw InputError("problem has no agents");
  if (items.empty()) throw InputError("problem has no items");
  if (u.size() != agents.size())
    throw InputError("utility matrix row count does not match agent count");
  for (const RatVec& row : u) {
    if (row.size() != items.size())
      throw InputError("utility matrix column count does not match item count");
  }
}

void require_no_null_columns(const Problem& p) {
  for (size_t a = 0; a < p.items.size(); ++a) {
    bool nonzero = false;
    for (size_t i = 0; i < p.agents.size(); ++i)
      if (!p.u[i][a].is_zero()) { nonzero = true; break; }
    if (!nonzero)
      throw InputError("item '" + p.items[a] + "' has a null utility column");
  }
}

Problem make_problem(RatMat utilities) {
  Problem p;
  p.u = std::move(utilities);
  const size_t n = p.u.size();
  const size_t m = n ? p.u[0].size() : 0;
  for (size_t i = 0; i < n; ++i) p.agents.push_back(std::to_string(i + 1));
  for (size_t a = 0; a < m; ++a) {
    std::string name;
    size_t k = a;
    do {
      name.insert(name.begin(), static_cast<char>('a' + k % 26));
      k = k / 26;
    } while (k-- > 0);
    p.items.push_back(name);
  }
  p.validate();
  return p;
}

Partitions partition(const Problem& p) {
  const size_t n = p.num_agents(), m = p.num_items();
  Partitions out;
  out.agent_plus.assign(n, false);
  out.item_kind.assign(m, Partitions::ItemKind::Neutral);
  for (size_t i = 0; i < n; ++i) {
    for (size_t a = 0; a < m; ++a)
      if (p.u[i][a].sign() > 0) { out.agent_plus[i] = true; break; }
    (out.agent_plus[i] ? out.nPlus : out.nMinus).push_back(i);
  }
  for (size_t a = 0; a < m; ++a) {
    bool any_pos = false, all_neg = true;
    for (size_t i = 0; i < n; ++i) {
      const int s = p.u[i][a].sign();
      if (s > 0) any_pos = true;
      if (s >= 0) all_neg = false;
    }
    if (any_pos) {
      out.item_kind[a] = Partitions::ItemKind::Good;
      out.aPlus.push_back(a);
    } else if (all_neg) {
      out.item_kind[a] = Partitions::ItemKind::Bad;
      out.aMinus.push_back(a);
    } else {
      out.aZero.push_back(a);
    }
  }
  return out;
}

Problem normalize_ilb(const Problem& p) {
  Problem q = p;
  const Partitions part = partition(p);
  for (size_t a : part.aPlus)
    for (size_t i = 0; i < p.num_agents(); ++i)
      if (q.u[i][a].sign() < 0) q.u[i][a] = Rat();
  return q;
}

void validate_allocation(const Problem& p, const Allocation& z) {
  if (z.size() != p.num_agents())
    throw InputError("allocation row count does not match agent count");
  for (const RatVec& row : z) {
    if (row.size() != p.num_items())
      throw InputError("allocation column count does not match item count");
    for (const Rat& x : row)
      if (x.sign() < 0) throw InputError("allocation has a negative entry");
  }
  for (size_t a = 0; a < p.num_items(); ++a) {
    Rat colsum;
    for (size_t i = 0; i < p.num_agents(); ++i) colsum += z[i][a];
    if (colsum != Rat(1))
      throw InputError("allocation column '" + p.items[a] +
                       "' does not sum to one");
  }
}

UtilityProfile utility_profile(const Problem& p, const Allocation& z) {
  validate_allocation(p, z);
  UtilityProfile out(p.num_agents());
  for (size_t i = 0; i < p.num_agents(); ++i) out[i] = dot(p.u[i], z[i]);
  return out;
}

UtilityProfile equal_split_profile(const Problem& p) {
  UtilityProfile out(p.num_agents());
  const Rat share(1, static_cast<long long>(p.num_agents()));
  for (size_t i = 0; i < p.num_agents(); ++i) out[i] = sum(p.u[i]) * share;
  return out;
}

Allocation equal_split_allocation(const Problem& p) {
  const Rat share(1, static_cast<long long>(p.num_agents()));
  return Allocation(p.num_agents(), RatVec(p.num_items(), share));
}

}  // namespace manna
