#pragma once

#include <string>
#include <vector>

#include "manna/rational.hpp"

namespace manna {

/// A division problem: agents x items matrix of exact utilities over one
/// unit of each divisible item. No column may be identically zero.
struct Problem {
  std::vector<std::string> agents;
  std::vector<std::string> items;
  RatMat u;  // agents x items

  size_t num_agents() const { return agents.size(); }
  size_t num_items() const { return items.size(); }

  /// Throws InputError when dimensions disagree or a name list is empty.
  void validate() const;
};

/// File-format contract: rejects columns that are identically zero.
/// Internally such columns are tolerated and behave as neutral items;
/// parametric sweeps can create them.
void require_no_null_columns(const Problem& p);

/// Convenience constructor for tests and generated instances: names the
/// agents "1".."n" and the items "a", "b", ...
Problem make_problem(RatMat utilities);

/// Sign partitions of agents and items.
///   nPlus:  agents with at least one positive entry; nMinus: the rest.
///   aPlus:  items someone values positively ("goods");
///   aMinus: items everyone values negatively ("bads");
///   aZero:  items whose best entry is zero ("neutral").
struct Partitions {
  std::vector<size_t> nPlus, nMinus, aPlus, aMinus, aZero;

  std::vector<bool> agent_plus;  // indexed by agent
  enum class ItemKind { Good, Bad, Neutral };
  std::vector<ItemKind> item_kind;  // indexed by item

  bool is_good(size_t a) const { return item_kind[a] == ItemKind::Good; }
  bool is_bad(size_t a) const { return item_kind[a] == ItemKind::Bad; }
  bool is_neutral(size_t a) const { return item_kind[a] == ItemKind::Neutral; }
};

Partitions partition(const Problem& p);

/// Independence of Lost Bids normalization: inside every column that is a
/// good for someone, negative entries are replaced by zero. Bad and
/// neutral columns are untouched. Competitive divisions are invariant
/// under this map.
Problem normalize_ilb(const Problem& p);

/// Nonnegative agents x items matrix whose columns each sum to one.
using Allocation = RatMat;

/// Throws InputError unless z is a feasible allocation for p.
void validate_allocation(const Problem& p, const Allocation& z);

using UtilityProfile = RatVec;

/// U_i = u_i . z_i, exact. Validates feasibility first.
UtilityProfile utility_profile(const Problem& p, const Allocation& z);

/// Profile of equal split, u_i . e / n.
UtilityProfile equal_split_profile(const Problem& p);

Allocation equal_split_allocation(const Problem& p);

}  // namespace manna
