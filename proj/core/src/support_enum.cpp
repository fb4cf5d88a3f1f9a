#include "support_enum.hpp"

#include <cstdint>
#include <map>
#include <utility>

#include "manna/errors.hpp"

namespace manna::detail {
namespace {

constexpr size_t kMaxScope = 8;
constexpr size_t kMaxItems = 10;
constexpr size_t kNone = SIZE_MAX;

struct Enumerator {
  const Problem& p;
  const Partitions& part;
  bool neg;

  std::vector<size_t> scope;        // global agent indices
  std::vector<size_t> enum_items;   // global item indices (goods + bads)
  std::vector<bool> enum_is_good;
  std::vector<uint32_t> allowed;    // per enumerated item
  std::vector<int> required_after;  // required-type items strictly after k

  std::vector<int> parent;          // union-find over scope positions
  std::vector<bool> satisfied;      // required edge seen for scope agent
  int lacking = 0;
  std::vector<uint32_t> chosen;

  std::vector<size_t> neutral_owner;  // per item, kNone unless neutral

  std::map<RatVec, CriticalCandidate, bool (*)(const RatVec&, const RatVec&)>
      found{lex_less};

  Enumerator(const Problem& p_, const Partitions& part_, bool neg_)
      : p(p_), part(part_), neg(neg_) {
    if (neg) {
      for (size_t i = 0; i < p.num_agents(); ++i) scope.push_back(i);
    } else {
      scope = part.nPlus;
    }
    for (size_t a = 0; a < p.num_items(); ++a)
      if (!part.is_neutral(a)) {
        enum_items.push_back(a);
        enum_is_good.push_back(part.is_good(a));
      }
    if (scope.size() > kMaxScope || enum_items.size() > kMaxItems)
      throw InputError("instance too large for exact support enumeration");

    for (size_t k = 0; k < enum_items.size(); ++k) {
      uint32_t mask = 0;
      const size_t a = enum_items[k];
      for (size_t s = 0; s < scope.size(); ++s) {
        if (enum_is_good[k]) {
          if (p.u[scope[s]][a].sign() > 0) mask |= 1u << s;
        } else {
          mask |= 1u << s;  // anyone may eat a bad
        }
      }
      allowed.push_back(mask);
    }
    required_after.assign(enum_items.size() + 1, 0);
    for (size_t k = enum_items.size(); k-- > 0;) {
      const bool required_type = neg ? !enum_is_good[k] : enum_is_good[k];
      required_after[k] = required_after[k + 1] + (required_type ? 1 : 0);
    }
    parent.assign(scope.size(), 0);
    for (size_t s = 0; s < scope.size(); ++s) parent[s] = static_cast<int>(s);
    satisfied.assign(scope.size(), false);
    lacking = static_cast<int>(scope.size());
    chosen.assign(enum_items.size(), 0);

    // Neutral items go whole to the lowest-index agent valuing them zero.
    neutral_owner.assign(p.num_items(), kNone);
    for (size_t a : part.aZero) {
      for (size_t i = 0; i < p.num_agents(); ++i)
        if (p.u[i][a].is_zero()) { neutral_owner[a] = i; break; }
    }
  }

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }

  void recurse(size_t k) {
    if (k == enum_items.size()) {
      if (lacking == 0) leaf();
      return;
    }
    const uint32_t all = allowed[k];
    const bool required_type = neg ? !enum_is_good[k] : enum_is_good[k];
    for (uint32_t mask = 1; mask <= all; ++mask) {
      if ((mask & all) != mask) continue;
      int roots[kMaxScope];
      int cnt = 0;
      bool acyclic = true;
      for (size_t s = 0; s < scope.size() && acyclic; ++s) {
        if (!(mask >> s & 1)) continue;
        const int r = find(static_cast<int>(s));
        for (int j = 0; j < cnt; ++j)
          if (roots[j] == r) { acyclic = false; break; }
        if (acyclic) roots[cnt++] = r;
      }
      if (!acyclic) continue;

      for (int j = 1; j < cnt; ++j) parent[roots[j]] = roots[0];
      uint32_t cleared = 0;
      if (required_type) {
        for (size_t s = 0; s < scope.size(); ++s) {
          if ((mask >> s & 1) && !satisfied[s]) {
            satisfied[s] = true;
            cleared |= 1u << s;
            --lacking;
          }
        }
      }
      chosen[k] = mask;

      if (lacking == 0 || required_after[k + 1] > 0) recurse(k + 1);

      chosen[k] = 0;
      for (size_t s = 0; s < scope.size(); ++s) {
        if (cleared >> s & 1) {
          satisfied[s] = false;
          ++lacking;
        }
      }
      for (int j = 1; j < cnt; ++j) parent[roots[j]] = roots[j];
    }
  }

  void leaf();
};

void Enumerator::leaf() {
  const size_t ns = scope.size();
  const size_t mk = enum_items.size();

  // Value propagation over the forest: v agents, q items, with
  // q_a = u_ia / v_i along every edge. One connected pass per component,
  // then the component scale from the budget sum.
  std::vector<Rat> v(ns), q(mk);
  std::vector<int> comp_agent(ns, -1), comp_item(mk, -1);
  std::vector<Rat> comp_sum;      // sum of item values per component
  std::vector<int> comp_agents;   // agent count per component

  // adjacency: per scope agent the incident enumerated items
  std::vector<std::vector<size_t>> agent_items(ns);
  for (size_t k = 0; k < mk; ++k)
    for (size_t s = 0; s < ns; ++s)
      if (chosen[k] >> s & 1) agent_items[s].push_back(k);

  std::vector<size_t> stack;
  for (size_t s0 = 0; s0 < ns; ++s0) {
    if (comp_agent[s0] != -1) continue;
    const int c = static_cast<int>(comp_sum.size());
    comp_sum.push_back(Rat());
    comp_agents.push_back(0);
    v[s0] = Rat(1);
    comp_agent[s0] = c;
    stack.assign(1, s0);
    while (!stack.empty()) {
      const size_t s = stack.back();
      stack.pop_back();
      ++comp_agents[c];
      for (size_t k : agent_items[s]) {
        if (comp_item[k] != -1) continue;
        comp_item[k] = c;
        q[k] = p.u[scope[s]][enum_items[k]] / v[s];
        comp_sum[c] += q[k];
        for (size_t s2 = 0; s2 < ns; ++s2) {
          if ((chosen[k] >> s2 & 1) && comp_agent[s2] == -1) {
            comp_agent[s2] = c;
            v[s2] = p.u[scope[s2]][enum_items[k]] / q[k];
            stack.push_back(s2);
          }
        }
      }
    }
  }

  // Scale per component: sum of prices equals (budget) x (agent count).
  std::vector<Rat> tau(comp_sum.size());
  for (size_t c = 0; c < comp_sum.size(); ++c) {
    const Rat target = neg ? Rat(-comp_agents[c]) : Rat(comp_agents[c]);
    if (comp_sum[c].is_zero()) return;
    tau[c] = comp_sum[c] / target;
    if (tau[c].sign() <= 0) return;
  }

  // Absolute magnitudes: T_i = tau v_i (utility magnitude), p_a = q_a/tau.
  std::vector<Rat> T(ns);
  RatVec prices(p.num_items());
  for (size_t s = 0; s < ns; ++s) T[s] = tau[comp_agent[s]] * v[s];
  for (size_t k = 0; k < mk; ++k)
    prices[enum_items[k]] = q[k] / tau[comp_item[k]];

  // Demand bounds for every scope agent / enumerated item pair:
  // u_ia <= T_i p_a, with equality on forest edges by construction.
  for (size_t s = 0; s < ns; ++s) {
    for (size_t k = 0; k < mk; ++k) {
      if (p.u[scope[s]][enum_items[k]] > T[s] * prices[enum_items[k]]) return;
    }
  }

  // Allocation from the tree system: column sums one, p.z_i = budget.
  const Rat budget = neg ? Rat(-1) : Rat(1);
  std::vector<Rat> remaining_item(mk, Rat(1));
  std::vector<Rat> remaining_budget(ns, budget);
  std::vector<int> deg_agent(ns, 0), deg_item(mk, 0);
  struct Edge { size_t s, k; bool done = false; };
  std::vector<Edge> edges;
  std::vector<std::vector<size_t>> edges_at_agent(ns), edges_at_item(mk);
  for (size_t k = 0; k < mk; ++k) {
    for (size_t s = 0; s < ns; ++s) {
      if (chosen[k] >> s & 1) {
        edges_at_agent[s].push_back(edges.size());
        edges_at_item[k].push_back(edges.size());
        edges.push_back({s, k, false});
        ++deg_agent[s];
        ++deg_item[k];
      }
    }
  }
  RatVec zval(edges.size());
  std::vector<size_t> leaves;
  for (size_t s = 0; s < ns; ++s)
    if (deg_agent[s] == 1) leaves.push_back(s);
  for (size_t k = 0; k < mk; ++k)
    if (deg_item[k] == 1) leaves.push_back(ns + k);
  size_t processed = 0;
  while (!leaves.empty()) {
    const size_t node = leaves.back();
    leaves.pop_back();
    if (node < ns) {
      const size_t s = node;
      if (deg_agent[s] != 1) continue;
      size_t e = kNone;
      for (size_t ei : edges_at_agent[s])
        if (!edges[ei].done) { e = ei; break; }
      if (e == kNone) continue;
      const size_t k = edges[e].k;
      zval[e] = remaining_budget[s] / prices[enum_items[k]];
      remaining_budget[s] = Rat();
      remaining_item[k] -= zval[e];
      edges[e].done = true;
      ++processed;
      deg_agent[s] = 0;
      if (--deg_item[k] == 1) leaves.push_back(ns + k);
    } else {
      const size_t k = node - ns;
      if (deg_item[k] != 1) continue;
      size_t e = kNone;
      for (size_t ei : edges_at_item[k])
        if (!edges[ei].done) { e = ei; break; }
      if (e == kNone) continue;
      const size_t s = edges[e].s;
      zval[e] = remaining_item[k];
      remaining_item[k] = Rat();
      remaining_budget[s] -= prices[enum_items[k]] * zval[e];
      edges[e].done = true;
      ++processed;
      deg_item[k] = 0;
      if (--deg_agent[s] == 1) leaves.push_back(s);
    }
  }
  if (processed != edges.size()) return;  // not a forest; unreachable
  for (size_t s = 0; s < ns; ++s)
    if (!remaining_budget[s].is_zero()) return;
  for (size_t k = 0; k < mk; ++k)
    if (!remaining_item[k].is_zero()) return;
  for (const Rat& zv : zval)
    if (zv.sign() < 0) return;

  CriticalCandidate cand;
  cand.prices = prices;
  cand.profile.assign(p.num_agents(), Rat());
  for (size_t s = 0; s < ns; ++s)
    cand.profile[scope[s]] = neg ? -T[s] : T[s];
  cand.allocation.assign(p.num_agents(), RatVec(p.num_items()));
  for (size_t e = 0; e < edges.size(); ++e)
    cand.allocation[scope[edges[e].s]][enum_items[edges[e].k]] = zval[e];
  for (size_t a : part.aZero)
    cand.allocation[neutral_owner[a]][a] = Rat(1);

  auto [it, inserted] = found.try_emplace(cand.profile, cand);
  if (!inserted && lex_less(cand.allocation, it->second.allocation))
    it->second = cand;
}

}  // namespace

std::vector<CriticalCandidate> enumerate_critical_candidates(
    const Problem& p, const Partitions& part, bool negative_mode) {
  Enumerator e(p, part, negative_mode);
  if (!e.enum_items.empty() && !e.scope.empty()) e.recurse(0);
  std::vector<CriticalCandidate> out;
  out.reserve(e.found.size());
  for (auto& [profile, cand] : e.found) out.push_back(std::move(cand));
  return out;
}

}  // namespace manna::detail
