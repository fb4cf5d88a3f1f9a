#include "manna/linprog.hpp"

#include <algorithm>
#include <cstddef>

#include "manna/errors.hpp"

namespace manna {
namespace {

// Internal minimization tableau. Original rows are normalized to a
// nonnegative right hand side; free variables are split x = x+ - x-.
struct Tableau {
  size_t rows = 0;
  size_t cols = 0;           // structural + slack/surplus + artificial
  std::vector<RatVec> t;     // rows x (cols + 1), last column is rhs
  RatVec drow;               // reduced costs, cols + 1 (objective in last)
  std::vector<int> basis;    // row -> column
  std::vector<bool> artificial;  // per column
  std::vector<bool> row_active;

  Rat& rhs(size_t i) { return t[i][cols]; }

  void pivot(size_t pr, size_t pc) {
    RatVec& prow = t[pr];
    const Rat inv = prow[pc].reciprocal();
    for (Rat& x : prow) x *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      Rat f = t[i][pc];
      if (f.is_zero()) continue;
      RatVec& r = t[i];
      for (size_t j = 0; j <= cols; ++j) r[j] -= f * prow[j];
    }
    Rat f = drow[pc];
    if (!f.is_zero()) {
      for (size_t j = 0; j <= cols; ++j) drow[j] -= f * prow[j];
    }
    basis[pr] = static_cast<int>(pc);
  }

  // Bland: entering = lowest-index improving column, leaving = min ratio
  // with lowest basis index on ties. `allow` filters candidate columns.
  // Returns false when unbounded.
  template <typename Allow>
  bool simplex(const Allow& allow) {
    for (;;) {
      size_t enter = cols;
      for (size_t j = 0; j < cols; ++j) {
        if (allow(j) && drow[j].sign() < 0) { enter = j; break; }
      }
      if (enter == cols) return true;  // optimal
      size_t leave = rows;
      Rat best;
      for (size_t i = 0; i < rows; ++i) {
        if (!row_active[i] || t[i][enter].sign() <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == rows) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void reset_costs(const RatVec& costs) {
    drow.assign(cols + 1, Rat());
    for (size_t j = 0; j < cols; ++j) drow[j] = costs[j];
    for (size_t i = 0; i < rows; ++i) {
      if (!row_active[i]) continue;
      const Rat& cb = costs[basis[i]];
      if (cb.is_zero()) continue;
      for (size_t j = 0; j <= cols; ++j) drow[j] -= cb * t[i][j];
    }
  }
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp) {
  const size_t n = lp.num_vars();
  const size_t m = lp.num_rows();
  if (lp.constraints.size() != m || lp.senses.size() != m)
    throw InputError("lp_solve: row count mismatch");
  for (const RatVec& row : lp.constraints)
    if (row.size() != n) throw InputError("lp_solve: row width mismatch");
  if (!lp.bounds.empty() && lp.bounds.size() != n)
    throw InputError("lp_solve: bounds size mismatch");

  auto bound = [&](size_t j) {
    return lp.bounds.empty() ? VarBound::NonNegative : lp.bounds[j];
  };

  // Column layout: structural columns first (free variables get a paired
  // negative column), then one slack/surplus + artificial block per row.
  std::vector<size_t> pos_col(n), neg_col(n, SIZE_MAX);
  size_t cols = 0;
  for (size_t j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (bound(j) == VarBound::Free) neg_col[j] = cols++;
  }

  std::vector<int> flip(m, 1);
  std::vector<Sense> sense(m);
  for (size_t i = 0; i < m; ++i) {
    sense[i] = lp.senses[i];
    if (lp.rhs[i].sign() < 0) {
      flip[i] = -1;
      if (sense[i] == Sense::LessEq) sense[i] = Sense::GreaterEq;
      else if (sense[i] == Sense::GreaterEq) sense[i] = Sense::LessEq;
    }
  }

  std::vector<size_t> marker(m);  // slack or artificial column of each row
  std::vector<size_t> slack_col(m, SIZE_MAX), art_col(m, SIZE_MAX);
  for (size_t i = 0; i < m; ++i) {
    if (sense[i] == Sense::LessEq) {
      slack_col[i] = cols++;
      marker[i] = slack_col[i];
    } else if (sense[i] == Sense::GreaterEq) {
      slack_col[i] = cols++;  // surplus, coefficient -1
      art_col[i] = cols++;
      marker[i] = art_col[i];
    } else {
      art_col[i] = cols++;
      marker[i] = art_col[i];
    }
  }

  Tableau tab;
  tab.rows = m;
  tab.cols = cols;
  tab.t.assign(m, RatVec(cols + 1));
  tab.basis.assign(m, -1);
  tab.artificial.assign(cols, false);
  tab.row_active.assign(m, true);

  for (size_t i = 0; i < m; ++i) {
    RatVec& row = tab.t[i];
    for (size_t j = 0; j < n; ++j) {
      Rat a = lp.constraints[i][j];
      if (flip[i] < 0) a = -a;
      row[pos_col[j]] = a;
      if (neg_col[j] != SIZE_MAX) row[neg_col[j]] = -a;
    }
    row[cols] = flip[i] < 0 ? -lp.rhs[i] : lp.rhs[i];
    if (sense[i] == Sense::LessEq) {
      row[slack_col[i]] = Rat(1);
      tab.basis[i] = static_cast<int>(slack_col[i]);
    } else if (sense[i] == Sense::GreaterEq) {
      row[slack_col[i]] = Rat(-1);
      row[art_col[i]] = Rat(1);
      tab.basis[i] = static_cast<int>(art_col[i]);
      tab.artificial[art_col[i]] = true;
    } else {
      row[art_col[i]] = Rat(1);
      tab.basis[i] = static_cast<int>(art_col[i]);
      tab.artificial[art_col[i]] = true;
    }
  }

  // Internal costs (minimization): phase 1 charges artificials only,
  // phase 2 minimizes the negated user objective.
  RatVec phase1(cols), phase2(cols);
  for (size_t j = 0; j < cols; ++j)
    if (tab.artificial[j]) phase1[j] = Rat(1);
  for (size_t j = 0; j < n; ++j) {
    phase2[pos_col[j]] = -lp.objective[j];
    if (neg_col[j] != SIZE_MAX) phase2[neg_col[j]] = lp.objective[j];
  }

  bool need_phase1 = false;
  for (size_t i = 0; i < m; ++i)
    if (art_col[i] != SIZE_MAX) need_phase1 = true;

  LpResult res;
  if (need_phase1) {
    tab.reset_costs(phase1);
    tab.simplex([](size_t) { return true; });  // bounded below by 0
    // drow objective cell holds -(current phase-1 cost)
    if (tab.drow[cols].sign() != 0) {
      res.status = LpStatus::Infeasible;
      // Farkas certificate from the phase-1 duals.
      res.dual.assign(m, Rat());
      for (size_t i = 0; i < m; ++i) {
        // reduced cost of the marker column: d = c - y_i  =>  y_i = c - d
        Rat c = tab.artificial[marker[i]] ? Rat(1) : Rat();
        Rat y = c - tab.drow[marker[i]];
        y *= Rat(flip[i]);
        // Internal duals certify y·b > 0 with yᵀA <= 0; user convention
        // wants y·rhs < 0 with yᵀA >= 0, so negate.
        res.dual[i] = -y;
      }
      return res;
    }
    // Drive basic artificials out; a fully zero row is redundant.
    for (size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < 0 || !tab.artificial[tab.basis[i]]) continue;
      size_t piv = cols;
      for (size_t j = 0; j < cols; ++j) {
        if (!tab.artificial[j] && tab.t[i][j].sign() != 0) { piv = j; break; }
      }
      if (piv < cols) {
        tab.pivot(i, piv);
      } else {
        tab.row_active[i] = false;
      }
    }
  }

  tab.reset_costs(phase2);
  bool bounded =
      tab.simplex([&](size_t j) { return !tab.artificial[j]; });
  if (!bounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }

  res.status = LpStatus::Optimal;
  res.primal.assign(n, Rat());
  RatVec colval(cols);
  for (size_t i = 0; i < m; ++i) {
    if (tab.row_active[i] && tab.basis[i] >= 0)
      colval[tab.basis[i]] = tab.rhs(i);
  }
  for (size_t j = 0; j < n; ++j) {
    res.primal[j] = colval[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) res.primal[j] -= colval[neg_col[j]];
  }
  res.value = dot(lp.objective, res.primal);

  // Duals from the reduced costs of each row's marker column
  // (phase-2 marker cost is zero): d = -y_i, flipped back and negated
  // into the maximization convention.
  res.dual.assign(m, Rat());
  for (size_t i = 0; i < m; ++i) {
    if (!tab.row_active[i]) continue;
    Rat y = -tab.drow[marker[i]];
    y *= Rat(flip[i]);
    res.dual[i] = -y;
  }
  return res;
}

}  // namespace manna
