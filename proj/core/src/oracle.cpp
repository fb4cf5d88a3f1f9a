#include "manna/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "manna/classify.hpp"
#include "manna/errors.hpp"

namespace manna {
namespace {

double welfare_closed_form(const std::vector<std::vector<double>>& u,
                           const std::vector<double>& w) {
  const size_t n = u.size(), m = u[0].size();
  double total = 0;
  for (size_t a = 0; a < m; ++a) {
    double best = w[0] * u[0][a];
    for (size_t i = 1; i < n; ++i) best = std::max(best, w[i] * u[i][a]);
    total += best;
  }
  return total;
}

// Feasibility gap of a profile c: by duality,
//   max_z min_i (u_i.z_i - c_i)  =  min_{mu in simplex} W(mu) - mu.c,
// a convex piecewise-linear program whose kinks (the welfare argmax
// ties) do not depend on c. All arrangement vertices are enumerated
// once, so each evaluation is a plain minimum over dot products. No
// floating-point pivoting is involved anywhere.
struct ViolationOracle {
  size_t n = 0;
  std::vector<std::vector<double>> verts;
  std::vector<double> wval;

  double eval(const std::vector<double>& c) const {
    double best = wval[0];
    for (size_t i = 0; i < n; ++i) best -= verts[0][i] * c[i];
    for (size_t k = 1; k < verts.size(); ++k) {
      double g = wval[k];
      for (size_t i = 0; i < n; ++i) g -= verts[k][i] * c[i];
      best = std::min(best, g);
    }
    return best;
  }
};

// Solves the k x k system rows.mu = rhs by Gaussian elimination.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& out) {
  const size_t k = b.size();
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < k; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < 1e-12) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (size_t c2 = col; c2 < k; ++c2) a[r][c2] -= f * a[col][c2];
      b[r] -= f * b[col];
    }
  }
  out.assign(k, 0.0);
  for (size_t r = 0; r < k; ++r) out[r] = b[r] / a[r][r];
  return true;
}

ViolationOracle build_violation_oracle(
    const std::vector<std::vector<double>>& u) {
  const size_t n = u.size(), m = u[0].size();
  ViolationOracle vo;
  vo.n = n;

  // Homogeneous constraints whose intersections with the simplex carry
  // the minimum: boundaries mu_i = 0 and welfare ties
  // mu_i u_ia = mu_j u_ja for same-sign entries.
  std::vector<std::vector<double>> cons;
  for (size_t i = 0; i < n; ++i) {
    std::vector<double> row(n, 0.0);
    row[i] = 1.0;
    cons.push_back(std::move(row));
  }
  for (size_t a = 0; a < m; ++a) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (u[i][a] == 0 || u[j][a] == 0 || (u[i][a] > 0) != (u[j][a] > 0))
          continue;
        std::vector<double> row(n, 0.0);
        row[i] = u[i][a];
        row[j] = -u[j][a];
        cons.push_back(std::move(row));
      }
    }
  }

  auto push_vertex = [&](std::vector<double> mu) {
    double s = 0;
    for (double& x : mu) {
      if (x < 0) {
        if (x < -1e-9) return;  // outside the simplex
        x = 0;
      }
      s += x;
    }
    if (s <= 0) return;
    for (double& x : mu) x /= s;
    vo.verts.push_back(mu);
  };

  // Choose n-1 constraints plus the normalization sum(mu) = 1.
  std::vector<size_t> pick(n >= 1 ? n - 1 : 0);
  std::function<void(size_t, size_t)> choose = [&](size_t from, size_t left) {
    if (left == 0) {
      std::vector<std::vector<double>> rows;
      rows.push_back(std::vector<double>(n, 1.0));
      std::vector<double> rhs{1.0};
      for (size_t t = 0; t + 1 < n; ++t) {
        rows.push_back(cons[pick[t]]);
        rhs.push_back(0.0);
      }
      std::vector<double> mu;
      if (solve_square(rows, rhs, mu)) push_vertex(std::move(mu));
      return;
    }
    for (size_t c = from; c + left <= cons.size(); ++c) {
      pick[pick.size() - left] = c;
      choose(c + 1, left - 1);
    }
  };
  choose(0, n - 1);
  if (n == 1) push_vertex({1.0});

  for (const auto& v : vo.verts) vo.wval.push_back(welfare_closed_form(u, v));
  return vo;
}

// Enumerates strictly positive integer weight splits k_1+..+k_n = R.
void grid_weights(int n, int resolution, std::vector<int>& current,
                  std::vector<std::vector<double>>& out) {
  const int depth = static_cast<int>(current.size());
  int used = 0;
  for (int k : current) used += k;
  if (depth == n - 1) {
    const int last = resolution - used;
    if (last < 1) return;
    std::vector<double> w;
    for (int k : current) w.push_back(double(k) / resolution);
    w.push_back(double(last) / resolution);
    out.push_back(std::move(w));
    return;
  }
  for (int k = 1; k + (n - 1 - depth) + used <= resolution; ++k) {
    current.push_back(k);
    grid_weights(n, resolution, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<double>> grid_critical_points(const Problem& p,
                                                      const GridSpec& spec) {
  p.validate();
  if (spec.resolution < 2) throw InputError("grid resolution must be >= 2");
  if (spec.tolerance.sign() <= 0) throw InputError("tolerance must be > 0");
  if (p.num_agents() > 4)
    throw InputError("weight grid supports at most four agents");
  if (classify(p).kind != Kind::Negative) throw NotNegative();

  const size_t n = p.num_agents(), m = p.num_items();
  const double tol = spec.tolerance.to_double();
  std::vector<std::vector<double>> u(n, std::vector<double>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t a = 0; a < m; ++a) u[i][a] = p.u[i][a].to_double();

  const ViolationOracle vo = build_violation_oracle(u);

  std::vector<std::vector<double>> grid;
  std::vector<int> scratch;
  grid_weights(static_cast<int>(n), spec.resolution, scratch, grid);

  // Violation of the equal-share candidate at weights w: zero exactly at
  // critical weights, strictly negative elsewhere, with a conical peak.
  constexpr double kDead = -1e100;
  std::vector<double> cand_buf(n);
  auto violation = [&](const std::vector<double>& w) -> double {
    for (double x : w)
      if (x <= 1e-9) return kDead;
    const double W = welfare_closed_form(u, w);
    if (W >= -1e-12) return kDead;
    for (size_t i = 0; i < n; ++i) cand_buf[i] = W / (double(n) * w[i]);
    return vo.eval(cand_buf);
  };

  std::vector<double> score(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) score[g] = violation(grid[g]);

  // Grid neighbours along every e_i - e_j direction.
  std::map<std::vector<int>, size_t> index;
  std::vector<std::vector<int>> keys(grid.size(), std::vector<int>(n));
  for (size_t g = 0; g < grid.size(); ++g) {
    for (size_t i = 0; i < n; ++i)
      keys[g][i] =
          static_cast<int>(std::lround(grid[g][i] * spec.resolution));
    index[keys[g]] = g;
  }
  auto is_local_max = [&](size_t g) {
    if (score[g] <= kDead / 2) return false;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::vector<int> k = keys[g];
        ++k[i];
        --k[j];
        if (k[j] < 1) continue;
        auto it = index.find(k);
        if (it != index.end() && score[it->second] > score[g]) return false;
      }
    }
    return true;
  };

  // Poll directions: the elementary simplex moves e_i - e_j plus, for
  // every item tied between two agents, the tangent of the tie manifold
  // {w_i u_ia = w_j u_ja}. The landscape's ridges run along exactly
  // those tangents, and elementary polls stall on them.
  std::vector<std::vector<double>> dirs;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<double> d(n, 0.0);
      d[i] = 1.0;
      d[j] = -1.0;
      dirs.push_back(std::move(d));
    }
  for (size_t a = 0; a < m; ++a) {
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) {
        if (u[i][a] == 0 || u[j][a] == 0 || (u[i][a] > 0) != (u[j][a] > 0))
          continue;
        for (size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          std::vector<double> d(n, 0.0);
          d[i] = u[j][a];
          d[j] = u[i][a];
          d[k] = -(u[i][a] + u[j][a]);
          double norm = 0;
          for (double x : d) norm += x * x;
          norm = std::sqrt(norm);
          for (double& x : d) x /= norm;
          dirs.push_back(d);
          for (double& x : d) x = -x;
          dirs.push_back(std::move(d));
        }
      }
    }
  }

  // Hooke-Jeeves pattern search: best-improvement polls with pattern
  // doubling along the accumulated move. Plain compass polling stalls
  // on the kinked diagonal ridges of this landscape.
  auto poll = [&](std::vector<double>& w, double& fw, double h) {
    bool improved = false;
    size_t bd = 0;
    double best = fw;
    std::vector<double> cand(n);
    for (size_t d = 0; d < dirs.size(); ++d) {
      for (size_t i = 0; i < n; ++i) cand[i] = w[i] + h * dirs[d][i];
      const double v = violation(cand);
      if (v > best) {
        best = v;
        bd = d;
        improved = true;
      }
    }
    if (improved) {
      for (size_t i = 0; i < n; ++i) w[i] += h * dirs[bd][i];
      fw = best;
    }
    return improved;
  };
  auto refine = [&](std::vector<double> w) {
    double fw = violation(w);
    double h = 1.0 / spec.resolution;
    while (h > 1e-13) {
      if (fw > -1e-12) break;  // the peak value is exactly zero
      if (!poll(w, fw, h)) {
        h /= 2;
        continue;
      }
      // pattern phase: keep doubling the accumulated move while it helps
      for (int leg = 0; leg < 60; ++leg) {
        std::vector<double> base = w;
        double fbase = fw;
        if (!poll(w, fw, h)) break;
        std::vector<double> jump(n);
        for (size_t i = 0; i < n; ++i) jump[i] = 2 * w[i] - base[i];
        const double fj = violation(jump);
        if (fj > fw) {
          w = jump;
          fw = fj;
        }
        if (fw <= fbase) break;
      }
    }
    return w;
  };

  // Neighbouring critical points can share one bump on the grid, with a
  // single local maximum between them; every grid point near a local
  // maximum is refined so each of the overlapping basins gets a start.
  std::vector<char> seed(grid.size(), 0);
  for (size_t g = 0; g < grid.size(); ++g) {
    if (!is_local_max(g)) continue;
    for (size_t g2 = 0; g2 < grid.size(); ++g2) {
      if (score[g2] <= kDead / 2) continue;
      int cheb = 0;
      for (size_t i = 0; i < n; ++i)
        cheb = std::max(cheb, std::abs(keys[g2][i] - keys[g][i]));
      if (cheb <= 3) seed[g2] = 1;
    }
  }

  std::vector<std::vector<double>> accepted;
  for (size_t g = 0; g < grid.size(); ++g) {
    if (!seed[g]) continue;
    const std::vector<double> w = refine(grid[g]);
    const double W = welfare_closed_form(u, w);
    if (W >= 0) continue;
    std::vector<double> cand(n);
    for (size_t i = 0; i < n; ++i) cand[i] = W / (double(n) * w[i]);
    bool negative = true;
    for (double c : cand)
      if (c > -tol) { negative = false; break; }
    if (!negative) continue;
    if (vo.eval(cand) < -tol) continue;
    // supporting-hyperplane residual at the candidate's own weights
    double resid = double(n);
    std::vector<double> wc(n);
    for (size_t i = 0; i < n; ++i) wc[i] = 1.0 / -cand[i];
    resid += welfare_closed_form(u, wc);
    if (std::fabs(resid) > double(n) * tol) continue;
    accepted.push_back(cand);
  }

  std::sort(accepted.begin(), accepted.end());
  std::vector<std::vector<double>> reps;
  for (const auto& c : accepted) {
    bool fresh = true;
    for (const auto& r : reps) {
      double dist = 0;
      for (size_t i = 0; i < n; ++i)
        dist = std::max(dist, std::fabs(c[i] - r[i]));
      if (dist <= tol) { fresh = false; break; }
    }
    if (fresh) reps.push_back(c);
  }
  return reps;
}

Problem random_problem(int nAgents, int nItems, std::uint64_t seed,
                       double mix) {
  if (nAgents < 1 || nItems < 1)
    throw InputError("random problem needs at least one agent and item");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % std::uint64_t(hi - lo + 1));
  };
  RatMat u(nAgents, RatVec(nItems));
  for (int a = 0; a < nItems; ++a) {
    const bool bad = unit() < mix;
    for (;;) {
      bool any_positive = false, any_nonzero = false, any_zero = false;
      for (int i = 0; i < nAgents; ++i) {
        const int e = bad ? pick(-9, -1) : pick(-9, 9);
        u[i][a] = Rat(e);
        if (e > 0) any_positive = true;
        if (e != 0) any_nonzero = true;
        if (e == 0) any_zero = true;
      }
      if (bad) break;
      // general columns are redrawn while all-zero or all-negative;
      // the all-negative quota belongs to `mix`
      if (any_positive || (any_zero && any_nonzero)) break;
    }
  }
  Problem p = make_problem(u);
  return p;
}

}  // namespace manna
