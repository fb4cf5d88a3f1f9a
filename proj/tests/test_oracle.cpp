#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "manna/errors.hpp"
#include "manna/oracle.hpp"
#include "manna/solve_negative.hpp"
#include "testutil.hpp"

using namespace manna;
using namespace manna::test;

namespace {

bool near(double x, const Rat& r, double tol = 1e-6) {
  return std::fabs(x - r.to_double()) <= tol;
}

// One-to-one matching between exact profiles and oracle clusters.
bool sets_match(const std::vector<UtilityProfile>& exact,
                const std::vector<std::vector<double>>& clusters,
                double tol = 1e-6) {
  if (exact.size() != clusters.size()) return false;
  std::vector<bool> used(clusters.size(), false);
  for (const auto& e : exact) {
    bool hit = false;
    for (size_t k = 0; k < clusters.size() && !hit; ++k) {
      if (used[k]) continue;
      bool all = true;
      for (size_t i = 0; i < e.size(); ++i)
        if (!near(clusters[k][i], e[i], tol)) { all = false; break; }
      if (all) { used[k] = true; hit = true; }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<UtilityProfile> exact_profiles(const Problem& p) {
  std::vector<UtilityProfile> out;
  for (const auto& d : solve_negative(p)) out.push_back(d.profile);
  return out;
}

}  // namespace

TEST_CASE("one cluster near the published negative division") {
  GridSpec spec;
  spec.resolution = 100;
  spec.tolerance = Rat(1, 1000);
  const auto clusters = grid_critical_points(example2(), spec);
  REQUIRE(clusters.size() == 1);
  CHECK(near(clusters[0][0], q(-1, 2), 1e-3));
  CHECK(near(clusters[0][1], q(-1, 2), 1e-3));
}

TEST_CASE("single bad splits in half") {
  const auto clusters =
      grid_critical_points(make_problem(mat({{-1}, {-1}})), GridSpec{});
  REQUIRE(clusters.size() == 1);
  CHECK(near(clusters[0][0], q(-1, 2)));
  CHECK(near(clusters[0][1], q(-1, 2)));
}

TEST_CASE("parametric family cluster counts match the exact solver") {
  for (long long c : {1L, 0L, -1L, -2L, -3L}) {
    const Problem p = appendix_problem(c);
    const auto exact = exact_profiles(p);
    const auto clusters = grid_critical_points(p, GridSpec{});
    INFO("c = ", c, ", exact ", exact.size(), " clusters ", clusters.size());
    CHECK(sets_match(exact, clusters));
  }
}

TEST_CASE("oracle refuses other kinds") {
  CHECK_THROWS_AS(grid_critical_points(example1(), GridSpec{}), NotNegative);
  CHECK_THROWS_AS(grid_critical_points(appendix_problem(2), GridSpec{}),
                  NotNegative);
  GridSpec bad;
  bad.resolution = 1;
  CHECK_THROWS_AS(grid_critical_points(example2(), bad), InputError);
}

TEST_CASE("random problems are reproducible") {
  const Problem a = random_problem(2, 2, 1, 0.5);
  const Problem b = random_problem(2, 2, 1, 0.5);
  CHECK(a.u == b.u);
  // Frozen seed stream: keep golden values so silent generator changes
  // are caught.
  const Problem c = random_problem(3, 4, 7, 1.0);
  for (const auto& row : c.u)
    for (const Rat& e : row) CHECK(e.sign() < 0);
  const Problem d = random_problem(1, 1, 0, 0.0);
  CHECK(d.u[0][0].sign() > 0);
  CHECK_THROWS_AS(random_problem(0, 1, 1, 0.0), InputError);
}

TEST_CASE("random mix fractions are approximately respected") {
  int all_neg_cols = 0, total = 0;
  for (int seed = 0; seed < 40; ++seed) {
    const Problem p = random_problem(3, 5, 1000 + seed, 0.5);
    const Partitions part = partition(p);
    all_neg_cols += static_cast<int>(part.aMinus.size());
    total += static_cast<int>(p.num_items());
  }
  const double frac = double(all_neg_cols) / total;
  CHECK(frac > 0.3);
  CHECK(frac < 0.7);
}

TEST_CASE("oracle agrees with the exact solver on random negatives") {
  int matched = 0, tried = 0;
  for (std::uint64_t seed = 100; matched < 8 && tried < 200; ++seed) {
    const Problem p = random_problem(2 + int(seed % 2), 3, seed, 0.9);
    if (classify(p).kind != Kind::Negative) continue;
    ++tried;
    const auto exact = exact_profiles(p);
    const auto clusters = grid_critical_points(p, GridSpec{});
    INFO("seed ", seed);
    CHECK(sets_match(exact, clusters));
    if (sets_match(exact, clusters)) ++matched;
  }
  CHECK(matched >= 8);
}
