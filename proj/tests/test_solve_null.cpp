#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "manna/classify.hpp"
#include "manna/errors.hpp"
#include "manna/solve_null.hpp"
#include "testutil.hpp"

using namespace manna;
using namespace manna::test;

TEST_CASE("appendix c=2 golden division") {
  const Problem p = appendix_problem(2);
  const CompetitiveDivision d = solve_null(p);
  CHECK(d.profile == RatVec{Rat(0), Rat(0)});
  CHECK(d.budget == Budget::Zero);
  CHECK(d.allocation ==
        Allocation{{Rat(1), Rat(0), q(1, 2)}, {Rat(0), Rat(1), q(1, 2)}});
  CHECK(dot(d.prices, d.allocation[0]) == Rat(0));
  CHECK(dot(d.prices, d.allocation[1]) == Rat(0));
  // Weights are normalized to sum one over the optimistic agents, so the
  // supporting prices are half the smallest integer representative.
  const SeparatingWeights w = separating_weights(p);
  CHECK(w.lambdaNPlus == RatVec{q(1, 2), q(1, 2)});
  CHECK(d.prices == RatVec{q(-1, 2), q(-1, 2), Rat(1)});
}

TEST_CASE("antisymmetric pair of items") {
  const Problem p = make_problem(mat({{1, -1}, {1, -1}}));
  const CompetitiveDivision d = solve_null(p);
  CHECK(d.profile == RatVec{Rat(0), Rat(0)});
  for (size_t i = 0; i < 2; ++i) {
    CHECK(dot(p.u[i], d.allocation[i]) == Rat(0));
    CHECK(dot(d.prices, d.allocation[i]) == Rat(0));
  }
  CHECK(d.prices[0].sign() > 0);
  CHECK(d.prices[1].sign() < 0);
  CHECK(d.prices[0] == -d.prices[1]);
}

TEST_CASE("single neutral item with no optimists") {
  const Problem p = make_problem(mat({{0}, {-1}}));
  const CompetitiveDivision d = solve_null(p);
  CHECK(d.profile == RatVec{Rat(0), Rat(0)});
  CHECK(d.prices == RatVec{Rat(0)});
  CHECK(d.allocation == Allocation{{Rat(1)}, {Rat(0)}});
  CHECK(separating_weights(p).lambdaNPlus.empty());
}

TEST_CASE("separation invariants") {
  for (const Problem& p :
       {appendix_problem(2), make_problem(mat({{1, -1}, {1, -1}})),
        make_problem(mat({{1, -1}, {0, -1}}))}) {
    if (classify(p).kind != Kind::Null) continue;
    const SeparatingWeights w = separating_weights(p);
    const Partitions part = partition(p);
    for (size_t i : part.nPlus) CHECK(w.lambdaFull[i].sign() > 0);
    // The full weight vector supports the feasible set at zero.
    CHECK(welfare_optimum(p, w.lambdaFull) == Rat(0));
  }
}

TEST_CASE("pessimists can force positive weights on their rows") {
  // Agent 2 only absorbs the bad; with weight zero on it the welfare
  // optimum would be positive, so the full vector must charge it.
  const Problem p = make_problem(mat({{1, -1}, {0, -1}}));
  REQUIRE(classify(p).kind == Kind::Null);
  const SeparatingWeights w = separating_weights(p);
  CHECK(welfare_optimum(p, w.lambdaFull) == Rat(0));
  RatVec zero_extended = w.lambdaFull;
  zero_extended[1] = Rat(0);
  CHECK(welfare_optimum(p, zero_extended).sign() > 0);

  const CompetitiveDivision d = solve_null(p);
  CHECK(d.profile == RatVec{Rat(0), Rat(0)});
  CHECK(d.allocation == Allocation{{Rat(1), Rat(1)}, {Rat(0), Rat(0)}});
  CHECK(dot(d.prices, d.allocation[0]) == Rat(0));
}

TEST_CASE("solver refuses non-null problems") {
  CHECK_THROWS_AS(solve_null(example1()), NotNull);
  CHECK_THROWS_AS(solve_null(example2()), NotNull);
  CHECK_THROWS_AS(separating_weights(example1()), NotNull);
}
