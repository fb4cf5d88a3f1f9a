#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "manna/errors.hpp"
#include "manna/solve.hpp"
#include "manna/verify.hpp"
#include "testutil.hpp"

using namespace manna;
using namespace manna::test;

TEST_CASE("demand check golden cases") {
  // Wealth minimization bites: zero utility is free, so spending 1 on a
  // zero-utility bundle is not competitive.
  CHECK(!check_demand(def1_problem(), 1, {q(2, 3), Rat(0)},
                      {q(3, 2), q(1, 2)}, Budget::Positive));
  CHECK(check_demand(example1(), 0, {q(3, 4), Rat(1)}, {Rat(4), Rat(-2)},
                     Budget::Positive));
  CHECK(check_demand(example2(), 1, {Rat(0), q(1, 10)}, {Rat(8), Rat(-10)},
                     Budget::Negative));
}

TEST_CASE("demand check rejects bad price signs") {
  CHECK_THROWS_AS(check_demand(example1(), 0, {Rat(1), Rat(1)},
                               {Rat(-1), Rat(-2)}, Budget::Positive),
                  PriceSignError);
  CHECK_THROWS_AS(check_demand(example1(), 0, {Rat(1), Rat(1)},
                               {Rat(4), Rat(0)}, Budget::Positive),
                  PriceSignError);
}

TEST_CASE("demand check agrees with a grid search over the budget set") {
  // Every passing bundle must beat all grid bundles in the budget set,
  // and no strictly cheaper grid bundle may reach the same utility.
  std::mt19937_64 rng(31337);
  int tried = 0;
  while (tried < 12) {
    const Problem p = random_signed_problem(rng, 2, 2, 0.5);
    const Kind kind = classify(p).kind;
    std::vector<CompetitiveDivision> ds;
    try {
      ds = solve_competitive(p).divisions;
    } catch (const InputError&) {
      continue;
    }
    ++tried;
    const Budget beta = ds.front().budget;
    for (const auto& d : ds) {
      for (size_t i = 0; i < p.num_agents(); ++i) {
        REQUIRE(check_demand(p, i, d.allocation[i], d.prices, beta));
        const Rat own_utility = dot(p.u[i], d.allocation[i]);
        const Rat own_cost = dot(d.prices, d.allocation[i]);
        const int steps = 6;
        for (int g0 = 0; g0 <= 2 * steps; ++g0) {
          for (int g1 = 0; g1 <= 2 * steps; ++g1) {
            const RatVec y{Rat(g0, steps), Rat(g1, steps)};
            const Rat cost = dot(d.prices, y);
            if (cost > Rat(budget_value(beta))) continue;
            const Rat util = dot(p.u[i], y);
            CHECK(util <= own_utility);
            if (util == own_utility) CHECK(cost >= own_cost);
          }
        }
      }
    }
    (void)kind;
  }
}

TEST_CASE("no envy golden cases") {
  const Problem p1 = example1();
  CHECK(check_no_envy(p1, {{q(3, 4), Rat(1)}, {q(1, 4), Rat(0)}}));
  const Problem p2 = example2();
  CHECK(check_no_envy(p2, {{Rat(1), q(9, 10)}, {Rat(0), q(1, 10)}}));
  const Problem twin = make_problem(mat({{1}, {1}}));
  CHECK(!check_no_envy(twin, {{Rat(1)}, {Rat(0)}}));
}

TEST_CASE("fair share golden cases") {
  const Problem p1 = example1();
  CHECK(equal_split_profile(p1) == RatVec{Rat(1), Rat(-2)});
  CHECK(check_fair_share(p1, {{q(3, 4), Rat(1)}, {q(1, 4), Rat(0)}}));
  const Problem p2 = example2();
  CHECK(equal_split_profile(p2) == RatVec{q(-1, 2), Rat(-2)});
  CHECK(check_fair_share(p2, {{Rat(1), q(9, 10)}, {Rat(0), q(1, 10)}}));
  CHECK(check_fair_share(p1, equal_split_allocation(p1)));
}

TEST_CASE("weak core holds where the standard core fails") {
  const Problem p = remark1_problem();
  const Allocation z{{q(1, 2)}, {q(1, 2)}, {Rat(0)}};
  CHECK(check_weak_core(p, z));
  const auto blocking = standard_core_blocking(p, z);
  REQUIRE(blocking.has_value());
  CHECK(*blocking == std::vector<size_t>{0, 2});
}

TEST_CASE("weak core is vacuous for one agent") {
  const Problem p = make_problem(mat({{3, -1}}));
  CHECK(check_weak_core(p, {{Rat(1), Rat(1)}}));
}

TEST_CASE("solidarity") {
  CompetitiveDivision pos;
  pos.profile = {Rat(1), q(1, 4)};
  CHECK(check_solidarity({pos}, Kind::Positive));
  CompetitiveDivision neg;
  neg.profile = {q(-1, 2), q(-1, 2)};
  CHECK(check_solidarity({neg}, Kind::Negative));
  CompetitiveDivision mixed;
  mixed.profile = {Rat(1), Rat(-1)};
  CHECK(!check_solidarity({mixed}, Kind::Positive));
  CHECK(!check_solidarity({mixed}, Kind::Negative));
  CompetitiveDivision zero;
  zero.profile = {Rat(0), Rat(0)};
  CHECK(check_solidarity({zero}, Kind::Null));
}

TEST_CASE("full report on the wealth-minimization failure") {
  const Problem p = def1_problem();
  CompetitiveDivision d;
  d.allocation = {{q(1, 3), Rat(1)}, {q(2, 3), Rat(0)}};
  d.prices = {q(3, 2), q(1, 2)};
  d.budget = Budget::Positive;
  d.profile = utility_profile(p, d.allocation);
  const VerificationReport rep = verify_division(p, d, Kind::Positive);
  CHECK(!rep.all_pass());
  CHECK(!rep.wealthMin.pass);      // agent 2 pays 1 for zero utility
  CHECK(!rep.efficiency.pass);
  CHECK(!rep.consumption.pass);    // agent 2 eats a good it does not value
  CHECK(rep.priceSigns.pass);
}

TEST_CASE("solver outputs pass the full report") {
  for (const Problem& p : {example1(), example2(), def1_problem(),
                           remark1_problem(), appendix_problem(-1)}) {
    const CompetitiveSolution sol = solve_competitive(p);
    for (const auto& d : sol.divisions) {
      const VerificationReport rep =
          verify_division(p, d, sol.classification.kind);
      INFO("profile ", to_string(d.profile));
      CHECK(rep.all_pass());
    }
  }
}

TEST_CASE("profile inconsistency is an input error") {
  const Problem p = example1();
  CompetitiveDivision d;
  d.allocation = {{q(3, 4), Rat(1)}, {q(1, 4), Rat(0)}};
  d.prices = {Rat(4), Rat(-2)};
  d.budget = Budget::Positive;
  d.profile = {Rat(7), Rat(7)};
  CHECK_THROWS_AS(verify_division(p, d, Kind::Positive), InputError);
}
