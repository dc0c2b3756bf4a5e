#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/simplex.hpp"

#include <random>

using namespace aw;

namespace {

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("feasibility of equality systems") {
  // x + y = 1, x,y >= 0: feasible
  CHECK(lp_feasible({rv({1, 1})}, rv({1})));
  // x + y = -1, x,y >= 0: infeasible
  CHECK_FALSE(lp_feasible({rv({1, 1})}, rv({-1})));
  // x - y = 0, x + y = 2: feasible at (1,1)
  CHECK(lp_feasible({rv({1, -1}), rv({1, 1})}, rv({0, 2})));
  // inconsistent pair
  CHECK_FALSE(lp_feasible({rv({1, 1}), rv({1, 1})}, rv({1, 2})));
  // redundant rows must not confuse phase 1
  CHECK(lp_feasible({rv({1, 1}), rv({2, 2})}, rv({1, 2})));
}

TEST_CASE("optimization over a segment") {
  // weights of conv{0, 7/2}: value = 7/2 * w2, w1 + w2 = 1
  const std::vector<RatVec> a = {rv({1, 1})};
  const RatVec b = rv({1});
  RatVec obj;
  obj.emplace_back(0);
  obj.push_back(make_rat(7, 2));
  const LpOutcome mx = lp_optimize(a, b, obj, true);
  REQUIRE(mx.status == LpStatus::Optimal);
  CHECK(mx.value == make_rat(7, 2));
  const LpOutcome mn = lp_optimize(a, b, obj, false);
  REQUIRE(mn.status == LpStatus::Optimal);
  CHECK(mn.value == 0);
}

TEST_CASE("unbounded detection") {
  // maximize x subject to x - y = 0: x can grow with y
  const LpOutcome r = lp_optimize({rv({1, -1})}, rv({0}), rv({1, 0}), true);
  CHECK(r.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate programs terminate (Bland)") {
  // classic degeneracy: multiple zero-rhs rows
  const std::vector<RatVec> a = {rv({1, 1, 0, 0}), rv({1, 0, 1, 0}), rv({1, 0, 0, 1})};
  const RatVec b = rv({0, 0, 0});
  const LpOutcome r = lp_optimize(a, b, rv({-1, 0, 0, 0}), false);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 0);
}

TEST_CASE("random vertex-weight programs match direct vertex scan") {
  // min/max of a linear functional over conv{v_1..v_k} via weights equals
  // the min/max over the vertices themselves
  std::mt19937 rng(7101);
  std::uniform_int_distribution<long> val(-9, 9);
  std::uniform_int_distribution<std::size_t> count(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = count(rng);
    RatVec obj(k);
    for (Rat& q : obj) q = make_rat(val(rng), 1 + (trial % 3));
    std::vector<RatVec> a(1, RatVec(k, Rat(1)));
    const RatVec b = rv({1});
    Rat lo = obj[0], hi = obj[0];
    for (const Rat& q : obj) {
      if (q < lo) lo = q;
      if (q > hi) hi = q;
    }
    const LpOutcome mx = lp_optimize(a, b, obj, true);
    const LpOutcome mn = lp_optimize(a, b, obj, false);
    REQUIRE(mx.status == LpStatus::Optimal);
    REQUIRE(mn.status == LpStatus::Optimal);
    CHECK(mx.value == hi);
    CHECK(mn.value == lo);
  }
}
