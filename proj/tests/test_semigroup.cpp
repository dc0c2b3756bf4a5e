#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/semigroup.hpp"

#include "aw/arithmetic_range.hpp"
#include "aw/lattice_points.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace aw;

namespace {

std::vector<Int> gens(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

IntVec iv(std::initializer_list<long> xs) { return IntVec(xs.begin(), xs.end()); }

}  // namespace

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(make_semigroup({}), std::invalid_argument);
  CHECK_THROWS_AS(make_semigroup(gens({0, 3})), std::invalid_argument);
  CHECK_THROWS_AS(make_semigroup(gens({-2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(make_semigroup(gens({4, 4, 5})), std::invalid_argument);
  CHECK(make_semigroup(gens({9, 20, 6})).generators == gens({6, 9, 20}));
  CHECK(make_semigroup(gens({6, 9, 20})).gcd == 1);
  CHECK(make_semigroup(gens({4, 6})).gcd == 2);
  CHECK(make_semigroup(gens({1})).generators == gens({1}));
}

TEST_CASE("factorizations of small elements") {
  const NumericalSemigroup s = make_semigroup(gens({2, 3}));
  CHECK(factorizations(s, Int(0)) == std::vector<IntVec>{iv({0, 0})});
  CHECK(factorizations(s, Int(1)).empty());
  CHECK(factorizations(s, Int(6)) ==
        std::vector<IntVec>{iv({0, 2}), iv({3, 0})});
  CHECK(factorizations(s, Int(12)) ==
        std::vector<IntVec>{iv({0, 4}), iv({3, 2}), iv({6, 0})});
  CHECK(length_set(s, Int(6)) == gens({2, 3}));
  CHECK(length_set(s, Int(12)) == gens({4, 5, 6}));
  CHECK(length_set(s, Int(0)) == gens({0}));
  CHECK_THROWS_AS(factorizations(s, Int(-1)), std::invalid_argument);

  // a gcd-2 list factorizes only multiples of 2
  const NumericalSemigroup even = make_semigroup(gens({4, 6}));
  CHECK(factorizations(even, Int(10)) == std::vector<IntVec>{iv({1, 1})});
  CHECK(factorizations(even, Int(5)).empty());
}

TEST_CASE("every factorization evaluates back to the element") {
  const NumericalSemigroup s = make_semigroup(gens({6, 9, 20}));
  for (long n = 0; n <= 90; ++n) {
    const std::vector<IntVec> fs = factorizations(s, Int(n));
    CHECK(std::is_sorted(fs.begin(), fs.end()));
    std::set<Int> lengths;
    for (const IntVec& x : fs) {
      Int total = 0, len = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i] >= 0);
        total += x[i] * s.generators[i];
        len += x[i];
      }
      CHECK(total == n);
      lengths.insert(len);
    }
    CHECK(length_set(s, Int(n)) ==
          std::vector<Int>(lengths.begin(), lengths.end()));
  }
}

TEST_CASE("polytope shape") {
  const RationalPolytope p23 = semigroup_polytope(make_semigroup(gens({2, 3})));
  CHECK(p23.generating_points() ==
        std::vector<RatVec>{RatVec{Rat(0), make_rat(1, 3)},
                            RatVec{make_rat(1, 2), Rat(0)}});
  const RationalPolytope unit = semigroup_polytope(make_semigroup(gens({1})));
  CHECK(unit.generating_points() == std::vector<RatVec>{RatVec{Rat(1)}});
  CHECK(semigroup_polytope(make_semigroup(gens({22, 79, 91, 190}))).dim() == 4);
}

TEST_CASE("the polytope dilate carries exactly the factorizations") {
  const NumericalSemigroup s = make_semigroup(gens({3, 5, 7}));
  const RationalPolytope p = semigroup_polytope(s);
  CHECK(p.dim() == 3);
  CHECK(p.denominator() == 105);  // lcm(3, 5, 7)
  CHECK(p.generating_points()[2] == RatVec{make_rat(1, 3), Rat(0), Rat(0)});
  for (long n = 0; n <= 40; ++n) {
    const std::vector<IntVec> direct = factorizations(s, Int(n));
    if (n == 0) continue;  // zero dilate is the origin point, not defined here
    const std::vector<IntVec> via_polytope =
        enumerate_lattice_points(dilate(p, Int(n)));
    CHECK(direct == via_polytope);
  }
}

TEST_CASE("length sets are the all-ones arithmetic range of the dilate") {
  const NumericalSemigroup s = make_semigroup(gens({2, 3}));
  const RationalPolytope p = semigroup_polytope(s);
  for (long n = 1; n <= 30; ++n) {
    const ArithmeticRange r = arithmetic_range(dilate(p, Int(n)), iv({1, 1}));
    CHECK(r.values == length_set(s, Int(n)));
  }
}

TEST_CASE("wide-generator length set decomposes with step 3") {
  // lengths of 4180 over <22,79,91,190>: {22} then 28..172 in steps of 3,
  // then 178 and 190 -- one progression gap on the left, four on the right
  const NumericalSemigroup s = make_semigroup(gens({22, 79, 91, 190}));
  const std::vector<IntVec> fs = factorizations(s, Int(4180));
  CHECK(fs.size() == 463);
  const std::vector<Int> lengths = length_set(s, Int(4180));
  REQUIRE(lengths.size() == 52);
  std::vector<Int> expected{Int(22)};
  for (long v = 28; v <= 172; v += 3) expected.push_back(Int(v));
  expected.push_back(Int(178));
  expected.push_back(Int(190));
  CHECK(lengths == expected);

  const AlmostAp ap = decompose_almost_ap(lengths);
  CHECK(ap.m == 22);
  CHECK(ap.max == 190);
  CHECK(ap.step == 3);
  CHECK(ap.t == 3);
  CHECK(ap.t_prime == 15);
  CHECK(ap.gaps_left == std::vector<Int>{Int(25)});
  CHECK(ap.gaps_right ==
        std::vector<Int>{Int(175), Int(181), Int(184), Int(187)});
}
