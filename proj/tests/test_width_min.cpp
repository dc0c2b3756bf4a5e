#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aw/width_min.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace aw;

namespace {

RatVec pt(std::initializer_list<const char*> xs) {
  RatVec v;
  for (const char* x : xs) v.push_back(rat_from_string(x));
  return v;
}

IntVec iv(std::initializer_list<long> xs) { return IntVec(xs.begin(), xs.end()); }

bool has_dir(const std::vector<IntVec>& dirs, const IntVec& c) {
  return std::find(dirs.begin(), dirs.end(), c) != dirs.end();
}

}  // namespace

TEST_CASE("test directions for two points are the difference kernel") {
  const RationalPolytope p = make_polytope({pt({"0", "0"}), pt({"1", "0"})});
  const std::vector<IntVec> dirs = test_directions(p);
  CHECK(dirs == std::vector<IntVec>{iv({0, 1})});
  CHECK_THROWS_AS(test_directions(make_polytope({pt({"1/2", "1/2"})})),
                  std::invalid_argument);
}

TEST_CASE("test directions of collinear points") {
  const RationalPolytope p = make_polytope({pt({"0", "0"}), pt({"3", "3"})});
  CHECK(test_directions(p) == std::vector<IntVec>{iv({1, -1})});
}

TEST_CASE("test set contains the known minimizing kernels") {
  // five-point configuration whose minimum is found off the axes
  const RationalPolytope p =
      make_polytope({pt({"0", "0"}), pt({"4", "1"}), pt({"4", "2"})});
  const std::vector<IntVec> dirs = test_directions(p);
  CHECK(has_dir(dirs, iv({0, 1})));
  CHECK(has_dir(dirs, iv({1, -2})));
  for (const IntVec& c : dirs) {
    CHECK(c == canonical_direction(c));
    CHECK(gcd_vector(c) == 1);
  }
  CHECK(std::is_sorted(dirs.begin(), dirs.end()));
  CHECK(std::adjacent_find(dirs.begin(), dirs.end()) == dirs.end());
}

TEST_CASE("arithmetic width of worked examples") {
  const WidthResult tri = arithmetic_width(
      make_polytope({pt({"0", "0"}), pt({"4", "1"}), pt({"4", "2"})}));
  CHECK(tri.value == 3);
  CHECK(tri.method == WidthMethod::TestSet);
  CHECK(has_dir(tri.minimizers, iv({1, -2})));

  const WidthResult seg =
      arithmetic_width(make_polytope({pt({"0", "0"}), pt({"1", "0"}),
                                      pt({"3/5", "14/5"})}));
  CHECK(seg.value == 1);
  CHECK(seg.minimizers == std::vector<IntVec>{iv({0, 1})});
  CHECK(seg.method == WidthMethod::TestSet);
}

TEST_CASE("arithmetic width conventions for tiny point sets") {
  const WidthResult none = arithmetic_width(make_polytope({pt({"1/2", "1/2"})}));
  CHECK(none.value == 0);
  CHECK(none.minimizers == std::vector<IntVec>{iv({1, 0})});
  CHECK(none.method == WidthMethod::Convention);

  const WidthResult one = arithmetic_width(make_polytope({pt({"2", "7"})}));
  CHECK(one.value == 1);
  CHECK(one.minimizers == std::vector<IntVec>{iv({1, 0})});
  CHECK(one.method == WidthMethod::Convention);
}

TEST_CASE("bounded lattice width of squares") {
  const RationalPolytope sq = make_polytope(
      {pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1", "1"})});
  const WidthResult w = lattice_width_bounded(sq, Int(3));
  CHECK(w.value == 1);
  CHECK(w.minimizers == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
  CHECK(w.method == WidthMethod::BoundedEnumeration);

  const WidthResult big = lattice_width_bounded(dilate(sq, Rat(5)), Int(2));
  CHECK(big.value == 5);
  CHECK(big.minimizers == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});

  CHECK_THROWS_AS(lattice_width_bounded(sq, Int(0)), std::invalid_argument);
}

TEST_CASE("divergence of the two widths on the tall thin triangle") {
  // arithmetic width 1 along (0,1); support width minimized by (1,0) only
  const RationalPolytope p =
      make_polytope({pt({"0", "0"}), pt({"1", "0"}), pt({"3/5", "14/5"})});
  const DivergenceReport r = divergence_report(p, Int(10));
  CHECK(r.arithmetic.value == 1);
  CHECK(r.arithmetic.minimizers == std::vector<IntVec>{iv({0, 1})});
  CHECK(r.lattice.value == 1);
  CHECK(r.lattice.minimizers == std::vector<IntVec>{iv({1, 0})});
  CHECK(r.relation == MinimizerRelation::Disjoint);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("divergence relation variants") {
  const RationalPolytope sq = make_polytope(
      {pt({"0", "0"}), pt({"1", "0"}), pt({"0", "1"}), pt({"1", "1"})});
  const DivergenceReport eq = divergence_report(sq, Int(3));
  CHECK(eq.arithmetic.value == 2);
  CHECK(eq.relation == MinimizerRelation::Equal);

  const DivergenceReport conv =
      divergence_report(make_polytope({pt({"1/2", "1/2"})}), Int(2));
  CHECK(conv.arithmetic.method == WidthMethod::Convention);
  // conventionally chosen minimizer still intersects the genuine lattice one
  CHECK(conv.relation != MinimizerRelation::Equal);
}

TEST_CASE("test-set minimum matches exhaustive search on random polytopes") {
  std::mt19937 rng(7501);
  int verified = 0;
  for (int trial = 0; trial < 80 && verified < 40; ++trial) {
    const RationalPolytope p = oracle::random_polytope(rng, 2, 4, 2, 3, 5);
    const std::vector<IntVec> pts = enumerate_lattice_points(p);
    if (pts.size() < 2) continue;
    ++verified;
    // primitive differences have max-norm <= 8, so their rotated kernels do
    // too; the exhaustive oracle over that bound is conclusive
    const auto [best, argmin] = oracle::exhaustive_aw_min(pts, 2, 8);
    const WidthResult got = arithmetic_width(p);
    CHECK(got.value == Rat(best));
    for (const IntVec& c : got.minimizers) CHECK(has_dir(argmin, c));
  }
  CHECK(verified == 40);
}

TEST_CASE("bounded lattice width matches exhaustive support scan") {
  std::mt19937 rng(7502);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalPolytope p = oracle::random_polytope(rng, 2, 3, 3, 2, 4);
    const WidthResult got = lattice_width_bounded(p, Int(2));
    Rat best;
    std::vector<IntVec> argmin;
    bool first = true;
    for (const IntVec& c : oracle::all_canonical_dirs(2, 2)) {
      auto [lo, hi] = support(p, c);
      const Rat w = hi - lo;
      if (first || w < best) {
        best = w;
        argmin.clear();
        first = false;
      }
      if (w == best) argmin.push_back(c);
    }
    std::sort(argmin.begin(), argmin.end());
    CHECK(got.value == best);
    CHECK(got.minimizers == argmin);
  }
}
