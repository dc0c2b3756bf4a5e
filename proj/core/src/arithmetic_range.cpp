#include "aw/arithmetic_range.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aw {

ArithmeticRange arithmetic_range(const RationalPolytope& p, const IntVec& c,
                                 const EnumerationLimits& limits) {
  if (c.size() != p.dim()) throw std::invalid_argument("arithmetic_range: length mismatch");
  ArithmeticRange ar;
  ar.direction = canonical_direction(c);  // throws on the zero direction
  std::set<Int> vals;
  for (const IntVec& z : enumerate_lattice_points(p, limits))
    vals.insert(dot(ar.direction, z));
  ar.values.assign(vals.begin(), vals.end());
  return ar;
}

Int arithmetic_width_dir(const RationalPolytope& p, const IntVec& c,
                         const EnumerationLimits& limits) {
  return Int(arithmetic_range(p, c, limits).values.size());
}

StepSize step_size(const RationalPolytope& p, const IntVec& c) {
  if (c.size() != p.dim()) throw std::invalid_argument("step_size: length mismatch");
  const AffineLatticeData& aff = p.affine_lattice();
  if (!aff.has_lattice_point)
    throw std::invalid_argument("step_size: affine hull contains no lattice point");
  const IntVec c0 = canonical_direction(c);
  Int g = 0;
  for (const IntVec& b : aff.lattice_basis) {
    Int v = dot(c0, b);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) return {Int(1), true};  // constant on the affine hull
  return {std::move(g), false};
}

AlmostAp decompose_almost_ap(const std::vector<Int>& values) {
  if (values.empty()) throw std::invalid_argument("decompose_almost_ap: empty value list");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (!(values[i - 1] < values[i]))
      throw std::invalid_argument("decompose_almost_ap: values not strictly increasing");

  AlmostAp ap;
  ap.m = values.front();
  ap.max = values.back();
  Int step = 0;
  for (const Int& v : values) {
    Int diff = v - ap.m;
    mpz_gcd(step.get_mpz_t(), step.get_mpz_t(), diff.get_mpz_t());
  }
  ap.step = (step == 0) ? Int(1) : step;  // singleton: empty progression body

  // walk the progression against the value list; members are consumed in order
  const Int mid_twice = ap.m + ap.max;  // gap g goes left iff 2g <= m + max
  std::size_t idx = 0;
  for (Int v = ap.m; v <= ap.max; v += ap.step) {
    if (idx < values.size() && values[idx] == v) {
      ++idx;
      continue;
    }
    if (2 * v <= mid_twice)
      ap.gaps_left.push_back(v);
    else
      ap.gaps_right.push_back(v);
  }
  // t and t' measure value distance from the ends, not step counts
  if (!ap.gaps_left.empty()) ap.t = ap.gaps_left.back() - ap.m;
  if (!ap.gaps_right.empty()) ap.t_prime = ap.max - ap.gaps_right.front();
  return ap;
}

std::vector<Int> reconstruct_almost_ap(const AlmostAp& ap) {
  if (ap.step <= 0) throw std::invalid_argument("reconstruct_almost_ap: nonpositive step");
  if (ap.max < ap.m) throw std::invalid_argument("reconstruct_almost_ap: empty range");
  std::vector<Int> out;
  std::size_t li = 0, ri = 0;
  for (Int v = ap.m; v <= ap.max; v += ap.step) {
    if (li < ap.gaps_left.size() && ap.gaps_left[li] == v) {
      ++li;
      continue;
    }
    if (ri < ap.gaps_right.size() && ap.gaps_right[ri] == v) {
      ++ri;
      continue;
    }
    out.push_back(v);
  }
  if (li != ap.gaps_left.size() || ri != ap.gaps_right.size())
    throw std::invalid_argument("reconstruct_almost_ap: gaps off the progression");
  return out;
}

Rat lattice_width_dir(const RationalPolytope& p, const IntVec& c) {
  const auto [lo, hi] = support(p, c);
  return hi - lo;
}

IntVec separating_direction(const RationalPolytope& p,
                            const EnumerationLimits& limits) {
  const std::vector<IntVec> pts = enumerate_lattice_points(p, limits);
  if (pts.empty())
    throw std::invalid_argument("separating_direction: no lattice points");
  const std::size_t d = p.dim();
  // on the moment curve (1, z, ..., z^{d-1}) two lattice points collide only
  // at roots of a nonzero degree-(d-1) polynomial, so some small z works
  for (Int z = 0;; ++z) {
    IntVec c(d);
    Int pw = 1;
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = pw;
      pw *= z;
    }
    std::set<Int> vals;
    for (const IntVec& pt : pts) vals.insert(dot(c, pt));
    if (vals.size() == pts.size()) return c;
  }
}

}  // namespace aw
