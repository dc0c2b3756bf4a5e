#include "aw/width_min.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aw {

namespace {

IntVec first_unit(std::size_t d) {
  IntVec e(d, 0);
  e[0] = 1;
  return e;
}

// distinct canonical directions of pairwise differences of pts
std::vector<IntVec> primitive_differences(const std::vector<IntVec>& pts,
                                          std::size_t d) {
  std::set<IntVec> dirs;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      IntVec diff(d);
      for (std::size_t t = 0; t < d; ++t) diff[t] = pts[j][t] - pts[i][t];
      dirs.insert(canonical_direction(diff));
    }
  return {dirs.begin(), dirs.end()};
}

// test set from pts: kernels of all full-rank k-subsets of the primitive
// differences, k = min(d-1, rank of the differences)
std::vector<IntVec> test_directions_for(const std::vector<IntVec>& pts,
                                        std::size_t d) {
  if (pts.size() < 2)
    throw std::invalid_argument("test_directions: fewer than 2 lattice points");
  const std::vector<IntVec> diffs = primitive_differences(pts, d);
  const std::size_t s = rank_int(diffs, d);
  const std::size_t k = std::min(d - 1, s);

  std::set<IntVec> dirs;
  if (k == 0) {
    // ambient dimension 1: the only canonical direction
    for (const IntVec& row : identity_matrix(d)) dirs.insert(row);
    return {dirs.begin(), dirs.end()};
  }

  // iterate k-subsets of diffs by an index odometer
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (diffs.size() < k) throw std::logic_error("test_directions: rank exceeds count");
  for (;;) {
    IntMat sub;
    sub.reserve(k);
    for (std::size_t i : idx) sub.push_back(diffs[i]);
    if (rank_int(sub, d) == k)
      for (const IntVec& row : integer_kernel(sub, d))
        dirs.insert(canonical_direction(row));
    // advance odometer
    std::size_t pos = k;
    while (pos-- > 0) {
      if (idx[pos] + (k - pos) < diffs.size()) {
        ++idx[pos];
        for (std::size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        break;
      }
      if (pos == 0) return {dirs.begin(), dirs.end()};
    }
  }
}

Int width_along(const std::vector<IntVec>& pts, const IntVec& c) {
  std::set<Int> vals;
  for (const IntVec& z : pts) vals.insert(dot(c, z));
  return Int(vals.size());
}

}  // namespace

std::vector<IntVec> test_directions(const RationalPolytope& p,
                                    const EnumerationLimits& limits) {
  return test_directions_for(enumerate_lattice_points(p, limits), p.dim());
}

WidthResult arithmetic_width(const RationalPolytope& p,
                             const EnumerationLimits& limits) {
  const std::vector<IntVec> pts = enumerate_lattice_points(p, limits);
  if (pts.size() <= 1)
    return {Rat(pts.size()), {first_unit(p.dim())}, WidthMethod::Convention};

  const std::vector<IntVec> dirs = test_directions_for(pts, p.dim());
  WidthResult res;
  res.method = WidthMethod::TestSet;
  bool first = true;
  Int best;
  for (const IntVec& c : dirs) {
    const Int w = width_along(pts, c);
    if (first || w < best) {
      best = w;
      res.minimizers.clear();
      first = false;
    }
    if (w == best) res.minimizers.push_back(c);  // dirs sorted, so sorted too
  }
  res.value = best;
  return res;
}

WidthResult lattice_width_bounded(const RationalPolytope& p, const Int& bound) {
  if (bound < 1) throw std::invalid_argument("lattice_width_bounded: bound < 1");
  const std::size_t d = p.dim();
  WidthResult res;
  res.method = WidthMethod::BoundedEnumeration;

  // odometer over [-bound, bound]^d, keeping canonical directions only
  IntVec c(d, -bound);
  bool first = true;
  for (;;) {
    bool canonical = false;
    for (const Int& e : c) {
      if (e == 0) continue;
      canonical = e > 0;
      break;
    }
    if (canonical && gcd_vector(c) == 1) {
      const Rat w = lattice_width_dir(p, c);
      if (first || w < res.value) {
        res.value = w;
        res.minimizers.clear();
        first = false;
      }
      if (w == res.value) res.minimizers.push_back(c);
    }
    std::size_t pos = d;
    while (pos-- > 0) {
      if (c[pos] < bound) {
        ++c[pos];
        break;
      }
      c[pos] = -bound;
      if (pos == 0) {
        std::sort(res.minimizers.begin(), res.minimizers.end());
        return res;
      }
    }
  }
}

DivergenceReport divergence_report(const RationalPolytope& p, const Int& bound,
                                   const EnumerationLimits& limits) {
  DivergenceReport rep;
  rep.arithmetic = arithmetic_width(p, limits);
  rep.lattice = lattice_width_bounded(p, bound);

  std::vector<IntVec> common;
  std::set_intersection(rep.arithmetic.minimizers.begin(), rep.arithmetic.minimizers.end(),
                        rep.lattice.minimizers.begin(), rep.lattice.minimizers.end(),
                        std::back_inserter(common));
  if (common.empty())
    rep.relation = MinimizerRelation::Disjoint;
  else if (rep.arithmetic.minimizers == rep.lattice.minimizers)
    rep.relation = MinimizerRelation::Equal;
  else
    rep.relation = MinimizerRelation::Overlapping;

  if (rep.arithmetic.method == WidthMethod::Convention)
    rep.notes.push_back("arithmetic width minimizer is the <=1-point convention");
  rep.notes.push_back("lattice width minimized over max-norm bound " + bound.get_str() +
                      " only");
  return rep;
}

}  // namespace aw
