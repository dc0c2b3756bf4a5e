#pragma once

/* Test-only oracles and generators.  Each oracle takes a deliberately
 * different route than the library code it checks: enumeration by full box
 * scan instead of slice recursion, width minimization by exhaustive
 * direction search instead of the difference-kernel test set, fiber
 * counting by grouping instead of value sets. */

#include "aw/lattice_points.hpp"
#include "aw/numbers.hpp"
#include "aw/polytope.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// plain bounding-box scan filtered by the membership test
inline std::vector<aw::IntVec> box_scan_points(const aw::RationalPolytope& p) {
  const std::size_t d = p.dim();
  aw::IntVec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    aw::Rat mn = p.generating_points()[0][j], mx = mn;
    for (const aw::RatVec& v : p.generating_points()) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = aw::ceil_rat(mn);
    hi[j] = aw::floor_rat(mx);
    if (hi[j] < lo[j]) return {};
  }
  std::vector<aw::IntVec> out;
  aw::IntVec z = lo;
  for (;;) {
    aw::RatVec x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = aw::Rat(z[j]);
    if (aw::contains(p, x)) out.push_back(z);
    std::size_t pos = d;
    while (pos-- > 0) {
      if (z[pos] < hi[pos]) {
        ++z[pos];
        for (std::size_t j = pos + 1; j < d; ++j) z[j] = lo[j];
        break;
      }
      if (pos == 0) return out;
    }
  }
}

// number of distinct fibers of c over pts, by explicit grouping
inline aw::Int fiber_count(const std::vector<aw::IntVec>& pts, const aw::IntVec& c) {
  std::map<aw::Int, std::size_t> groups;
  for (const aw::IntVec& z : pts) ++groups[aw::dot(c, z)];
  return aw::Int(groups.size());
}

// all canonical primitive directions with max-norm <= bound
inline std::vector<aw::IntVec> all_canonical_dirs(std::size_t d, long bound) {
  std::vector<aw::IntVec> out;
  aw::IntVec c(d, aw::Int(-bound));
  for (;;) {
    bool canonical = false;
    for (const aw::Int& e : c) {
      if (e == 0) continue;
      canonical = e > 0;
      break;
    }
    if (canonical && aw::gcd_vector(c) == 1) out.push_back(c);
    std::size_t pos = d;
    while (pos-- > 0) {
      if (c[pos] < bound) {
        ++c[pos];
        break;
      }
      c[pos] = -bound;
      if (pos == 0) return out;
    }
  }
}

// exhaustive arithmetic-width minimum over all canonical primitive
// directions with max-norm <= bound
inline std::pair<aw::Int, std::vector<aw::IntVec>> exhaustive_aw_min(
    const std::vector<aw::IntVec>& pts, std::size_t d, long bound) {
  aw::Int best;
  std::vector<aw::IntVec> argmin;
  bool first = true;
  for (const aw::IntVec& c : all_canonical_dirs(d, bound)) {
    std::set<aw::Int> vals;
    for (const aw::IntVec& z : pts) vals.insert(aw::dot(c, z));
    const aw::Int w(vals.size());
    if (first || w < best) {
      best = w;
      argmin.clear();
      first = false;
    }
    if (w == best) argmin.push_back(c);
  }
  return {best, argmin};
}

// random rational polytope: point coordinates p/q with q in [1, max_den]
// and value within [-max_abs, max_abs]
inline aw::RationalPolytope random_polytope(std::mt19937& rng, std::size_t d,
                                            long max_abs, long max_den,
                                            std::size_t min_pts, std::size_t max_pts) {
  std::uniform_int_distribution<std::size_t> count(min_pts, max_pts);
  std::uniform_int_distribution<long> den(1, max_den);
  const std::size_t k = count(rng);
  std::vector<aw::RatVec> pts(k, aw::RatVec(d));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(-max_abs * q, max_abs * q);
      pts[i][j] = aw::make_rat(aw::Int(num(rng)), aw::Int(q));
    }
  return aw::make_polytope(std::move(pts));
}

// random strictly increasing integer set, size in [1, max_size]
inline std::vector<aw::Int> random_set(std::mt19937& rng, std::size_t max_size,
                                       long lo, long hi) {
  std::uniform_int_distribution<std::size_t> count(1, max_size);
  std::uniform_int_distribution<long> value(lo, hi);
  std::set<aw::Int> vals;
  const std::size_t k = count(rng);
  while (vals.size() < k) vals.insert(aw::Int(value(rng)));
  return {vals.begin(), vals.end()};
}

}  // namespace oracle
