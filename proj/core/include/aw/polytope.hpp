#pragma once

/* Rational polytopes as convex hulls of finite point lists.  The point list
 * is canonicalized (sorted, deduped) but not reduced to actual vertices;
 * every quantity computed from it depends only on the hull.  The affine-hull
 * lattice data and the denominator are computed eagerly and cached. */

#include "aw/intlinalg.hpp"
#include "aw/numbers.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace aw {

struct AffineLatticeData {
  bool has_lattice_point = false;
  // integer point of aff(P) and a lattice basis of the direction space of
  // aff(P) intersected with Z^d; both meaningful iff has_lattice_point
  IntVec base_point;
  IntMat lattice_basis;
  std::size_t affine_dim = 0;
};

class RationalPolytope {
 public:
  // throws std::invalid_argument on an empty or ragged point list
  static RationalPolytope from_points(std::vector<RatVec> points);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& generating_points() const { return points_; }
  // least D >= 1 with D * P integral (lcm of coordinate denominators)
  const Int& denominator() const { return denominator_; }
  const AffineLatticeData& affine_lattice() const { return affine_; }

  bool operator==(const RationalPolytope& o) const { return points_ == o.points_; }

 private:
  RationalPolytope() = default;

  std::vector<RatVec> points_;
  std::size_t dim_ = 0;
  Int denominator_ = 1;
  AffineLatticeData affine_;
};

RationalPolytope make_polytope(std::vector<RatVec> points);

// factor >= 0 (dilating by 0 collapses to the origin)
RationalPolytope dilate(const RationalPolytope& p, const Rat& factor);
RationalPolytope dilate(const RationalPolytope& p, const Int& factor);

RationalPolytope translate(const RationalPolytope& p, const RatVec& t);

// exact (min, max) of c^T x over p; c must be nonzero of length dim
std::pair<Rat, Rat> support(const RationalPolytope& p, const IntVec& c);

// exact membership via an LP over the vertex weights
bool contains(const RationalPolytope& p, const RatVec& x);

}  // namespace aw
