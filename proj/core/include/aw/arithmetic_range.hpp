#pragma once

/* Arithmetic range of a polytope along an integer direction: the set of
 * functional values on lattice points, its width, its lattice step size,
 * and its almost-arithmetic-progression structure (a progression of step
 * lambda with gaps confined to within distance t of the left end and
 * distance t' of the right end). */

#include "aw/lattice_points.hpp"
#include "aw/polytope.hpp"

#include <vector>

namespace aw {

struct ArithmeticRange {
  IntVec direction;     // canonical primitive representative
  std::vector<Int> values;  // sorted, distinct; empty iff P has no lattice points
};

struct AlmostAp {
  Int m = 0;     // least value
  Int max = 0;   // greatest value
  Int step = 1;  // gcd of differences to m (1 for singletons)
  std::vector<Int> gaps_left;   // missing progression values in the left half
  std::vector<Int> gaps_right;  // ... right half (split at the midpoint, ties left)
  Int t = 0;        // bound: gaps_left lie within value distance t of m
  Int t_prime = 0;  // bound: gaps_right lie within value distance t' of max
};

struct StepSize {
  Int lambda = 1;
  // set when the functional is constant on the affine hull; lambda is then
  // reported as 1 and the range is a single value
  bool constant = false;
};

// values of c on the lattice points of p, under the canonical direction
ArithmeticRange arithmetic_range(const RationalPolytope& p, const IntVec& c,
                                 const EnumerationLimits& limits = {});

Int arithmetic_width_dir(const RationalPolytope& p, const IntVec& c,
                         const EnumerationLimits& limits = {});

// lattice step: the positive generator of c applied to the affine-hull
// lattice directions; requires aff(p) to contain a lattice point
StepSize step_size(const RationalPolytope& p, const IntVec& c);

// values must be strictly increasing and nonempty
AlmostAp decompose_almost_ap(const std::vector<Int>& values);
std::vector<Int> reconstruct_almost_ap(const AlmostAp& ap);

// width of the support interval of c over p (no lattice points involved)
Rat lattice_width_dir(const RationalPolytope& p, const IntVec& c);

// a direction on which all lattice points of p take distinct values, found
// on the moment curve (1, z, z^2, ...); requires at least one lattice point
IntVec separating_direction(const RationalPolytope& p,
                            const EnumerationLimits& limits = {});

}  // namespace aw
