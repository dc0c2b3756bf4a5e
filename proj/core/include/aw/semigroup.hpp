#pragma once

/* Numerical semigroups: factorizations of an element over the generators,
 * the length set, and the factorization polytope conv{e_i / g_i} whose
 * n-th dilate has the factorizations of n as its lattice points. */

#include "aw/numbers.hpp"
#include "aw/polytope.hpp"

#include <vector>

namespace aw {

struct NumericalSemigroup {
  std::vector<Int> generators;  // distinct, positive, sorted ascending
  Int gcd = 1;
};

// validates and sorts the generator list; throws std::invalid_argument on
// an empty list, nonpositive entries, or duplicates
NumericalSemigroup make_semigroup(std::vector<Int> generators);

// conv{e_i / g_i} in R^k, k = number of generators
RationalPolytope semigroup_polytope(const NumericalSemigroup& s);

// all x >= 0 integer with sum x_i g_i == n, in lexicographic order; n >= 0
std::vector<IntVec> factorizations(const NumericalSemigroup& s, const Int& n);

// sorted distinct factorization lengths sum x_i
std::vector<Int> length_set(const NumericalSemigroup& s, const Int& n);

}  // namespace aw
