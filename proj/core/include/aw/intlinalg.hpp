#pragma once

/* Integer linear algebra: gcd/primitive directions, row-style Hermite normal
 * form with a unimodular witness, integer kernels and a diophantine solver.
 * Everything is exact; matrices are small (ambient dimension <= a handful). */

#include "aw/numbers.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace aw {

// gcd of all entries, >= 0; gcd of the zero vector (or empty) is 0
Int gcd_vector(const IntVec& v);

// v == mu * c0 with gcd_vector(c0) == 1 and mu > 0; throws on the zero vector
std::pair<IntVec, Int> primitive(const IntVec& v);

// primitive vector with positive first nonzero entry: the canonical
// representative of {v, -v} up to positive scaling
IntVec canonical_direction(const IntVec& v);

IntMat identity_matrix(std::size_t n);

// cols is the row length of a (needed when a has no rows)
IntMat transpose(const IntMat& a, std::size_t cols);

IntMat mat_mul(const IntMat& a, const IntMat& b);

bool is_zero_vec(const IntVec& v);

struct HnfResult {
  IntMat h;  // row-style HNF: echelon, positive pivots, entries above a pivot
             // reduced into [0, pivot)
  IntMat u;  // unimodular with h == u * a
};

// throws std::invalid_argument on an empty or ragged matrix
HnfResult hermite_normal_form(const IntMat& a);

std::size_t rank_int(const IntMat& a, std::size_t cols);

// basis (possibly empty) of {x in Z^cols : a x = 0}; rows of the result are
// the basis vectors, and every integer solution is a Z-combination of them
IntMat integer_kernel(const IntMat& a, std::size_t cols);

// some x in Z^cols with a x = b, if one exists
std::optional<IntVec> solve_diophantine(const IntMat& a, const IntVec& b,
                                        std::size_t cols);

// Bareiss fraction-free elimination; a must be square
Int determinant(const IntMat& a);

}  // namespace aw
