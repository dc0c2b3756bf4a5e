#pragma once

/* Exact scalar types and the few conversions the rest of the library leans on.
 * Int/Rat are GMP types; every Rat in the library is kept canonical
 * (reduced, positive denominator), which the parsing helpers enforce. */

#include <gmpxx.h>

#include <string>
#include <vector>

namespace aw {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMat = std::vector<IntVec>;  // row-major, possibly empty (zero rows)

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

Int lcm_int(const Int& a, const Int& b);

// num/den reduced to canonical form; throws std::invalid_argument on den == 0
Rat make_rat(const Int& num, const Int& den);

// canonical "p/q", or "p" when the denominator is 1
std::string rat_to_string(const Rat& q);

// accepts "p" and "p/q" (optional '-' on either part, no whitespace);
// throws std::invalid_argument on anything else or on q == 0
Rat rat_from_string(const std::string& s);
Int int_from_string(const std::string& s);

RatVec to_rat_vec(const IntVec& v);

Rat dot(const IntVec& c, const RatVec& x);
Int dot(const IntVec& c, const IntVec& z);

}  // namespace aw
