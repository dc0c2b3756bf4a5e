#pragma once

/* Exact lattice-point enumeration.  The candidate bound is checked against
 * the bounding box before any work; enumeration itself recurses axis by
 * axis through the exact projection interval of each prefix slice, so it
 * never visits a prefix that cannot be completed to a point of P. */

#include "aw/polytope.hpp"

#include <stdexcept>
#include <vector>

namespace aw {

// per-axis integer bounds; lo > hi on some axis means no candidates at all
struct Box {
  IntVec lo;
  IntVec hi;
};

Box bounding_box(const RationalPolytope& p);

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(Int estimate, Int cap);
  const Int& estimate() const { return estimate_; }
  const Int& cap() const { return cap_; }

 private:
  Int estimate_;
  Int cap_;
};

struct EnumerationLimits {
  // bounding-box candidate product tolerated before failing fast
  Int max_candidates = Int(100000000);
};

// all points of p intersected with Z^d, in lexicographic order
std::vector<IntVec> enumerate_lattice_points(const RationalPolytope& p,
                                             const EnumerationLimits& limits = {});

Int count_lattice_points(const RationalPolytope& p,
                         const EnumerationLimits& limits = {});

}  // namespace aw
