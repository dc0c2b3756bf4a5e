#pragma once

/* Width minimization over integer directions.  Arithmetic width is
 * minimized exactly over a finite test set built from kernels of lattice
 * point differences; lattice width is minimized by bounded enumeration
 * (an a-priori finite certificate for it is not available here). */

#include "aw/arithmetic_range.hpp"
#include "aw/lattice_points.hpp"
#include "aw/polytope.hpp"

#include <string>
#include <vector>

namespace aw {

enum class WidthMethod {
  TestSet,             // exact minimum via the difference-kernel test set
  Convention,          // <= 1 lattice point: value forced, minimizer by convention
  BoundedEnumeration,  // minimum over primitive directions with max-norm <= bound
};

struct WidthResult {
  Rat value;  // integral for arithmetic width
  std::vector<IntVec> minimizers;  // canonical directions, sorted
  WidthMethod method = WidthMethod::TestSet;
};

// finite set of canonical directions guaranteed to contain a minimizer of
// arithmetic width; requires >= 2 lattice points
std::vector<IntVec> test_directions(const RationalPolytope& p,
                                    const EnumerationLimits& limits = {});

// exact min of |values of c on lattice points| over all nonzero integer c;
// 0/1-point polytopes report value 0/1 with the first unit vector
WidthResult arithmetic_width(const RationalPolytope& p,
                             const EnumerationLimits& limits = {});

// min of the support width over primitive |c|_inf <= bound; bound >= 1
WidthResult lattice_width_bounded(const RationalPolytope& p, const Int& bound);

enum class MinimizerRelation { Equal, Overlapping, Disjoint };

struct DivergenceReport {
  WidthResult arithmetic;
  WidthResult lattice;
  MinimizerRelation relation = MinimizerRelation::Equal;
  std::vector<std::string> notes;
};

DivergenceReport divergence_report(const RationalPolytope& p, const Int& bound,
                                   const EnumerationLimits& limits = {});

}  // namespace aw
