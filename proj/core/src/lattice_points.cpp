#include "aw/lattice_points.hpp"

#include "aw/simplex.hpp"

#include <string>

namespace aw {

CapExceeded::CapExceeded(Int estimate, Int cap)
    : std::runtime_error("lattice point candidate estimate " + estimate.get_str() +
                         " exceeds cap " + cap.get_str()),
      estimate_(std::move(estimate)),
      cap_(std::move(cap)) {}

Box bounding_box(const RationalPolytope& p) {
  const std::size_t d = p.dim();
  Box box{IntVec(d), IntVec(d)};
  for (std::size_t j = 0; j < d; ++j) {
    Rat lo, hi;
    bool first = true;
    for (const RatVec& v : p.generating_points()) {
      if (first) {
        lo = hi = v[j];
        first = false;
      } else {
        if (v[j] < lo) lo = v[j];
        if (v[j] > hi) hi = v[j];
      }
    }
    box.lo[j] = ceil_rat(lo);
    box.hi[j] = floor_rat(hi);
  }
  return box;
}

namespace {

// exact [min, max] of coordinate `axis` over the slice of p with the first
// `axis` coordinates pinned to `prefix`, as an LP over the vertex weights
std::pair<Rat, Rat> slice_interval(const RationalPolytope& p,
                                   const IntVec& prefix, std::size_t axis) {
  const std::vector<RatVec>& pts = p.generating_points();
  const std::size_t k = pts.size();
  std::vector<RatVec> a(axis + 1, RatVec(k));
  RatVec b(axis + 1);
  for (std::size_t j = 0; j < axis; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = pts[i][j];
    b[j] = prefix[j];
  }
  for (std::size_t i = 0; i < k; ++i) a[axis][i] = 1;
  b[axis] = 1;
  RatVec obj(k);
  for (std::size_t i = 0; i < k; ++i) obj[i] = pts[i][axis];

  const LpOutcome lo = lp_optimize(a, b, obj, /*maximize=*/false);
  const LpOutcome hi = lp_optimize(a, b, obj, /*maximize=*/true);
  if (lo.status != LpStatus::Optimal || hi.status != LpStatus::Optimal)
    throw std::logic_error("slice_interval: slice unexpectedly infeasible");
  return {lo.value, hi.value};
}

void enumerate_rec(const RationalPolytope& p, IntVec& prefix, std::size_t axis,
                   std::vector<IntVec>& out) {
  const std::size_t d = p.dim();
  Int zlo, zhi;
  if (axis == 0) {
    // no prefix yet: the projection interval is the axis-0 vertex range
    Rat lo, hi;
    bool first = true;
    for (const RatVec& v : p.generating_points()) {
      if (first) {
        lo = hi = v[0];
        first = false;
      } else {
        if (v[0] < lo) lo = v[0];
        if (v[0] > hi) hi = v[0];
      }
    }
    zlo = ceil_rat(lo);
    zhi = floor_rat(hi);
  } else {
    const auto [lo, hi] = slice_interval(p, prefix, axis);
    zlo = ceil_rat(lo);
    zhi = floor_rat(hi);
  }
  // every z in [zlo, zhi] yields a nonempty subslice (convexity), and at the
  // last axis the completed prefix is itself a point of p
  for (Int z = zlo; z <= zhi; ++z) {
    prefix[axis] = z;
    if (axis + 1 == d)
      out.push_back(prefix);
    else
      enumerate_rec(p, prefix, axis + 1, out);
  }
}

}  // namespace

std::vector<IntVec> enumerate_lattice_points(const RationalPolytope& p,
                                             const EnumerationLimits& limits) {
  const Box box = bounding_box(p);
  Int candidates = 1;
  for (std::size_t j = 0; j < p.dim(); ++j) {
    const Int width = box.hi[j] - box.lo[j] + 1;
    if (width <= 0) return {};
    candidates *= width;
  }
  if (candidates > limits.max_candidates)
    throw CapExceeded(candidates, limits.max_candidates);

  std::vector<IntVec> out;
  IntVec prefix(p.dim());
  enumerate_rec(p, prefix, 0, out);
  return out;  // lex order by construction
}

Int count_lattice_points(const RationalPolytope& p, const EnumerationLimits& limits) {
  return Int(enumerate_lattice_points(p, limits).size());
}

}  // namespace aw
