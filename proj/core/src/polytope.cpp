#include "aw/polytope.hpp"

#include "aw/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace aw {

namespace {

// lattice data of the affine hull: kernel/saturation of the scaled
// difference matrix, plus one integer solution of the normal equations
AffineLatticeData compute_affine(const std::vector<RatVec>& pts, std::size_t d) {
  AffineLatticeData data;
  const RatVec& v0 = pts[0];

  IntMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec w(d);
    Int den = 1;
    for (std::size_t j = 0; j < d; ++j) {
      w[j] = pts[i][j] - v0[j];
      den = lcm_int(den, w[j].get_den());
    }
    IntVec row(d);
    bool zero = true;
    for (std::size_t j = 0; j < d; ++j) {
      Rat scaled = w[j] * den;
      row[j] = scaled.get_num();  // den 1 after scaling
      if (row[j] != 0) zero = false;
    }
    if (!zero) diffs.push_back(std::move(row));
  }

  // normals annihilate the direction space; their kernel is its saturation
  const IntMat normals = integer_kernel(diffs, d);
  IntMat basis = integer_kernel(normals, d);
  data.affine_dim = basis.size();

  if (normals.empty()) {
    data.has_lattice_point = true;
    data.base_point.assign(d, 0);
    data.lattice_basis = std::move(basis);
    return data;
  }

  IntVec rhs;
  rhs.reserve(normals.size());
  for (const IntVec& nrm : normals) {
    const Rat r = dot(nrm, v0);
    if (r.get_den() != 1) return data;  // aff(P) misses Z^d
    rhs.push_back(r.get_num());
  }
  auto z = solve_diophantine(normals, rhs, d);
  if (!z) return data;
  data.has_lattice_point = true;
  data.base_point = std::move(*z);
  data.lattice_basis = std::move(basis);
  return data;
}

}  // namespace

RationalPolytope RationalPolytope::from_points(std::vector<RatVec> points) {
  if (points.empty())
    throw std::invalid_argument("make_polytope: empty point list");
  const std::size_t d = points[0].size();
  if (d == 0) throw std::invalid_argument("make_polytope: zero-dimensional points");
  for (const RatVec& p : points)
    if (p.size() != d)
      throw std::invalid_argument("make_polytope: ragged point list");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  RationalPolytope poly;
  poly.dim_ = d;
  for (const RatVec& p : points)
    for (const Rat& q : p) poly.denominator_ = lcm_int(poly.denominator_, q.get_den());
  poly.affine_ = compute_affine(points, d);
  poly.points_ = std::move(points);
  return poly;
}

RationalPolytope make_polytope(std::vector<RatVec> points) {
  return RationalPolytope::from_points(std::move(points));
}

RationalPolytope dilate(const RationalPolytope& p, const Rat& factor) {
  if (factor < 0) throw std::invalid_argument("dilate: negative factor");
  std::vector<RatVec> pts = p.generating_points();
  for (RatVec& v : pts)
    for (Rat& q : v) q *= factor;
  return RationalPolytope::from_points(std::move(pts));
}

RationalPolytope dilate(const RationalPolytope& p, const Int& factor) {
  return dilate(p, Rat(factor));
}

RationalPolytope translate(const RationalPolytope& p, const RatVec& t) {
  if (t.size() != p.dim()) throw std::invalid_argument("translate: length mismatch");
  std::vector<RatVec> pts = p.generating_points();
  for (RatVec& v : pts)
    for (std::size_t j = 0; j < t.size(); ++j) v[j] += t[j];
  return RationalPolytope::from_points(std::move(pts));
}

std::pair<Rat, Rat> support(const RationalPolytope& p, const IntVec& c) {
  if (c.size() != p.dim()) throw std::invalid_argument("support: length mismatch");
  bool zero = true;
  for (const Int& e : c)
    if (e != 0) zero = false;
  if (zero) throw std::invalid_argument("support: zero direction");

  // the hull's support values are attained on the generating points
  Rat lo, hi;
  bool first = true;
  for (const RatVec& v : p.generating_points()) {
    const Rat val = dot(c, v);
    if (first) {
      lo = hi = val;
      first = false;
    } else {
      if (val < lo) lo = val;
      if (val > hi) hi = val;
    }
  }
  return {lo, hi};
}

bool contains(const RationalPolytope& p, const RatVec& x) {
  if (x.size() != p.dim()) throw std::invalid_argument("contains: length mismatch");
  const std::vector<RatVec>& pts = p.generating_points();
  const std::size_t k = pts.size();
  const std::size_t d = p.dim();
  // weights lambda >= 0 with sum 1 and sum lambda_i v_i = x
  std::vector<RatVec> a(d + 1, RatVec(k));
  RatVec b(d + 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = pts[i][j];
    b[j] = x[j];
  }
  for (std::size_t i = 0; i < k; ++i) a[d][i] = 1;
  b[d] = 1;
  return lp_feasible(a, b);
}

}  // namespace aw
