#include "aw/semigroup.hpp"

#include "aw/intlinalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aw {

NumericalSemigroup make_semigroup(std::vector<Int> generators) {
  if (generators.empty())
    throw std::invalid_argument("make_semigroup: no generators");
  std::set<Int> seen;
  for (const Int& g : generators) {
    if (g < 1) throw std::invalid_argument("make_semigroup: nonpositive generator");
    if (!seen.insert(g).second)
      throw std::invalid_argument("make_semigroup: duplicate generator");
  }
  std::sort(generators.begin(), generators.end());
  NumericalSemigroup s;
  s.gcd = gcd_vector(generators);
  s.generators = std::move(generators);
  return s;
}

RationalPolytope semigroup_polytope(const NumericalSemigroup& s) {
  const std::size_t k = s.generators.size();
  std::vector<RatVec> pts;
  pts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    RatVec v(k, Rat(0));
    v[i] = make_rat(Int(1), s.generators[i]);
    pts.push_back(std::move(v));
  }
  return make_polytope(std::move(pts));
}

namespace {

void factorizations_rec(const std::vector<Int>& gens, std::size_t i,
                        const Int& remaining, IntVec& x,
                        std::vector<IntVec>& out) {
  if (i + 1 == gens.size()) {
    // last coordinate is forced: divisibility decides membership
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), remaining.get_mpz_t(),
                gens[i].get_mpz_t());
    if (r == 0) {
      x[i] = q;
      out.push_back(x);
    }
    return;
  }
  const Int top = remaining / gens[i];
  for (Int v = 0; v <= top; ++v) {
    x[i] = v;
    factorizations_rec(gens, i + 1, remaining - v * gens[i], x, out);
  }
}

}  // namespace

std::vector<IntVec> factorizations(const NumericalSemigroup& s, const Int& n) {
  if (n < 0) throw std::invalid_argument("factorizations: negative element");
  std::vector<IntVec> out;
  IntVec x(s.generators.size(), 0);
  factorizations_rec(s.generators, 0, n, x, out);
  return out;  // lex order: coordinates were swept in ascending order
}

std::vector<Int> length_set(const NumericalSemigroup& s, const Int& n) {
  std::set<Int> lengths;
  for (const IntVec& x : factorizations(s, n)) {
    Int sum = 0;
    for (const Int& e : x) sum += e;
    lengths.insert(std::move(sum));
  }
  return {lengths.begin(), lengths.end()};
}

}  // namespace aw
