#include "aw/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace aw {

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int lcm_int(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

namespace {

// strict integer literal: optional '-', then one or more digits
bool is_int_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const std::size_t slash = s.find('/');
  const std::string num = s.substr(0, slash);
  if (!is_int_literal(num))
    throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  Rat q;
  if (slash == std::string::npos) {
    q = Rat(Int(num, 10));
  } else {
    const std::string den = s.substr(slash + 1);
    if (!is_int_literal(den))
      throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    q = make_rat(Int(num, 10), Int(den, 10));
  }
  return q;
}

Int int_from_string(const std::string& s) {
  if (!is_int_literal(s))
    throw std::invalid_argument("int_from_string: bad integer '" + s + "'");
  return Int(s, 10);
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& z : v) r.emplace_back(z);
  return r;
}

Rat dot(const IntVec& c, const RatVec& x) {
  if (c.size() != x.size()) throw std::invalid_argument("dot: length mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += x[i] * c[i];
  return acc;
}

Int dot(const IntVec& c, const IntVec& z) {
  if (c.size() != z.size()) throw std::invalid_argument("dot: length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * z[i];
  return acc;
}

}  // namespace aw
