#include "aw/intlinalg.hpp"

#include <stdexcept>

namespace aw {

Int gcd_vector(const IntVec& v) {
  Int g = 0;
  for (const Int& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  return g;
}

std::pair<IntVec, Int> primitive(const IntVec& v) {
  Int g = gcd_vector(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec c;
  c.reserve(v.size());
  for (const Int& e : v) c.push_back(e / g);  // exact by construction
  return {std::move(c), std::move(g)};
}

IntVec canonical_direction(const IntVec& v) {
  IntVec c = primitive(v).first;
  for (const Int& e : c) {
    if (e == 0) continue;
    if (e < 0)
      for (Int& x : c) x = -x;
    break;
  }
  return c;
}

IntMat identity_matrix(std::size_t n) {
  IntMat id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMat transpose(const IntMat& a, std::size_t cols) {
  IntMat t(cols, IntVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("transpose: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  const std::size_t inner = a[0].size();
  if (inner != b.size()) throw std::invalid_argument("mat_mul: shape mismatch");
  const std::size_t n = b.empty() ? 0 : b[0].size();
  IntMat r(a.size(), IntVec(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("mat_mul: ragged matrix");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

bool is_zero_vec(const IntVec& v) {
  for (const Int& e : v)
    if (e != 0) return false;
  return true;
}

namespace {

void row_submul(IntVec& target, const IntVec& src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

void row_negate(IntVec& v) {
  for (Int& e : v) e = -e;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& a) {
  const std::size_t m = a.size();
  if (m == 0) throw std::invalid_argument("hermite_normal_form: empty matrix");
  const std::size_t n = a[0].size();
  for (const IntVec& row : a)
    if (row.size() != n) throw std::invalid_argument("hermite_normal_form: ragged matrix");

  IntMat h = a;
  IntMat u = identity_matrix(m);
  std::size_t r = 0;  // next pivot row

  for (std::size_t col = 0; col < n && r < m; ++col) {
    // gcd-reduce the column below r until at most one nonzero remains on top
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h[i][col] == 0) continue;
        if (best == m ||
            mpz_cmpabs(h[i][col].get_mpz_t(), h[best][col].get_mpz_t()) < 0)
          best = i;
      }
      if (best == m) break;  // column is zero from r down
      if (best != r) {
        std::swap(h[r], h[best]);
        std::swap(u[r], u[best]);
      }
      bool reduced = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h[i][col] == 0) continue;
        const Int q = floor_div(h[i][col], h[r][col]);
        row_submul(h[i], h[r], q);
        row_submul(u[i], u[r], q);
        if (h[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (h[r][col] == 0) continue;  // no pivot in this column
    if (h[r][col] < 0) {
      row_negate(h[r]);
      row_negate(u[r]);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      const Int q = floor_div(h[i][col], h[r][col]);
      row_submul(h[i], h[r], q);
      row_submul(u[i], u[r], q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::size_t rank_int(const IntMat& a, std::size_t cols) {
  if (a.empty()) return 0;
  for (const IntVec& row : a)
    if (row.size() != cols) throw std::invalid_argument("rank_int: ragged matrix");
  HnfResult hnf = hermite_normal_form(a);
  std::size_t r = 0;
  for (const IntVec& row : hnf.h)
    if (!is_zero_vec(row)) ++r;
  return r;
}

IntMat integer_kernel(const IntMat& a, std::size_t cols) {
  if (a.empty()) return identity_matrix(cols);
  // HNF of the transpose: rows of u aligned with zero rows of h span the kernel
  HnfResult hnf = hermite_normal_form(transpose(a, cols));
  IntMat kernel;
  for (std::size_t i = 0; i < hnf.h.size(); ++i)
    if (is_zero_vec(hnf.h[i])) kernel.push_back(hnf.u[i]);
  return kernel;
}

std::optional<IntVec> solve_diophantine(const IntMat& a, const IntVec& b,
                                        std::size_t cols) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_diophantine: shape mismatch");
  if (a.empty()) return IntVec(cols, 0);
  // no unknowns: a x = b is solvable exactly when b vanishes
  if (cols == 0) return is_zero_vec(b) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  // x = u^T w where w solves (triangular) h^T w = b for h = hnf(a^T)
  HnfResult hnf = hermite_normal_form(transpose(a, cols));
  const std::size_t rows = hnf.h.size();  // == cols
  IntVec residual = b;
  IntVec w(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t piv = a.size();
    for (std::size_t j = 0; j < a.size(); ++j)
      if (hnf.h[i][j] != 0) {
        piv = j;
        break;
      }
    if (piv == a.size()) break;  // zero rows are last
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[piv].get_mpz_t(),
                hnf.h[i][piv].get_mpz_t());
    if (rem != 0) return std::nullopt;
    w[i] = q;
    row_submul(residual, hnf.h[i], q);
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  IntVec x(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (w[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) x[j] += w[i] * hnf.u[i][j];
  }
  return x;
}

Int determinant(const IntMat& a) {
  const std::size_t n = a.size();
  for (const IntVec& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  IntMat m = a;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign < 0 ? Int(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

}  // namespace aw
