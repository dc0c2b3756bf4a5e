#include "aw/simplex.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace aw {

namespace {

// Dense tableau over columns [structural | artificial | rhs].  basis[i] is
// the column whose variable is basic in row i; rhs stays >= 0 throughout.
struct Tableau {
  std::size_t m = 0;  // rows
  std::size_t n = 0;  // structural columns
  std::vector<RatVec> t;
  std::vector<std::size_t> basis;

  std::size_t cols() const { return n + m_art + 1; }
  std::size_t m_art = 0;  // artificial columns (fixed at construction)
};

void pivot(Tableau& tb, std::size_t pr, std::size_t pc) {
  RatVec& prow = tb.t[pr];
  const Rat piv = prow[pc];
  for (Rat& x : prow) x /= piv;
  for (std::size_t i = 0; i < tb.m; ++i) {
    if (i == pr) continue;
    const Rat f = tb.t[i][pc];
    if (f == 0) continue;
    for (std::size_t j = 0; j < tb.cols(); ++j) tb.t[i][j] -= f * prow[j];
  }
  tb.basis[pr] = pc;
}

// minimize cost^T x over the tableau; only columns with allowed[j] may enter
LpStatus run(Tableau& tb, const RatVec& cost, const std::vector<bool>& allowed) {
  const std::size_t total = tb.n + tb.m_art;
  std::vector<bool> in_basis(total, false);
  for (std::size_t bi : tb.basis) in_basis[bi] = true;
  for (;;) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total && enter == total; ++j) {
      if (!allowed[j] || in_basis[j]) continue;
      Rat reduced = cost[j];
      for (std::size_t i = 0; i < tb.m; ++i) {
        const Rat& cb = cost[tb.basis[i]];
        if (cb != 0 && tb.t[i][j] != 0) reduced -= cb * tb.t[i][j];
      }
      if (reduced < 0) enter = j;  // Bland: first improving index
    }
    if (enter == total) return LpStatus::Optimal;

    std::size_t leave = tb.m;
    Rat best_ratio;
    for (std::size_t i = 0; i < tb.m; ++i) {
      if (tb.t[i][enter] <= 0) continue;
      Rat ratio = tb.t[i].back() / tb.t[i][enter];
      if (leave == tb.m || ratio < best_ratio ||
          (ratio == best_ratio && tb.basis[i] < tb.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == tb.m) return LpStatus::Unbounded;

    in_basis[tb.basis[leave]] = false;
    in_basis[enter] = true;
    pivot(tb, leave, enter);
  }
}

Rat objective_value(const Tableau& tb, const RatVec& cost) {
  Rat v = 0;
  for (std::size_t i = 0; i < tb.m; ++i) {
    const Rat& cb = cost[tb.basis[i]];
    if (cb != 0) v += cb * tb.t[i].back();
  }
  return v;
}

// phase 1: returns the tableau with a structural-only feasible basis, or
// nullopt when the program is infeasible
std::optional<Tableau> phase_one(const std::vector<RatVec>& a, const RatVec& b,
                                 std::size_t n) {
  const std::size_t m = a.size();
  Tableau tb;
  tb.m = m;
  tb.n = n;
  tb.m_art = m;
  tb.t.assign(m, RatVec(n + m + 1, 0));
  tb.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("lp: ragged constraint matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tb.t[i][j] = flip ? Rat(-a[i][j]) : a[i][j];
    tb.t[i][n + i] = 1;
    tb.t[i].back() = flip ? Rat(-b[i]) : b[i];
    tb.basis[i] = n + i;
  }

  RatVec cost(n + m, 0);
  for (std::size_t j = n; j < n + m; ++j) cost[j] = 1;
  std::vector<bool> allowed(n + m, true);
  run(tb, cost, allowed);  // bounded below by 0, so always Optimal
  if (objective_value(tb, cost) != 0) return std::nullopt;

  // drive leftover zero-valued artificials out of the basis; rows that have
  // no structural pivot are redundant constraints and get dropped
  for (std::size_t i = tb.m; i-- > 0;) {
    if (tb.basis[i] < n) continue;
    std::size_t pc = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tb.t[i][j] != 0) {
        pc = j;
        break;
      }
    if (pc < n) {
      pivot(tb, i, pc);
    } else {
      tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tb.m;
    }
  }
  return tb;
}

}  // namespace

LpOutcome lp_optimize(const std::vector<RatVec>& a, const RatVec& b,
                      const RatVec& objective, bool maximize) {
  if (a.size() != b.size()) throw std::invalid_argument("lp: shape mismatch");
  const std::size_t n = objective.size();

  std::optional<Tableau> tb = phase_one(a, b, n);
  if (!tb) return {LpStatus::Infeasible, Rat(0)};

  RatVec cost(n + tb->m_art, 0);
  for (std::size_t j = 0; j < n; ++j) cost[j] = maximize ? Rat(-objective[j]) : objective[j];
  std::vector<bool> allowed(n + tb->m_art, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;

  const LpStatus st = run(*tb, cost, allowed);
  if (st == LpStatus::Unbounded) return {LpStatus::Unbounded, Rat(0)};
  Rat v = objective_value(*tb, cost);
  if (maximize) v = -v;
  return {LpStatus::Optimal, v};
}

bool lp_feasible(const std::vector<RatVec>& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lp: shape mismatch");
  const std::size_t n = a.empty() ? 0 : a[0].size();
  return phase_one(a, b, n).has_value();
}

}  // namespace aw
