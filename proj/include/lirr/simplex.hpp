#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lirr/matrix.hpp"
#include "lirr/trace.hpp"

namespace lirr {

// Exact rational phase-1 simplex. The one entry point decides feasibility
// of {x >= 0 : A x = b} and produces a witness. Bland's rule everywhere, so
// termination is unconditional; no floating point, no scaling.
inline std::optional<QVector> lp_feasible_point(QMatrix a, QVector b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (m == 0) return QVector(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }
  // Tableau columns: x_0..x_{n-1}, artificial_0..artificial_{m-1}, rhs.
  const std::size_t cols = n + m + 1;
  QMatrix t(m + 1, QVector(cols, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = b[i];
    basis[i] = n + i;
  }
  // Objective: minimize sum of artificials; expressed over nonbasic vars.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) t[m][j] -= a[i][j];
  for (std::size_t i = 0; i < m; ++i) t[m][cols - 1] -= b[i];

  auto pivot = [&](std::size_t pr, std::size_t pc) {
    Rational inv = Rational(1) / t[pr][pc];
    for (auto& v : t[pr]) v *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == pr || t[i][pc] == 0) continue;
      Rational f = t[i][pc];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[pr][j];
    }
    basis[pr] = pc;
  };

  for (;;) {
    // Bland: smallest-index column with negative reduced cost.
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols - 1) break;  // optimal
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == m) {
        leave = i;
        continue;
      }
      Rational cur = t[i][cols - 1] / t[i][enter];
      Rational best = t[leave][cols - 1] / t[leave][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) break;  // unbounded below cannot happen in phase 1
    pivot(leave, enter);
  }
  if (t[m][cols - 1] != 0) return std::nullopt;  // optimum > 0: infeasible
  QVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
  return x;
}

// Feasibility of the inequality system {y free : A y >= b} via the standard
// split y = u - v with slacks: A u - A v - s = b, everything nonnegative.
// Returns a satisfying y when one exists.
inline std::optional<QVector> lp_feasible_ineq(const QMatrix& a, const QVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  if (m == 0) return QVector(n, Rational(0));
  QMatrix eq(m, QVector(2 * n + m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      eq[i][j] = a[i][j];
      eq[i][n + j] = -a[i][j];
    }
    eq[i][2 * n + i] = -1;
  }
  auto sol = lp_feasible_point(std::move(eq), b);
  if (!sol) return std::nullopt;
  QVector y(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = (*sol)[j] - (*sol)[n + j];
  return y;
}

}  // namespace lirr
