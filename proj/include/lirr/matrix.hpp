#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lirr/rational.hpp"

namespace lirr {

// Small dense exact linear algebra: rational elimination for solving and
// nullspaces, and integer row reduction (Hermite normal form) for lattice
// work. Everything here is desk-scale.

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;
using ZMatrix = std::vector<std::vector<Int>>;
using ZVector = std::vector<Int>;

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_echelon(QMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(QMatrix a) { return row_echelon(a).size(); }

// Any solution of A x = b; nullopt when inconsistent. Free variables are
// set to zero, so the solution is unique exactly when A has full column
// rank.
inline std::optional<QVector> solve_linear(const QMatrix& a, const QVector& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  QMatrix aug(rows, QVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = row_echelon(aug);
  for (auto c : pivots)
    if (c == cols) return std::nullopt;
  QVector x(cols, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

// Basis of {x : A x = 0}.
inline std::vector<QVector> nullspace(QMatrix a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  auto pivots = row_echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (pivots[k] < cols) v[pivots[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Int gcd_int(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline ZVector primitive(ZVector v) {
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// Row-style Hermite normal form via unimodular row operations: echelon with
// positive pivots and entries above each pivot reduced mod the pivot. Zero
// rows are dropped. If `transform` is non-null it must come in as an
// identity-compatible square matrix (same row count as m) and receives the
// same row operations, so that transform_out * m_in = hnf rows padded with
// the zero-row combinations.
inline ZMatrix hermite_normal_form(ZMatrix m, ZMatrix* transform = nullptr) {
  if (m.empty()) return m;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  auto row_sub = [&](std::size_t i, const Int& q, std::size_t k) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[k][j];
    if (transform)
      for (std::size_t j = 0; j < (*transform)[i].size(); ++j)
        (*transform)[i][j] -= q * (*transform)[k][j];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(m[i], m[k]);
    if (transform) std::swap((*transform)[i], (*transform)[k]);
  };
  auto row_neg = [&](std::size_t i) {
    for (auto& x : m[i]) x = -x;
    if (transform)
      for (auto& x : (*transform)[i]) x = -x;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (best == rows || abs(m[i][c]) < abs(m[best][c]))) best = i;
      if (best == rows) break;
      row_swap(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        row_sub(i, floor_div(m[i][c], m[r][c]), r);
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r >= rows || m[r][c] == 0) continue;
    if (m[r][c] < 0) row_neg(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(m[i][c], m[r][c]);
      if (q != 0) row_sub(i, q, r);
    }
    ++r;
  }
  m.resize(r);
  return m;
}

// |det| of a square rational matrix.
inline Rational det_abs(QMatrix q) {
  if (q.empty()) return Rational(1);
  std::size_t n = q.size();
  Rational det(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && q[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != r) std::swap(q[r], q[p]);
    det *= q[r][c];
    Rational inv = Rational(1) / q[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      if (q[i][c] == 0) continue;
      Rational f = q[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) q[i][j] -= f * q[r][j];
    }
    ++r;
  }
  return det < 0 ? -det : det;
}

inline QMatrix to_q(const ZMatrix& m) {
  QMatrix q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& x : m[i]) q[i].push_back(Rational(x));
  return q;
}

// Basis of the integer kernel {x ∈ Z^n : M x = 0} of an integer matrix,
// via HNF-with-transform of M^T: the transform rows that map to zero span
// the kernel, and the basis is automatically saturated.
inline ZMatrix integer_kernel(const ZMatrix& m, std::size_t n) {
  if (m.empty()) {
    ZMatrix id(n, ZVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  std::size_t k = m.size();
  ZMatrix mt(n, ZVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) mt[j][i] = m[i][j];
  ZMatrix w(n, ZVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  ZMatrix h = hermite_normal_form(std::move(mt), &w);
  // Rows r >= rank of w satisfy w[r] * m^T = 0, i.e. m * w[r]^T = 0.
  ZMatrix kernel;
  for (std::size_t r = h.size(); r < n; ++r) kernel.push_back(w[r]);
  return hermite_normal_form(std::move(kernel));
}

// Basis of the saturation span_Q(rows) ∩ Z^n: the integer kernel of the
// rational orthogonal complement.
inline ZMatrix saturate_lattice(const QMatrix& rows) {
  if (rows.empty()) return {};
  std::size_t n = rows[0].size();
  auto comp = nullspace(rows);
  ZMatrix m;
  for (const auto& v : comp) {
    Int l = 1;
    for (const auto& q : v) l = l / gcd_int(l, den(q)) * den(q);
    ZVector zv(n);
    for (std::size_t j = 0; j < n; ++j) zv[j] = num(v[j]) * (l / den(v[j]));
    m.push_back(primitive(std::move(zv)));
  }
  if (m.empty()) {
    // Full row span: saturation is Z^n.
    return integer_kernel({}, n);
  }
  return integer_kernel(m, n);
}

// Inverse of a unimodular integer matrix (entries stay integral).
inline ZMatrix unimodular_inverse(const ZMatrix& u) {
  std::size_t n = u.size();
  QMatrix aug(n, QVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(u[i][j]);
    aug[i][n + i] = 1;
  }
  row_echelon(aug);
  ZMatrix inv(n, ZVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& q = aug[i][n + j];
      if (!is_integer(q)) throw std::logic_error("matrix not unimodular");
      inv[i][j] = num(q);
    }
  return inv;
}

// Given a saturated independent k x n row basis B, returns an n x n
// unimodular matrix whose first k rows equal B. Construction: column-reduce
// B by a unimodular V (via HNF of B^T with transform) so that B V = [T | 0];
// saturation makes T unimodular, and then [B ; tail rows of V^{-1}] has
// determinant det(T) * det(V^{-1}) = ±1.
inline ZMatrix unimodular_extension(const ZMatrix& b, std::size_t n) {
  std::size_t k = b.size();
  if (k == 0) {
    ZMatrix id(n, ZVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  if (k > n) throw std::logic_error("unimodular_extension: too many rows");
  // transpose
  ZMatrix bt(n, ZVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) bt[j][i] = b[i][j];
  ZMatrix w(n, ZVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  ZMatrix h = hermite_normal_form(std::move(bt), &w);  // h = w * b^T, h has k rows
  if (h.size() != k) throw std::logic_error("unimodular_extension: rows not independent");
  // b * w^T = h^T = [T | 0] with T = h^T's leading k x k block; w^T = V.
  ZMatrix u = unimodular_inverse([&] {
    ZMatrix v(n, ZVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i][j] = w[j][i];
    return v;
  }());  // u = V^{-1}
  ZMatrix out = b;
  for (std::size_t i = k; i < n; ++i) out.push_back(u[i]);
  if (det_abs(to_q(out)) != 1)
    throw std::logic_error("unimodular_extension: input rows not saturated");
  return out;
}

}  // namespace lirr
