#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "lirr/matrix.hpp"
#include "lirr/simplex.hpp"

namespace lirr {

// Hilbert basis of a pointed rational cone given by integer generators
// (rows). Strategy: cover the cone by simplicial subcones (Caratheodory:
// every full-rank subset of generators spans one), enumerate the integer
// points of each half-open fundamental parallelepiped, and minimalize the
// candidate set. Lower-dimensional cones are handled by restricting to the
// saturated lattice of their span.

namespace detail {

inline bool vec_in_cone(const ZVector& x, const ZMatrix& gens) {
  if (std::all_of(x.begin(), x.end(), [](const Int& v) { return v == 0; })) return true;
  if (gens.empty()) return false;
  std::size_t d = x.size();
  QMatrix a(d, QVector(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) a[i][j] = Rational(gens[j][i]);
  QVector b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = Rational(x[i]);
  return lp_feasible_point(std::move(a), std::move(b)).has_value();
}

// Integer points of {sum t_i g_i : t_i in [0,1)} for full-rank square G.
inline std::vector<ZVector> parallelepiped_points(const ZMatrix& g) {
  std::size_t d = g.size();
  ZMatrix h = hermite_normal_form(g);
  if (h.size() != d) throw std::logic_error("parallelepiped: generators not full rank");
  // Residue system of Z^d modulo the row lattice: 0 <= r_i < h_ii.
  QMatrix gt(d, QVector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gt[i][j] = Rational(g[j][i]);
  std::vector<ZVector> points;
  ZVector r(d, 0);
  for (;;) {
    QVector rhs(d);
    for (std::size_t i = 0; i < d; ++i) rhs[i] = Rational(r[i]);
    auto t = solve_linear(gt, rhs);
    if (!t) throw std::logic_error("parallelepiped: solve failed");
    ZVector p = r;
    for (std::size_t i = 0; i < d; ++i) {
      Int f = floor_rat((*t)[i]);
      if (f != 0)
        for (std::size_t j = 0; j < d; ++j) p[j] -= f * g[i][j];
    }
    if (std::any_of(p.begin(), p.end(), [](const Int& v) { return v != 0; }))
      points.push_back(std::move(p));
    // Advance the mixed-radix counter over 0 <= r_i < h_ii.
    std::size_t k = 0;
    for (; k < d; ++k) {
      r[k] += 1;
      if (r[k] < h[k][k]) break;
      r[k] = 0;
    }
    if (k == d) break;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

inline std::vector<ZVector> full_dim_hilbert(const ZMatrix& gens) {
  std::size_t d = gens[0].size();
  // Candidate set: primitive generators plus parallelepiped points of every
  // full-rank generator subset.
  std::set<ZVector> cand;
  for (const auto& g : gens) cand.insert(primitive(g));
  std::vector<std::size_t> idx(gens.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::size_t> subset;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (subset.size() == d) {
      ZMatrix sq;
      for (auto i : subset) sq.push_back(gens[i]);
      if (det_abs(to_q(sq)) == 0) return;
      for (auto& p : parallelepiped_points(sq)) cand.insert(std::move(p));
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);
  // Minimalize: x is irreducible iff no other candidate y has x - y in the
  // cone. Irreducible elements are always among the candidates, so testing
  // against candidates is complete.
  std::vector<ZVector> cands(cand.begin(), cand.end());
  std::vector<ZVector> basis;
  for (const auto& x : cands) {
    bool reducible = false;
    for (const auto& y : cands) {
      if (y == x) continue;
      ZVector diff(d);
      for (std::size_t i = 0; i < d; ++i) diff[i] = x[i] - y[i];
      if (std::all_of(diff.begin(), diff.end(), [](const Int& v) { return v == 0; })) continue;
      if (vec_in_cone(y, gens) && vec_in_cone(diff, gens)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  return basis;
}

}  // namespace detail

inline std::vector<ZVector> hilbert_basis(ZMatrix gens) {
  // Drop zero rows, make rows primitive.
  ZMatrix nz;
  for (auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](const Int& v) { return v == 0; })) continue;
    nz.push_back(primitive(std::move(g)));
  }
  std::sort(nz.begin(), nz.end());
  nz.erase(std::unique(nz.begin(), nz.end()), nz.end());
  if (nz.empty()) return {};
  std::size_t d = nz[0].size();
  // Pointedness check: no generator's negation may lie in the cone.
  for (const auto& g : nz) {
    ZVector neg(d);
    for (std::size_t i = 0; i < d; ++i) neg[i] = -g[i];
    if (detail::vec_in_cone(neg, nz)) throw std::logic_error("hilbert_basis: cone not pointed");
  }
  // Restrict to the saturated lattice of the span when not full-dimensional.
  QMatrix qrows = to_q(nz);
  if (rank(qrows) < d) {
    ZMatrix sat = saturate_lattice(qrows);
    std::size_t r = sat.size();
    QMatrix sat_t(d, QVector(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < d; ++j) sat_t[j][i] = Rational(sat[i][j]);
    ZMatrix reduced;
    for (const auto& g : nz) {
      QVector rhs(d);
      for (std::size_t j = 0; j < d; ++j) rhs[j] = Rational(g[j]);
      auto coords = solve_linear(sat_t, rhs);
      if (!coords) throw std::logic_error("hilbert_basis: generator outside span");
      ZVector zc(r);
      for (std::size_t i = 0; i < r; ++i) {
        if (!is_integer((*coords)[i]))
          throw std::logic_error("hilbert_basis: saturation coordinates not integral");
        zc[i] = num((*coords)[i]);
      }
      reduced.push_back(std::move(zc));
    }
    auto hb = hilbert_basis(std::move(reduced));
    std::vector<ZVector> out;
    for (const auto& h : hb) {
      ZVector v(d, 0);
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) v[j] += h[i] * sat[i][j];
      out.push_back(std::move(v));
    }
    return out;
  }
  return detail::full_dim_hilbert(nz);
}

}  // namespace lirr
