#pragma once

// Test-only oracles, independent of the library's main computation paths:
// dense Macaulay-matrix ideal membership, a standalone Fourier-Motzkin
// feasibility check for linear real arithmetic, branch-and-bound integer
// feasibility on top of it, and small random generators with fixed seeds.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "lirr/lirr.hpp"

namespace oracles {

using lirr::Int;
using lirr::Monomial;
using lirr::Polynomial;
using lirr::QMatrix;
using lirr::QVector;
using lirr::Rational;
using lirr::VarId;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int lo = -5, int hi = 5, int max_den = 3) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Monomial random_monomial(Rng& rng, const std::vector<VarId>& vars, int max_deg) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  int deg = deg_dist(rng);
  Monomial m;
  std::uniform_int_distribution<std::size_t> pick(0, vars.empty() ? 0 : vars.size() - 1);
  for (int i = 0; i < deg && !vars.empty(); ++i) m = m * Monomial::var(vars[pick(rng)]);
  return m;
}

inline Polynomial random_poly(Rng& rng, const std::vector<VarId>& vars, int max_deg,
                              int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  Polynomial p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(random_monomial(rng, vars, max_deg), random_rational(rng));
  return p;
}

inline Polynomial random_nonzero_poly(Rng& rng, const std::vector<VarId>& vars, int max_deg,
                                      int max_terms) {
  for (;;) {
    Polynomial p = random_poly(rng, vars, max_deg, max_terms);
    if (!p.is_zero()) return p;
  }
}

// ---- Macaulay-matrix ideal membership at a degree bound ----
// p ∈ <G> with witness cofactors of degree <= bound - deg(g): solve the
// dense linear system over all monomials of degree <= bound.
inline std::vector<Monomial> monomials_up_to(const std::vector<VarId>& vars, int bound) {
  std::vector<Monomial> out = {Monomial()};
  for (auto v : vars) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      Monomial cur = m;
      next.push_back(cur);
      for (int e = 1; e <= bound - static_cast<int>(m.degree()); ++e) {
        cur = cur * Monomial::var(v);
        next.push_back(cur);
      }
    }
    out = std::move(next);
  }
  std::vector<Monomial> filtered;
  for (const auto& m : out)
    if (static_cast<int>(m.degree()) <= bound) filtered.push_back(m);
  std::sort(filtered.begin(), filtered.end());
  filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
  return filtered;
}

inline bool macaulay_member(const Polynomial& p, const std::vector<Polynomial>& gens,
                            const std::vector<VarId>& vars, int degree_bound) {
  // Columns: m * g for every generator g and monomial m with deg(m g) <= bound.
  std::vector<Polynomial> cols;
  auto ms = monomials_up_to(vars, degree_bound);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = static_cast<int>(g.total_degree());
    for (const auto& m : ms)
      if (static_cast<int>(m.degree()) + dg <= degree_bound) cols.push_back(g.mul_term(Rational(1), m));
  }
  std::set<Monomial> rows_set;
  for (const auto& c : cols)
    for (const auto& [m, k] : c.terms()) rows_set.insert(m);
  for (const auto& [m, k] : p.terms()) rows_set.insert(m);
  std::vector<Monomial> rows(rows_set.begin(), rows_set.end());
  QMatrix a(rows.size(), QVector(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = cols[j].coefficient(rows[i]);
  QVector b(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) b[i] = p.coefficient(rows[i]);
  return lirr::solve_linear(a, b).has_value();
}

// ---- standalone LRA feasibility via Fourier-Motzkin ----
// Constraints: rows (a, beta) meaning a·x + beta >= 0, plus strict flags.
struct LinIneq {
  QVector a;
  Rational beta;
  bool strict = false;
};

inline bool fm_feasible(std::vector<LinIneq> sys, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    std::vector<LinIneq> zero, pos, neg;
    for (auto& c : sys) {
      if (c.a[v] == 0) {
        zero.push_back(c);
      } else if (c.a[v] > 0) {
        Rational s = c.a[v];
        for (auto& x : c.a) x /= s;
        c.beta /= s;
        pos.push_back(c);
      } else {
        Rational s = -c.a[v];
        for (auto& x : c.a) x /= s;
        c.beta /= s;
        neg.push_back(c);
      }
    }
    sys = std::move(zero);
    for (const auto& p : pos)
      for (const auto& n : neg) {
        LinIneq c;
        c.a.resize(nvars, Rational(0));
        for (std::size_t i = 0; i < nvars; ++i) c.a[i] = p.a[i] + n.a[i];
        c.beta = p.beta + n.beta;
        c.strict = p.strict || n.strict;
        sys.push_back(std::move(c));
      }
  }
  for (const auto& c : sys) {
    if (c.strict ? !(c.beta > 0) : !(c.beta >= 0)) return false;
  }
  return true;
}

// A rational solution of a feasible system, found coordinate by coordinate
// (bisection between FM-implied bounds is unnecessary: substitute and
// recurse).
inline std::optional<QVector> fm_solve(std::vector<LinIneq> sys, std::size_t nvars) {
  if (!fm_feasible(sys, nvars)) return std::nullopt;
  QVector point(nvars, Rational(0));
  for (std::size_t v = 0; v < nvars; ++v) {
    // Bounds on x_v after eliminating all later variables.
    std::vector<LinIneq> rest = sys;
    // Substitute already fixed variables.
    for (auto& c : rest) {
      for (std::size_t u = 0; u < v; ++u) {
        c.beta += c.a[u] * point[u];
        c.a[u] = 0;
      }
    }
    // Eliminate variables after v to get bounds on x_v alone.
    std::vector<LinIneq> proj = rest;
    for (std::size_t u = v + 1; u < nvars; ++u) {
      std::vector<LinIneq> zero, pos, neg;
      for (auto& c : proj) {
        if (c.a[u] == 0) {
          zero.push_back(c);
        } else if (c.a[u] > 0) {
          Rational s = c.a[u];
          for (auto& x : c.a) x /= s;
          c.beta /= s;
          pos.push_back(c);
        } else {
          Rational s = -c.a[u];
          for (auto& x : c.a) x /= s;
          c.beta /= s;
          neg.push_back(c);
        }
      }
      proj = std::move(zero);
      for (const auto& p : pos)
        for (const auto& n : neg) {
          LinIneq c;
          c.a.resize(nvars, Rational(0));
          for (std::size_t i = 0; i < nvars; ++i) c.a[i] = p.a[i] + n.a[i];
          c.beta = p.beta + n.beta;
          c.strict = p.strict || n.strict;
          proj.push_back(std::move(c));
        }
    }
    // proj constrains only x_v now: a_v x_v + beta >= 0.
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : proj) {
      if (c.a[v] == 0) continue;
      Rational bound = -c.beta / c.a[v];
      if (c.a[v] > 0) {
        if (!lo || bound > *lo || (bound == *lo && c.strict)) {
          lo = bound;
          lo_strict = c.strict;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && c.strict)) {
          hi = bound;
          hi_strict = c.strict;
        }
      }
    }
    Rational x(0);
    if (lo && hi) {
      x = (!lo_strict && *lo == *hi) ? *lo : (*lo + *hi) / 2;
    } else if (lo) {
      x = lo_strict ? *lo + 1 : *lo;
    } else if (hi) {
      x = hi_strict ? *hi - 1 : *hi;
    }
    point[v] = x;
    for (auto& c : sys) {
      c.beta += c.a[v] * x;
      c.a[v] = 0;
    }
  }
  return point;
}

// ---- bounded branch-and-bound integer feasibility (LIRA oracle) ----
inline bool bb_integer_feasible(const std::vector<LinIneq>& sys, std::size_t nvars, int depth = 64) {
  auto sol = fm_solve(sys, nvars);
  if (!sol) return false;
  std::size_t frac = nvars;
  for (std::size_t v = 0; v < nvars; ++v)
    if (!lirr::is_integer((*sol)[v])) {
      frac = v;
      break;
    }
  if (frac == nvars) return true;
  if (depth == 0) throw std::logic_error("bb oracle: depth exhausted");
  Int fl = lirr::floor_rat((*sol)[frac]);
  {
    std::vector<LinIneq> below = sys;  // x_frac <= floor
    LinIneq c;
    c.a.resize(nvars, Rational(0));
    c.a[frac] = -1;
    c.beta = Rational(fl);
    below.push_back(c);
    if (bb_integer_feasible(below, nvars, depth - 1)) return true;
  }
  {
    std::vector<LinIneq> above = sys;  // x_frac >= floor + 1
    LinIneq c;
    c.a.resize(nvars, Rational(0));
    c.a[frac] = 1;
    c.beta = Rational(-(fl + 1));
    above.push_back(c);
    return bb_integer_feasible(above, nvars, depth - 1);
  }
}

}  // namespace oracles
