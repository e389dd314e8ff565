#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lirr/hilbert.hpp"
#include "lirr/linear_cone.hpp"
#include "lirr/matrix.hpp"
#include "lirr/polynomial.hpp"
#include "lirr/trace.hpp"

namespace lirr {

// cutbar: cutting plane closure of a polyhedral cone of linear polynomials
// with respect to the lattice of integer combinations of the variables.
// cone(result) is the cone of valid inequalities of the integer hull of
// {y : p(y) >= 0 for all p in P}; the result always contains 1.
//
// Each round derives every Gomory-Chvatal cut whose minimum is attained at a
// vertex of the current (lineality-reduced) polyhedron, by rounding the
// Hilbert-basis directions of each vertex's tight-constraint cone. Rounding
// the primitive constraint rows themselves is kept as a cheap extra. Rounds
// iterate to a fixpoint; on rational polyhedra the iterated closure reaches
// the integer hull after finitely many rounds. When the polyhedron has no
// integer point the iteration collapses to an infeasible system, and -1 is
// returned among the generators.

namespace cutbar_detail {

struct Row {
  QVector a;      // coefficients over the variable list
  Rational beta;  // constant
};

inline Row to_row(const Polynomial& p, const std::vector<VarId>& ys,
                  const std::map<VarId, std::size_t>& pos) {
  Row r{QVector(ys.size(), Rational(0)), Rational(0)};
  for (const auto& [m, c] : p.terms()) {
    if (m.is_one()) {
      r.beta = c;
    } else if (m.is_variable() && pos.count(m.entries()[0].first)) {
      r.a[pos.at(m.entries()[0].first)] = c;
    } else {
      throw std::invalid_argument("cutbar: generator not linear over Y");
    }
  }
  return r;
}

inline Polynomial from_row(const Row& r, const std::vector<VarId>& ys) {
  Polynomial p = Polynomial::constant(r.beta);
  for (std::size_t i = 0; i < ys.size(); ++i) p.add_term(Monomial::var(ys[i]), r.a[i]);
  return p;
}

// Scale so the coefficient vector is primitive integral; the scale is
// positive so the inequality is unchanged.
inline std::pair<ZVector, Rational> primitive_normal(const Row& r) {
  Int l = 1;
  for (const auto& q : r.a) l = l / gcd_int(l, den(q)) * den(q);
  ZVector v(r.a.size());
  for (std::size_t i = 0; i < r.a.size(); ++i) v[i] = num(r.a[i]) * (l / den(r.a[i]));
  Int g = 0;
  for (const auto& x : v) g = gcd_int(g, x);
  Rational scale = Rational(l, g == 0 ? Int(1) : g);
  for (auto& x : v)
    if (g > 1) x /= g;
  return {std::move(v), r.beta * scale};
}

}  // namespace cutbar_detail

inline PolyCone cutbar(const PolyCone& p, const std::vector<VarId>& ys) {
  using cutbar_detail::Row;
  const std::size_t n = ys.size();
  std::map<VarId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[ys[i]] = i;

  std::vector<Polynomial> gens = p.generators;
  gens.push_back(Polynomial::constant(Rational(1)));
  PolyCone g(std::move(gens));
  for (const auto& q : g.generators) (void)cutbar_detail::to_row(q, ys, pos);  // type check

  for (int round = 1;; ++round) {
    std::vector<Row> rows;
    for (const auto& q : g.generators) rows.push_back(cutbar_detail::to_row(q, ys, pos));

    // Rational feasibility; an empty polyhedron makes every inequality
    // valid, which the closure witnesses with -1.
    {
      QMatrix a;
      QVector b;
      for (const auto& r : rows) {
        a.push_back(r.a);
        b.push_back(-r.beta);
      }
      if (!lp_feasible_ineq(a, b)) {
        trace::log("cutbar: polyhedron empty; closure is everything");
        auto out = g.generators;
        out.push_back(Polynomial::constant(Rational(-1)));
        return PolyCone(std::move(out));
      }
    }

    // Candidate cuts as (integral direction over current coords, value to
    // round) pairs; directions live in the lineality-reduced coordinates.
    std::vector<std::pair<ZVector, Rational>> raw_cuts;

    // Lineality reduction: quotient the polyhedron by {d : a·d = 0 for all
    // rows} through a unimodular change of coordinates, so the reduced
    // problem is pointed and cuts lift back with integral normals.
    QMatrix normals;
    for (const auto& r : rows) normals.push_back(r.a);
    auto lin_basis = nullspace(normals);
    std::size_t n_red = n;
    ZMatrix w_inv;  // unimodular; reduced coords z = (first n_red rows of w_inv) * y
    if (!lin_basis.empty()) {
      ZMatrix sat = saturate_lattice(lin_basis);
      ZMatrix ext = unimodular_extension(sat, n);  // rows: first k span lineality
      // Reorder so the lineality rows come last, then invert; y = W z with
      // the last k columns of W spanning the lineality.
      ZMatrix reordered;
      for (std::size_t i = sat.size(); i < n; ++i) reordered.push_back(ext[i]);
      for (std::size_t i = 0; i < sat.size(); ++i) reordered.push_back(ext[i]);
      // reordered rows form a basis; W = reordered^T, z = W^{-1} y.
      ZMatrix w(n, ZVector(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = reordered[j][i];
      w_inv = unimodular_inverse(w);
      n_red = n - sat.size();
      std::vector<Row> red_rows;
      for (const auto& r : rows) {
        Row rr{QVector(n_red, Rational(0)), r.beta};
        // a' = a^T W restricted to head coords; tail coords vanish by
        // construction.
        for (std::size_t j = 0; j < n_red; ++j) {
          Rational s(0);
          for (std::size_t i = 0; i < n; ++i) s += r.a[i] * Rational(w[i][j]);
          rr.a[j] = s;
        }
        red_rows.push_back(std::move(rr));
      }
      rows = std::move(red_rows);
    }

    // Row cuts: round each primitive-normal inequality.
    for (const auto& r : rows) {
      auto [v, beta] = cutbar_detail::primitive_normal(r);
      if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) continue;
      raw_cuts.push_back({std::move(v), -beta});  // direction >= -beta
    }

    // Vertex cuts.
    if (n_red > 0) {
      std::vector<std::pair<ZVector, Rational>> normals_int;  // primitive + scaled beta
      for (const auto& r : rows) {
        auto pn = cutbar_detail::primitive_normal(r);
        if (std::any_of(pn.first.begin(), pn.first.end(), [](const Int& x) { return x != 0; }))
          normals_int.push_back(std::move(pn));
      }
      std::set<QVector> seen;
      std::vector<std::size_t> subset;
      auto try_vertex = [&](const QVector& v) {
        if (seen.count(v)) return;
        seen.insert(v);
        // All tight primitive normals at v.
        ZMatrix tight;
        for (const auto& [a, beta] : normals_int) {
          Rational val(0);
          for (std::size_t i = 0; i < n_red; ++i) val += Rational(a[i]) * v[i];
          if (val + beta == 0) tight.push_back(a);
        }
        if (tight.empty()) return;
        // Lineality of the tight cone: rows whose negation stays inside.
        ZMatrix marked;
        for (const auto& t : tight) {
          ZVector neg(n_red);
          for (std::size_t i = 0; i < n_red; ++i) neg[i] = -t[i];
          if (detail::vec_in_cone(neg, tight)) marked.push_back(t);
        }
        auto emit = [&](const ZVector& c) {
          Rational val(0);
          for (std::size_t i = 0; i < n_red; ++i) val += Rational(c[i]) * v[i];
          raw_cuts.push_back({c, val});
        };
        if (marked.empty()) {
          for (const auto& h : hilbert_basis(tight)) emit(h);
          return;
        }
        ZMatrix sat_t = saturate_lattice(to_q(marked));
        for (const auto& u : sat_t) {
          emit(u);
          ZVector nu(n_red);
          for (std::size_t i = 0; i < n_red; ++i) nu[i] = -u[i];
          emit(nu);
        }
        // Quotient the tight cone by its lineality and lift the Hilbert
        // basis of the pointed image.
        ZMatrix ext = unimodular_extension(sat_t, n_red);
        ZMatrix vmat_inv = unimodular_inverse(ext);  // columns express x in basis coords
        std::size_t k = sat_t.size();
        ZMatrix images;
        for (const auto& t : tight) {
          // coords c with t = c * ext  =>  c = t * ext^{-1}.
          ZVector c(n_red, 0);
          for (std::size_t j = 0; j < n_red; ++j)
            for (std::size_t i = 0; i < n_red; ++i) c[j] += t[i] * vmat_inv[i][j];
          ZVector img(c.begin() + static_cast<std::ptrdiff_t>(k), c.end());
          images.push_back(std::move(img));
        }
        for (const auto& h : hilbert_basis(images)) {
          ZVector c(n_red, 0);
          for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = 0; j < n_red; ++j) c[j] += h[i] * ext[k + i][j];
          emit(c);
        }
      };
      // Enumerate basic feasible points: every n_red-subset of rows with a
      // unique solution that satisfies the whole system.
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (subset.size() == n_red) {
          QMatrix a;
          QVector b;
          for (auto i : subset) {
            QVector qa(n_red);
            for (std::size_t j = 0; j < n_red; ++j) qa[j] = Rational(normals_int[i].first[j]);
            a.push_back(std::move(qa));
            b.push_back(-normals_int[i].second);
          }
          if (rank(a) != n_red) return;
          auto v = solve_linear(a, b);
          if (!v) return;
          for (const auto& [na, nb] : normals_int) {
            Rational val = nb;
            for (std::size_t j = 0; j < n_red; ++j) val += Rational(na[j]) * (*v)[j];
            if (val < 0) return;
          }
          try_vertex(*v);
          return;
        }
        for (std::size_t i = start; i < normals_int.size(); ++i) {
          subset.push_back(i);
          self(self, i + 1);
          subset.pop_back();
        }
      };
      rec(rec, 0);
    }

    // Round, lift to the original coordinates, and keep the cuts that are
    // not already valid for the current cone.
    std::vector<Polynomial> fresh;
    for (const auto& [c, minval] : raw_cuts) {
      Int gamma = ceil_rat(minval);
      // Direction back in y coordinates.
      Row lifted{QVector(n, Rational(0)), Rational(-gamma)};
      if (w_inv.empty()) {
        for (std::size_t i = 0; i < n; ++i) lifted.a[i] = Rational(c[i]);
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          Int s = 0;
          for (std::size_t j = 0; j < n_red; ++j) s += c[j] * w_inv[j][i];
          lifted.a[i] = Rational(s);
        }
      }
      Polynomial cut = cutbar_detail::from_row(lifted, ys);
      if (cut.is_zero()) continue;
      if (!cone_member(cut, g)) fresh.push_back(std::move(cut));
    }
    if (fresh.empty()) {
      auto pruned = prune_cone(g);
      pruned.generators.push_back(Polynomial::constant(Rational(1)));
      return PolyCone(std::move(pruned.generators));
    }
    trace::log("cutbar: round " + std::to_string(round) + " adds " +
               std::to_string(fresh.size()) + " cut(s)");
    for (auto& q : fresh) g.generators.push_back(std::move(q));
    g = prune_cone(PolyCone(std::move(g.generators)));
    if (std::find(g.generators.begin(), g.generators.end(),
                  Polynomial::constant(Rational(1))) == g.generators.end())
      g.generators.push_back(Polynomial::constant(Rational(1)));
  }
}

}  // namespace lirr
