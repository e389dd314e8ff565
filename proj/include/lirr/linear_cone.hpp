#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lirr/polynomial.hpp"
#include "lirr/simplex.hpp"

namespace lirr {

// A finitely generated cone of polynomials: cone(P) = all nonnegative
// rational combinations of the generators. Dimensions are the (finitely
// many) monomials that occur.
struct PolyCone {
  std::vector<Polynomial> generators;

  explicit PolyCone(std::vector<Polynomial> gens = {}) {
    for (auto& g : gens)
      if (!g.is_zero()) generators.push_back(std::move(g));
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  }
};

namespace detail {

inline std::vector<Monomial> occurring_monomials(const std::vector<Polynomial>& ps,
                                                 const Polynomial* extra = nullptr) {
  std::set<Monomial> ms;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) ms.insert(m);
  if (extra)
    for (const auto& [m, c] : extra->terms()) ms.insert(m);
  return {ms.begin(), ms.end()};
}

inline QMatrix coefficient_matrix(const std::vector<Monomial>& ms,
                                  const std::vector<Polynomial>& ps) {
  QMatrix a(ms.size(), QVector(ps.size(), Rational(0)));
  for (std::size_t j = 0; j < ps.size(); ++j)
    for (std::size_t i = 0; i < ms.size(); ++i) a[i][j] = ps[j].coefficient(ms[i]);
  return a;
}

}  // namespace detail

// Membership p ∈ cone(P), with the multipliers as certificate on success.
inline std::optional<QVector> cone_member_certificate(const Polynomial& p, const PolyCone& c) {
  if (p.is_zero()) return QVector(c.generators.size(), Rational(0));
  if (c.generators.empty()) return std::nullopt;
  auto ms = detail::occurring_monomials(c.generators, &p);
  QMatrix a = detail::coefficient_matrix(ms, c.generators);
  QVector b(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) b[i] = p.coefficient(ms[i]);
  return lp_feasible_point(std::move(a), std::move(b));
}

inline bool cone_member(const Polynomial& p, const PolyCone& c) {
  return cone_member_certificate(p, c).has_value();
}

// Some nonzero t with t and -t in cone(P), or nullopt when the cone is
// salient. It suffices to test the generators: any nontrivial nonnegative
// zero-combination sum v_i p_i = 0 with v_1 > 0 exhibits -p_1 in the cone.
// Generators are probed in their stored order, so traces are reproducible.
inline std::optional<Polynomial> cone_additive_unit(const PolyCone& c) {
  for (const auto& g : c.generators) {
    if (g.is_zero()) continue;
    if (cone_member(-g, c)) return g;
  }
  return std::nullopt;
}

// The single-LP cross-check used by the salience invariant: a nonzero
// nonnegative combination of generators equal to zero, if one exists.
inline std::optional<QVector> cone_zero_combination(const PolyCone& c) {
  if (c.generators.empty()) return std::nullopt;
  auto ms = detail::occurring_monomials(c.generators);
  QMatrix a = detail::coefficient_matrix(ms, c.generators);
  a.push_back(QVector(c.generators.size(), Rational(1)));  // sum of multipliers = 1
  QVector b(ms.size(), Rational(0));
  b.push_back(Rational(1));
  return lp_feasible_point(std::move(a), std::move(b));
}

// Drops generators that are nonnegative combinations of the others.
inline PolyCone prune_cone(PolyCone c) {
  for (std::size_t i = 0; i < c.generators.size();) {
    std::vector<Polynomial> rest;
    for (std::size_t j = 0; j < c.generators.size(); ++j)
      if (j != i) rest.push_back(c.generators[j]);
    PolyCone others(std::move(rest));
    if (cone_member(c.generators[i], others)) {
      c.generators.erase(c.generators.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return c;
}

// Fourier-Motzkin elimination: cone(result) = cone(P) ∩ span(kept
// monomials). The constant monomial is always kept. One monomial is
// eliminated at a time by the normalize-and-combine rule; after each step
// generators implied by the rest are dropped to control growth.
inline PolyCone fm_project_if(const PolyCone& c, const std::function<bool(const Monomial&)>& keep) {
  PolyCone cur = c;
  for (;;) {
    auto ms = detail::occurring_monomials(cur.generators);
    std::vector<Monomial> elim;
    for (const auto& m : ms)
      if (!m.is_one() && !keep(m)) elim.push_back(m);
    if (elim.empty()) break;
    // Cheapest elimination first: fewest positive*negative pairings.
    Monomial target = elim[0];
    std::size_t best_cost = SIZE_MAX;
    for (const auto& m : elim) {
      std::size_t pos = 0, neg = 0;
      for (const auto& g : cur.generators) {
        Rational k = g.coefficient(m);
        if (k > 0) ++pos;
        if (k < 0) ++neg;
      }
      std::size_t cost = pos * neg;
      if (cost < best_cost) {
        best_cost = cost;
        target = m;
      }
    }
    std::vector<Polynomial> zero, pos, neg;
    for (const auto& g : cur.generators) {
      Rational k = g.coefficient(target);
      if (k == 0) {
        zero.push_back(g);
      } else if (k > 0) {
        pos.push_back(g.scaled(Rational(1) / k));
      } else {
        neg.push_back(g.scaled(Rational(-1) / k));
      }
    }
    std::vector<Polynomial> next = std::move(zero);
    for (const auto& p : pos)
      for (const auto& q : neg) next.push_back(p + q);
    cur = prune_cone(PolyCone(std::move(next)));
  }
  return cur;
}

inline PolyCone fm_project(const PolyCone& c, const std::set<Monomial>& keep) {
  return fm_project_if(c, [&](const Monomial& m) { return keep.count(m) != 0; });
}

}  // namespace lirr
