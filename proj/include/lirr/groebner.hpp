#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "lirr/polynomial.hpp"
#include "lirr/trace.hpp"

namespace lirr {

// A Groebner basis together with its order. Bases are kept reduced at all
// times: every generator is monic and no generator's monomial is divisible
// by another generator's leading monomial, so the rewrite system is
// confluent and normal forms are unique.
class GroebnerBasis {
 public:
  explicit GroebnerBasis(MonomialOrder ord) : ord_(std::move(ord)) {}
  GroebnerBasis(std::vector<Polynomial> gens, MonomialOrder ord)
      : gens_(std::move(gens)), ord_(std::move(ord)) {}

  const std::vector<Polynomial>& generators() const { return gens_; }
  const MonomialOrder& order() const { return ord_; }
  bool empty() const { return gens_.empty(); }
  bool is_unit_ideal() const {
    return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero();
  }

  // Normal form of p: p - result ∈ <G> and no monomial of the result is
  // divisible by any generator's leading monomial. When `cofactors` is
  // given it receives q_i with p = sum q_i g_i + result and
  // Lm(q_i g_i) ⪯ Lm(p).
  Polynomial reduce(const Polynomial& p, std::vector<Polynomial>* cofactors = nullptr) const {
    if (cofactors) cofactors->assign(gens_.size(), Polynomial());
    Polynomial rest = p;
    Polynomial normal;
    while (!rest.is_zero()) {
      auto [m, c] = rest.leading_term(ord_);
      bool reduced = false;
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        const Monomial lm = gens_[i].leading_monomial(ord_);
        if (!lm.divides(m)) continue;
        Rational factor = c / gens_[i].leading_term(ord_).second;
        Monomial q = lm.divide_into(m);
        rest -= gens_[i].mul_term(factor, q);
        if (cofactors) (*cofactors)[i].add_term(q, factor);
        reduced = true;
        break;
      }
      if (!reduced) {
        normal.add_term(m, c);
        Polynomial lt = Polynomial::term(c, m);
        rest -= lt;
      }
    }
    return normal;
  }

  bool reduces_to_zero(const Polynomial& p) const { return reduce(p).is_zero(); }

  friend GroebnerBasis groebner_basis(std::vector<Polynomial> zs, MonomialOrder ord);

 private:
  std::vector<Polynomial> gens_;
  MonomialOrder ord_;
};

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
  auto [mf, cf] = f.leading_term(ord);
  auto [mg, cg] = g.leading_term(ord);
  Monomial l = Monomial::lcm(mf, mg);
  return f.mul_term(Rational(1) / cf, mf.divide_into(l)) -
         g.mul_term(Rational(1) / cg, mg.divide_into(l));
}

}  // namespace detail

// Buchberger's algorithm with the normal selection strategy (smallest lcm
// first) and both pair-elimination criteria; the output is the unique
// reduced basis for the order.
inline GroebnerBasis groebner_basis(std::vector<Polynomial> zs, MonomialOrder ord) {
  std::vector<Polynomial> g;
  for (auto& z : zs) {
    if (z.is_zero()) continue;
    auto [m, c] = z.leading_term(ord);
    g.push_back(z.scaled(Rational(1) / c));
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (int c = ord.compare(a.lcm, b.lcm)) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<Pair> pending;
  auto push_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
      pending.push_back(
          {i, k, Monomial::lcm(g[i].leading_monomial(ord), g[k].leading_monomial(ord))});
  };
  for (std::size_t k = 0; k < g.size(); ++k) push_pairs_for(k);

  std::set<std::pair<std::size_t, std::size_t>> done;
  GroebnerBasis scratch(ord);
  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair p = *it;
    pending.erase(it);
    done.insert({p.i, p.j});
    const Monomial lmi = g[p.i].leading_monomial(ord);
    const Monomial lmj = g[p.j].leading_monomial(ord);
    if (lmi.coprime(lmj)) continue;  // product criterion
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g[k].leading_monomial(ord).divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::pair<std::size_t, std::size_t>{std::min(a, b), std::max(a, b)};
      };
      if (done.count(key(p.i, k)) && done.count(key(k, p.j))) chained = true;
    }
    if (chained) continue;  // chain criterion
    scratch = GroebnerBasis(g, ord);
    Polynomial r = scratch.reduce(detail::s_polynomial(g[p.i], g[p.j], ord));
    if (r.is_zero()) continue;
    auto [m, c] = r.leading_term(ord);
    if (trace::sink())
      trace::log("buchberger: new generator from pair (" + std::to_string(p.i) + "," +
                 std::to_string(p.j) + ")");
    g.push_back(r.scaled(Rational(1) / c));
    push_pairs_for(g.size() - 1);
  }

  // Minimalize: drop generators whose leading monomial is divisible by
  // another generator's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Monomial lmi = g[i].leading_monomial(ord);
    bool dominated = false;
    for (std::size_t j = 0; j < g.size() && !dominated; ++j) {
      if (i == j) continue;
      const Monomial lmj = g[j].leading_monomial(ord);
      if (lmj.divides(lmi) && !(lmi == lmj && j > i)) dominated = true;
    }
    if (!dominated) minimal.push_back(g[i]);
  }
  // Inter-reduce tails.
  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    GroebnerBasis rest(std::move(others), ord);
    Polynomial r = rest.reduce(reduced[i]);
    if (r.is_zero()) continue;  // cannot happen for minimal bases
    reduced[i] = r.scaled(Rational(1) / r.leading_term(ord).second);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (int c = ord.compare(a.leading_monomial(ord), b.leading_monomial(ord))) return c < 0;
    return a < b;
  });
  if (std::any_of(reduced.begin(), reduced.end(),
                  [](const Polynomial& p) { return p.is_constant() && !p.is_zero(); }))
    reduced = {Polynomial::constant(Rational(1))};
  return GroebnerBasis(std::move(reduced), ord);
}

}  // namespace lirr
