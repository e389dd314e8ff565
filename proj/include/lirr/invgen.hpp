#pragma once

#include <map>
#include <set>
#include <vector>

#include "lirr/consequence.hpp"

namespace lirr {

// Recurrence extraction and the approximate transitive-closure operator.
//
// The difference variables d!x stand for x - x'; the invariant variables
// k!i stand for the basis elements of the linear invariant space. Both
// families are interned deterministically from the transition vocabulary,
// so repeated runs produce identical output.

struct LinInvBasis {
  std::vector<Polynomial> basis;  // degree-1, constant-free polynomials over X
};

struct RecurrenceSet {
  std::vector<Polynomial> v;  // Q[K]-module generators: invariants forced to zero
  std::vector<Polynomial> r;  // cone generators, linear in D
  std::vector<VarId> d_vars;
  std::vector<VarId> k_vars;
  RingHom delta;    // d!x -> x - x'
  RingHom pre;      // d!x -> x
  RingHom inv;      // k!i -> i-th LinInv basis element
};

inline AlgebraicCone transition_consequences(const TransitionFormula& f, VariableContext& ctx,
                                             Theory theory = Theory::lirr) {
  return consequence(f.formula, f.all_vars(), theory, ctx);
}

namespace detail {

inline std::vector<VarId> difference_vars(const TransitionFormula& f, VariableContext& ctx) {
  std::vector<VarId> ds;
  for (const auto& [x, xp] : f.vocab) ds.push_back(ctx.intern("d!" + ctx.name(x)));
  return ds;
}

}  // namespace detail

// Basis of {k linear over X : F entails k' = k}: the kernel of the map
// d -> red(d) against the ideal of the delta-pulled-back consequence cone,
// read back through pre(d!x) = x.
inline LinInvBasis lin_inv_basis(const TransitionFormula& f, VariableContext& ctx,
                                 const AlgebraicCone* precomputed_cn = nullptr) {
  AlgebraicCone cn =
      precomputed_cn ? *precomputed_cn : transition_consequences(f, ctx);
  std::vector<VarId> ds = detail::difference_vars(f, ctx);
  RingHom delta;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& [x, xp] = f.vocab[i];
    delta.assignment[ds[i]] = Polynomial::variable(x) - Polynomial::variable(xp);
  }
  AlgebraicCone ideal_only(cn.ideal(), {});
  AlgebraicCone pulled = inverse_hom(ideal_only, delta);
  // Kernel of d -> red(d) restricted to span(D).
  std::vector<Polynomial> reduced;
  for (auto d : ds) reduced.push_back(pulled.ideal().reduce(Polynomial::variable(d)));
  std::set<Monomial> ms;
  for (const auto& p : reduced)
    for (const auto& [m, c] : p.terms()) ms.insert(m);
  std::vector<Monomial> mlist(ms.begin(), ms.end());
  QMatrix a(mlist.size(), QVector(ds.size(), Rational(0)));
  for (std::size_t j = 0; j < ds.size(); ++j)
    for (std::size_t i = 0; i < mlist.size(); ++i) a[i][j] = reduced[j].coefficient(mlist[i]);
  LinInvBasis out;
  for (const auto& vec : nullspace(a)) {
    Polynomial k;
    for (std::size_t j = 0; j < ds.size(); ++j)
      k += Polynomial::variable(f.vocab[j].first).scaled(vec[j]);
    if (!k.is_zero()) out.basis.push_back(std::move(k));
  }
  return out;
}

// The recurrent differences of F: Algorithm "linear restriction" applied to
// the delta/inv pullback of the consequence cone.
inline RecurrenceSet recurrent_differences(const TransitionFormula& f, VariableContext& ctx) {
  AlgebraicCone cn = transition_consequences(f, ctx);
  LinInvBasis linf = lin_inv_basis(f, ctx, &cn);
  RecurrenceSet out;
  out.d_vars = detail::difference_vars(f, ctx);
  for (std::size_t i = 0; i < linf.basis.size(); ++i)
    out.k_vars.push_back(ctx.intern("k!" + std::to_string(i + 1)));
  RingHom delta_inv;
  for (std::size_t i = 0; i < out.d_vars.size(); ++i) {
    const auto& [x, xp] = f.vocab[i];
    Polynomial diff = Polynomial::variable(x) - Polynomial::variable(xp);
    delta_inv.assignment[out.d_vars[i]] = diff;
    out.delta.assignment[out.d_vars[i]] = diff;
    out.pre.assignment[out.d_vars[i]] = Polynomial::variable(x);
  }
  for (std::size_t i = 0; i < out.k_vars.size(); ++i) {
    delta_inv.assignment[out.k_vars[i]] = linf.basis[i];
    out.inv.assignment[out.k_vars[i]] = linf.basis[i];
  }
  AlgebraicCone pulled = inverse_hom(cn, delta_inv);
  std::set<VarId> dset(out.d_vars.begin(), out.d_vars.end());
  std::set<VarId> kset(out.k_vars.begin(), out.k_vars.end());
  LinearRestriction vr =
      lin(pulled.ideal().generators(), pulled.positives(), dset, kset);
  out.v = std::move(vr.v);
  out.r = std::move(vr.r);
  return out;
}

namespace detail {

// cf: p -> delta(pi_D(p)) + t * inv(pi_K(p)).
inline Polynomial closed_form(const Polynomial& p, const RecurrenceSet& rec, VarId t,
                              const std::set<VarId>& dset) {
  Polynomial pd, pk;
  for (const auto& [m, c] : p.terms()) {
    if (m.is_variable() && dset.count(m.entries()[0].first)) {
      pd.add_term(m, c);
    } else if (m.all_vars([&](VarId v) { return dset.count(v) == 0; })) {
      pk.add_term(m, c);
    } else {
      throw std::logic_error("closed_form: mixed D/K monomial");
    }
  }
  return rec.delta.apply(pd) + Polynomial::variable(t) * rec.inv.apply(pk);
}

}  // namespace detail

// Approximation of the t-fold composition of F for a symbolic counter t:
// each recurrence r' <= r + a becomes r' <= r + t a, each forced-zero
// invariant combination stays zero.
inline Formula exp_closure(const TransitionFormula& f, VarId t, VariableContext& ctx,
                           const RecurrenceSet* precomputed = nullptr) {
  RecurrenceSet local = precomputed ? *precomputed : recurrent_differences(f, ctx);
  std::set<VarId> dset(local.d_vars.begin(), local.d_vars.end());
  std::vector<Formula> conjuncts;
  for (const auto& v : local.v)
    conjuncts.push_back(Formula::lit(Atom::zero(detail::closed_form(v, local, t, dset))));
  for (const auto& r : local.r)
    conjuncts.push_back(Formula::lit(Atom::nonneg(detail::closed_form(r, local, t, dset))));
  return Formula::conj(std::move(conjuncts)).nnf();
}

// F* = exists t. Int(t) and t >= 0 and exp(F, t). The existential counter is
// metadata on the result, not a solver construct.
struct StarFormula {
  Formula body = Formula::tru();  // Int(t) and t >= 0 and exp-body
  VarId counter = 0;
};

inline StarFormula star(const TransitionFormula& f, VariableContext& ctx) {
  VarId t = ctx.fresh("t");
  Formula body = exp_closure(f, t, ctx);
  std::vector<Formula> cs = {Formula::is_int(Polynomial::variable(t)),
                             Formula::le(Polynomial(), Polynomial::variable(t))};
  cs.push_back(body);
  return StarFormula{Formula::conj(std::move(cs)).nnf(), t};
}

// Sequential composition F;G over fresh intermediate copies x''. The
// existential quantifier stays implicit: consumers compute consequences
// over X ∪ X' and projection eliminates the intermediate state.
inline TransitionFormula compose(const TransitionFormula& f, const TransitionFormula& g,
                                 VariableContext& ctx) {
  Formula left = rename(f, RenameScheme::prime_to_doubleprime, ctx);
  Formula right = rename(g, RenameScheme::unprime_to_doubleprime, ctx);
  TransitionFormula out;
  out.formula = Formula::conj({left, right});
  out.vocab = f.vocab;
  return out;
}

}  // namespace lirr
