#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lirr/cutting.hpp"
#include "lirr/groebner.hpp"
#include "lirr/lattice.hpp"
#include "lirr/linear_cone.hpp"
#include "lirr/trace.hpp"
#include "lirr/variable.hpp"

namespace lirr {

// A ring homomorphism Q[source] -> Q[target] determined by where the source
// variables go; evaluation is substitution.
struct RingHom {
  std::map<VarId, Polynomial> assignment;

  Polynomial apply(const Polynomial& p) const { return p.substitute(assignment); }
  std::vector<VarId> source_vars() const {
    std::vector<VarId> vs;
    for (const auto& [v, p] : assignment) vs.push_back(v);
    return vs;
  }
};

// alg.cone(Z, P) = <Z> + cone(P): the sum of the ideal generated by Z and
// the cone generated by P. A pair is reduced when Z is a Groebner basis and
// every p in P is its own normal form; all cones built through this module
// are reduced by construction.
class AlgebraicCone {
 public:
  AlgebraicCone(GroebnerBasis z, std::vector<Polynomial> p)
      : z_(std::move(z)), p_(std::move(p)) {
    std::sort(p_.begin(), p_.end());
    p_.erase(std::unique(p_.begin(), p_.end()), p_.end());
  }

  static AlgebraicCone trivial(const MonomialOrder& ord = MonomialOrder::grevlex()) {
    return AlgebraicCone(GroebnerBasis(ord), {Polynomial::constant(Rational(1))});
  }
  // The whole polynomial ring, canonically Z = {1}, P = empty.
  static AlgebraicCone everything(const MonomialOrder& ord = MonomialOrder::grevlex()) {
    return AlgebraicCone(GroebnerBasis({Polynomial::constant(Rational(1))}, ord), {});
  }

  const GroebnerBasis& ideal() const { return z_; }
  const std::vector<Polynomial>& positives() const { return p_; }
  const MonomialOrder& order() const { return z_.order(); }
  PolyCone positive_cone() const { return PolyCone(p_); }

  bool inconsistent() const { return z_.is_unit_ideal(); }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& z : z_.generators())
      for (auto v : z.variables()) vs.insert(v);
    for (const auto& p : p_)
      for (auto v : p.variables()) vs.insert(v);
    return vs;
  }

  std::string dump(const VariableContext& ctx) const {
    std::string s = "Z:";
    for (const auto& z : z_.generators()) s += " " + z.str(ctx, order()) + ";";
    std::vector<std::string> ps;
    for (const auto& p : p_) ps.push_back(p.str(ctx, order()));
    std::sort(ps.begin(), ps.end());
    s += "\nP:";
    for (const auto& p : ps) s += " " + p + ";";
    return s;
  }

 private:
  GroebnerBasis z_;
  std::vector<Polynomial> p_;
};

// <gb(Z), {red(p) : p in P, red(p) != 0}>: same algebraic cone, reduced.
inline AlgebraicCone reduce_pair(const std::vector<Polynomial>& zs,
                                 const std::vector<Polynomial>& ps,
                                 const MonomialOrder& ord = MonomialOrder::grevlex()) {
  GroebnerBasis g = groebner_basis(zs, ord);
  std::vector<Polynomial> reduced;
  for (const auto& p : ps) {
    Polynomial r = g.reduce(p);
    if (!r.is_zero()) reduced.push_back(std::move(r));
  }
  return AlgebraicCone(std::move(g), std::move(reduced));
}

struct MemberCertificate {
  std::vector<Polynomial> ideal_cofactors;  // aligned with Z generators
  QVector cone_multipliers;                 // aligned with P generators
};

// p ∈ alg.cone(Z, P) iff red_Z(p) ∈ cone(P).
inline std::optional<MemberCertificate> member_certificate(const Polynomial& p,
                                                           const AlgebraicCone& c) {
  std::vector<Polynomial> cof;
  Polynomial r = c.ideal().reduce(p, &cof);
  auto lambda = cone_member_certificate(r, c.positive_cone());
  if (!lambda) return std::nullopt;
  return MemberCertificate{std::move(cof), std::move(*lambda)};
}

inline bool member(const Polynomial& p, const AlgebraicCone& c) {
  return cone_member(c.ideal().reduce(p), c.positive_cone());
}

// Mutual inclusion of generators: ideals by reduction to zero, positives by
// membership.
inline bool cone_subset(const AlgebraicCone& a, const AlgebraicCone& b) {
  for (const auto& z : a.ideal().generators())
    if (!b.ideal().reduces_to_zero(z)) return false;
  for (const auto& p : a.positives())
    if (!member(p, b)) return false;
  return true;
}

inline bool cone_equal(const AlgebraicCone& a, const AlgebraicCone& b) {
  return cone_subset(a, b) && cone_subset(b, a);
}

// Least regular cone containing Q: start from <(), Q ∪ {1}> and move
// additive units of the positive cone into the ideal until the positives
// are salient.
inline AlgebraicCone saturate(const std::vector<Polynomial>& q,
                              const MonomialOrder& ord = MonomialOrder::grevlex()) {
  std::vector<Polynomial> ps = q;
  ps.push_back(Polynomial::constant(Rational(1)));
  AlgebraicCone c = reduce_pair({}, ps, ord);
  for (;;) {
    auto t = cone_additive_unit(c.positive_cone());
    if (!t) return c;
    if (trace::sink()) trace::log("saturate: additive unit moved to ideal");
    std::vector<Polynomial> zs = c.ideal().generators();
    zs.push_back(*t);
    c = reduce_pair(zs, c.positives(), ord);
  }
}

// Projection onto Q[keep]: Groebner basis under the elimination order for
// the dropped variables; the ideal part is the basis intersected with
// Q[keep], the positive part is the Fourier-Motzkin projection of the
// reduced positives onto keep-monomials. The result is reduced with respect
// to the default order restricted to the kept variables.
inline AlgebraicCone project(const std::vector<Polynomial>& zs, const std::vector<Polynomial>& ps,
                             const std::set<VarId>& keep) {
  std::set<VarId> all;
  for (const auto& z : zs)
    for (auto v : z.variables()) all.insert(v);
  for (const auto& p : ps)
    for (auto v : p.variables()) all.insert(v);
  std::set<VarId> elim;
  for (auto v : all)
    if (!keep.count(v)) elim.insert(v);
  if (elim.empty()) return reduce_pair(zs, ps);
  MonomialOrder ordx = MonomialOrder::elimination(elim);
  GroebnerBasis g = groebner_basis(zs, ordx);
  std::vector<Polynomial> zx;
  for (const auto& z : g.generators()) {
    auto vs = z.variables();
    if (std::all_of(vs.begin(), vs.end(), [&](VarId v) { return keep.count(v) != 0; }))
      zx.push_back(z);
  }
  std::vector<Polynomial> pr;
  for (const auto& p : ps) {
    Polynomial r = g.reduce(p);
    if (!r.is_zero()) pr.push_back(std::move(r));
  }
  PolyCone px = fm_project_if(PolyCone(std::move(pr)), [&](const Monomial& m) {
    return m.all_vars([&](VarId v) { return keep.count(v) != 0; });
  });
  return reduce_pair(zx, px.generators);
}

inline AlgebraicCone project(const AlgebraicCone& c, const std::set<VarId>& keep) {
  return project(c.ideal().generators(), c.positives(), keep);
}

// alg.cone(Z1 ∪ Z2, P1 ∪ P2), re-reduced.
inline AlgebraicCone sum(const AlgebraicCone& a, const AlgebraicCone& b) {
  std::vector<Polynomial> zs = a.ideal().generators();
  for (const auto& z : b.ideal().generators()) zs.push_back(z);
  std::vector<Polynomial> ps = a.positives();
  for (const auto& p : b.positives()) ps.push_back(p);
  return reduce_pair(zs, ps, a.order());
}

// Intersection by tagging: multiply one side by t, the other by 1 - t, and
// project the fresh tag away.
inline AlgebraicCone intersect(const AlgebraicCone& a, const AlgebraicCone& b,
                               VariableContext& ctx) {
  std::set<VarId> keep = a.variables();
  for (auto v : b.variables()) keep.insert(v);
  VarId t = ctx.fresh("tag");
  Polynomial pt = Polynomial::variable(t);
  Polynomial one_minus_t = Polynomial::constant(Rational(1)) - pt;
  std::vector<Polynomial> zs, ps;
  for (const auto& z : a.ideal().generators()) zs.push_back(pt * z);
  for (const auto& z : b.ideal().generators()) zs.push_back(one_minus_t * z);
  for (const auto& p : a.positives()) ps.push_back(pt * p);
  for (const auto& p : b.positives()) ps.push_back(one_minus_t * p);
  AlgebraicCone r = project(zs, ps, keep);
  if (r.variables().count(t)) throw std::logic_error("intersect: tag variable leaked");
  return r;
}

// Inverse image under a ring homomorphism f : Q[Y] -> Q[X], with Y fresh:
// project_Y({y - f(y)} ∪ Z, P).
inline AlgebraicCone inverse_hom(const AlgebraicCone& c, const RingHom& f) {
  std::set<VarId> xs = c.variables();
  std::set<VarId> ys;
  for (const auto& [y, img] : f.assignment) {
    if (xs.count(y)) throw std::invalid_argument("inverse_hom: source variables not disjoint");
    ys.insert(y);
  }
  std::vector<Polynomial> zs;
  for (const auto& [y, img] : f.assignment) zs.push_back(Polynomial::variable(y) - img);
  for (const auto& z : c.ideal().generators()) zs.push_back(z);
  return project(zs, c.positives(), ys);
}

// alg.cone(C) ∩ Lin(Y) as a polyhedral cone; the ideal component of the
// intersection is always zero.
inline PolyCone intersect_subspace(const AlgebraicCone& c, const std::vector<VarId>& ys,
                                   VariableContext& ctx) {
  std::vector<Polynomial> lin = {Polynomial::constant(Rational(1)),
                                 Polynomial::constant(Rational(-1))};
  for (auto y : ys) {
    lin.push_back(Polynomial::variable(y));
    lin.push_back(-Polynomial::variable(y));
  }
  AlgebraicCone linc(GroebnerBasis(c.order()), std::move(lin));
  AlgebraicCone r = intersect(c, linc, ctx);
  if (!r.ideal().empty()) throw std::logic_error("intersect_subspace: nonzero ideal component");
  return PolyCone(r.positives());
}

// Cutting plane closure step: pull the cone back along the lattice basis,
// close the linear image under cutting planes, and push forward again.
// alg.cone(C) + cone(result) is the cutting plane closure of alg.cone(C)
// with respect to <Z> + Z-span(B).
inline PolyCone cut(const AlgebraicCone& c, const LatticeBasis& b, VariableContext& ctx) {
  RingHom f;
  std::vector<VarId> ys;
  for (const auto& bi : b.basis) {
    VarId y = ctx.fresh("y");
    ys.push_back(y);
    f.assignment[y] = bi;
  }
  AlgebraicCone pre = inverse_hom(c, f);
  PolyCone linear = intersect_subspace(pre, ys, ctx);
  PolyCone closed = cutbar(linear, ys);
  std::vector<Polynomial> image;
  for (const auto& q : closed.generators) image.push_back(f.apply(q));
  return PolyCone(std::move(image));
}

// Regular cutting plane closure: alternate cut and saturate, re-reducing
// the lattice basis against the updated ideal, until a simultaneous
// fixpoint.
inline AlgebraicCone rcp(const AlgebraicCone& c, const std::vector<Polynomial>& b,
                         VariableContext& ctx) {
  AlgebraicCone cur = c;
  LatticeBasis basis = lattice_basis(b);
  for (int round = 1;; ++round) {
    AlgebraicCone prev = cur;
    PolyCone cuts = cut(prev, basis, ctx);
    std::vector<Polynomial> gens;
    for (const auto& z : prev.ideal().generators()) {
      gens.push_back(z);
      gens.push_back(-z);
    }
    for (const auto& p : prev.positives()) gens.push_back(p);
    for (const auto& p : cuts.generators) gens.push_back(p);
    cur = saturate(gens, prev.order());
    std::vector<Polynomial> reduced_b;
    for (const auto& bi : basis.basis) reduced_b.push_back(cur.ideal().reduce(bi));
    basis = lattice_basis(reduced_b);
    trace::log("rcp: round " + std::to_string(round) + " done");
    if (cone_equal(cur, prev)) return cur;
  }
}

// Linear restriction: alg.cone(Z, P) ∩ (Q[K] + span(D)) as a pair (V, R)
// with Q[K]-module span V and cone R. Works under the elimination order
// that ranks D-monomials above K-monomials.
struct LinearRestriction {
  std::vector<Polynomial> v;  // Q[K]-module generators (ideal-like)
  std::vector<Polynomial> r;  // cone generators
};

inline LinearRestriction lin(const std::vector<Polynomial>& zs, const std::vector<Polynomial>& ps,
                             const std::set<VarId>& d, const std::set<VarId>& k) {
  MonomialOrder ord = MonomialOrder::elimination(d);
  AlgebraicCone c = reduce_pair(zs, ps, ord);
  auto in_k = [&](VarId v) { return k.count(v) != 0; };
  if (c.inconsistent()) {
    LinearRestriction out;
    out.v = {Polynomial::constant(Rational(1))};
    for (auto dv : d) {
      out.r.push_back(Polynomial::variable(dv));
      out.r.push_back(-Polynomial::variable(dv));
    }
    return out;
  }
  auto keep = [&](const Monomial& m) {
    if (m.all_vars(in_k)) return true;  // monomial over K (1 included)
    return m.is_variable() && d.count(m.entries()[0].first) != 0;
  };
  PolyCone r = fm_project_if(c.positive_cone(), keep);
  LinearRestriction out;
  out.r = r.generators;
  for (const auto& z : c.ideal().generators()) {
    Monomial lm = z.leading_monomial(ord);
    if (lm.all_vars(in_k)) {
      out.v.push_back(z);
    } else if (lm.is_variable() && d.count(lm.entries()[0].first)) {
      // Only representable elements (linear in D, arbitrary in K) may enter
      // the cone part; mixed tails fall outside the target space.
      if (z.all_monomials(keep)) {
        out.r.push_back(z);
        out.r.push_back(-z);
      }
    }
  }
  return out;
}

}  // namespace lirr
