#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "lirr/polynomial.hpp"

namespace lirr {

// Ground atoms over the ordered-ring signature with Int: 0 <= p, 0 = p,
// Int(p). All comparisons are normalized into these three shapes.
struct Atom {
  enum class Kind { nonneg, zero, is_int };
  Kind kind;
  Polynomial poly;

  static Atom nonneg(Polynomial p) { return canonical(Kind::nonneg, std::move(p)); }
  static Atom zero(Polynomial p) { return canonical(Kind::zero, std::move(p)); }
  static Atom is_int(Polynomial p) { return {Kind::is_int, std::move(p)}; }

  bool operator<(const Atom& o) const {
    if (kind != o.kind) return kind < o.kind;
    return poly < o.poly;
  }
  bool operator==(const Atom& o) const { return kind == o.kind && poly == o.poly; }

 private:
  // Scale-normalization keeps atom identity syntactic where the theory
  // allows it: positive scaling for inequalities, sign for equalities.
  // Int atoms are left alone (Int is not scale-invariant).
  static Atom canonical(Kind k, Polynomial p) {
    if (!p.is_zero()) {
      Rational c = p.terms().rbegin()->second;  // canonically-largest monomial
      if (k == Kind::zero) {
        p = p.scaled(Rational(1) / c);
      } else if (c < 0) {
        p = p.scaled(Rational(-1) / c);
      } else {
        p = p.scaled(Rational(1) / c);
      }
    }
    return {k, std::move(p)};
  }
};

// Ground boolean combinations of atoms. Trees are immutable and shared;
// `nnf` pushes negations to the literals and folds constant atoms.
class Formula {
 public:
  enum class Kind { tru, fls, lit, conj, disj, neg };

  static Formula tru() { return mk(Kind::tru); }
  static Formula fls() { return mk(Kind::fls); }
  static Formula lit(Atom a, bool sign = true) {
    Formula f = mk(Kind::lit);
    f.node_->atom = std::move(a);
    f.node_->sign = sign;
    return f;
  }
  static Formula conj(std::vector<Formula> kids) {
    if (kids.empty()) return tru();
    if (kids.size() == 1) return kids[0];
    Formula f = mk(Kind::conj);
    f.node_->kids = std::move(kids);
    return f;
  }
  static Formula disj(std::vector<Formula> kids) {
    if (kids.empty()) return fls();
    if (kids.size() == 1) return kids[0];
    Formula f = mk(Kind::disj);
    f.node_->kids = std::move(kids);
    return f;
  }
  static Formula neg(Formula f) {
    Formula g = mk(Kind::neg);
    g.node_->kids = {std::move(f)};
    return g;
  }

  // Comparison builders; strict inequalities desugar per p < q  ==>
  // p <= q and p != q.
  static Formula le(const Polynomial& p, const Polynomial& q) {
    return lit(Atom::nonneg(q - p));
  }
  static Formula lt(const Polynomial& p, const Polynomial& q) {
    return conj({lit(Atom::nonneg(q - p)), lit(Atom::zero(q - p), false)});
  }
  static Formula eq(const Polynomial& p, const Polynomial& q) {
    return lit(Atom::zero(p - q));
  }
  static Formula is_int(const Polynomial& p) { return lit(Atom::is_int(p)); }

  Kind kind() const { return node_->kind; }
  const Atom& atom() const { return node_->atom; }
  bool sign() const { return node_->sign; }
  const std::vector<Formula>& kids() const { return node_->kids; }

  // Negation normal form with constant atoms folded. The result contains no
  // `neg` nodes; negation lives in literal signs.
  Formula nnf(bool polarity = true) const {
    switch (kind()) {
      case Kind::tru:
        return polarity ? tru() : fls();
      case Kind::fls:
        return polarity ? fls() : tru();
      case Kind::neg:
        return kids()[0].nnf(!polarity);
      case Kind::lit: {
        bool s = polarity ? sign() : !sign();
        const Atom& a = atom();
        if (a.poly.is_constant()) {
          bool val = true;
          switch (a.kind) {
            case Atom::Kind::nonneg: val = a.poly.constant_part() >= 0; break;
            case Atom::Kind::zero: val = a.poly.is_zero(); break;
            case Atom::Kind::is_int: val = is_integer(a.poly.constant_part()); break;
          }
          return (val == s) ? tru() : fls();
        }
        return lit(a, s);
      }
      case Kind::conj:
      case Kind::disj: {
        bool is_and = (kind() == Kind::conj) == polarity;
        std::vector<Formula> out;
        for (const auto& k : kids()) {
          Formula f = k.nnf(polarity);
          if (f.kind() == Kind::tru) {
            if (!is_and) return tru();
            continue;
          }
          if (f.kind() == Kind::fls) {
            if (is_and) return fls();
            continue;
          }
          // Flatten nested connectives of the same kind.
          if ((f.kind() == Kind::conj && is_and) || (f.kind() == Kind::disj && !is_and)) {
            for (const auto& kk : f.kids()) out.push_back(kk);
          } else {
            out.push_back(f);
          }
        }
        return is_and ? conj(std::move(out)) : disj(std::move(out));
      }
    }
    throw std::logic_error("unreachable");
  }

  bool is_nnf() const {
    switch (kind()) {
      case Kind::neg: return false;
      case Kind::conj:
      case Kind::disj:
        return std::all_of(kids().begin(), kids().end(),
                           [](const Formula& f) { return f.is_nnf(); });
      default: return true;
    }
  }

  std::set<Atom> atoms() const {
    std::set<Atom> out;
    collect_atoms(out);
    return out;
  }

  std::set<VarId> variables() const {
    std::set<VarId> out;
    visit_atoms([&](const Atom& a, bool) {
      for (auto v : a.poly.variables()) out.insert(v);
    });
    return out;
  }

  template <typename Fn>
  void visit_atoms(Fn fn) const {
    switch (kind()) {
      case Kind::lit: fn(atom(), sign()); return;
      case Kind::conj:
      case Kind::disj:
      case Kind::neg:
        for (const auto& k : kids()) k.visit_atoms(fn);
        return;
      default: return;
    }
  }

  // Capture-free substitution of variables by polynomials in every atom.
  Formula substitute(const std::map<VarId, Polynomial>& assign) const {
    switch (kind()) {
      case Kind::tru:
      case Kind::fls: return *this;
      case Kind::lit: {
        const Atom& a = atom();
        Polynomial p = a.poly.substitute(assign);
        Atom b = a.kind == Atom::Kind::nonneg  ? Atom::nonneg(std::move(p))
                 : a.kind == Atom::Kind::zero  ? Atom::zero(std::move(p))
                                               : Atom::is_int(std::move(p));
        return lit(std::move(b), sign());
      }
      default: {
        std::vector<Formula> out;
        for (const auto& k : kids()) out.push_back(k.substitute(assign));
        Formula f = mk(kind());
        f.node_->kids = std::move(out);
        return f;
      }
    }
  }

  Formula rename(const std::map<VarId, VarId>& vars) const {
    std::map<VarId, Polynomial> assign;
    for (const auto& [from, to] : vars) assign[from] = Polynomial::variable(to);
    return substitute(assign);
  }

  // Truth value at a rational point (the reals are the standard model).
  bool evaluate(const std::map<VarId, Rational>& point) const {
    switch (kind()) {
      case Kind::tru: return true;
      case Kind::fls: return false;
      case Kind::neg: return !kids()[0].evaluate(point);
      case Kind::lit: {
        Rational v = atom().poly.evaluate(point);
        bool val = true;
        switch (atom().kind) {
          case Atom::Kind::nonneg: val = v >= 0; break;
          case Atom::Kind::zero: val = v == 0; break;
          case Atom::Kind::is_int: val = is_integer(v); break;
        }
        return val == sign();
      }
      case Kind::conj:
        return std::all_of(kids().begin(), kids().end(),
                           [&](const Formula& f) { return f.evaluate(point); });
      case Kind::disj:
        return std::any_of(kids().begin(), kids().end(),
                           [&](const Formula& f) { return f.evaluate(point); });
    }
    throw std::logic_error("unreachable");
  }

 private:
  struct Node {
    Kind kind = Kind::tru;
    Atom atom{Atom::Kind::nonneg, Polynomial()};
    bool sign = true;
    std::vector<Formula> kids;
  };

  static Formula mk(Kind k) {
    Formula f;
    f.node_ = std::make_shared<Node>();
    f.node_->kind = k;
    return f;
  }

  void collect_atoms(std::set<Atom>& out) const {
    visit_atoms([&](const Atom& a, bool) { out.insert(a); });
  }

  std::shared_ptr<Node> node_;
};

// A conjunctive cell of the DNF, split by literal shape. Equalities are
// expanded: a positive 0 = p contributes p and -p to the nonnegative side.
struct Cube {
  std::vector<Polynomial> p;  // asserted nonnegative
  std::vector<Polynomial> q;  // negated nonnegative
  std::vector<Polynomial> r;  // negated zero
  std::vector<Polynomial> s;  // asserted Int
  std::vector<Polynomial> t;  // negated Int

  static Cube from_literals(const std::vector<std::pair<Atom, bool>>& lits) {
    Cube c;
    for (const auto& [a, sign] : lits) {
      switch (a.kind) {
        case Atom::Kind::nonneg:
          (sign ? c.p : c.q).push_back(a.poly);
          break;
        case Atom::Kind::zero:
          if (sign) {
            c.p.push_back(a.poly);
            c.p.push_back(-a.poly);
          } else {
            c.r.push_back(a.poly);
          }
          break;
        case Atom::Kind::is_int:
          (sign ? c.s : c.t).push_back(a.poly);
          break;
      }
    }
    return c;
  }

  bool has_int_atoms() const { return !s.empty() || !t.empty(); }

  Formula to_formula() const {
    std::vector<Formula> fs;
    for (const auto& x : p) fs.push_back(Formula::lit(Atom::nonneg(x)));
    for (const auto& x : q) fs.push_back(Formula::lit(Atom::nonneg(x), false));
    for (const auto& x : r) fs.push_back(Formula::lit(Atom::zero(x), false));
    for (const auto& x : s) fs.push_back(Formula::lit(Atom::is_int(x)));
    for (const auto& x : t) fs.push_back(Formula::lit(Atom::is_int(x), false));
    return Formula::conj(std::move(fs));
  }
};

// A loop-body relation: a formula over X ∪ X' plus the pairing between the
// two copies. Every primed symbol must have an unprimed partner.
struct TransitionFormula {
  Formula formula = Formula::tru();
  std::vector<std::pair<VarId, VarId>> vocab;  // (x, x')

  std::set<VarId> pre_vars() const {
    std::set<VarId> out;
    for (auto& [x, xp] : vocab) out.insert(x);
    return out;
  }
  std::set<VarId> post_vars() const {
    std::set<VarId> out;
    for (auto& [x, xp] : vocab) out.insert(xp);
    return out;
  }
  std::set<VarId> all_vars() const {
    auto out = pre_vars();
    for (auto v : post_vars()) out.insert(v);
    return out;
  }
};

enum class RenameScheme { prime_to_doubleprime, unprime_to_doubleprime };

inline Formula rename(const TransitionFormula& f, RenameScheme scheme, VariableContext& ctx) {
  std::map<VarId, VarId> m;
  for (const auto& [x, xp] : f.vocab) {
    VarId xpp = ctx.doubleprimed(x);
    if (scheme == RenameScheme::prime_to_doubleprime)
      m[xp] = xpp;
    else
      m[x] = xpp;
  }
  return f.formula.rename(m);
}

}  // namespace lirr
