#pragma once

#include <memory>
#include <set>

#include "lirr/monomial.hpp"

namespace lirr {

// Total, multiplicative monomial orders with 1 as minimum.
//
// grevlex: compare by total degree, ties broken reverse-lexicographically
// (the monomial with the smaller exponent at the last differing variable is
// the larger one).
//
// elimination(E): monomials are split into their part over E and the rest;
// the E-parts compare first (grevlex), ties break on the remaining parts.
// Any monomial containing a variable of E therefore outranks every E-free
// monomial, which is what makes Groebner bases under this order usable for
// projection.
class MonomialOrder {
 public:
  static MonomialOrder grevlex() { return MonomialOrder({}); }
  static MonomialOrder elimination(std::set<VarId> eliminate) {
    return MonomialOrder(std::move(eliminate));
  }

  bool is_elimination() const { return !eliminate_.empty(); }
  const std::set<VarId>& eliminated() const { return eliminate_; }

  // <0, 0, >0 as m <, =, > n.
  int compare(const Monomial& m, const Monomial& n) const {
    if (eliminate_.empty()) return grevlex_compare(m, n);
    auto elim = [&](VarId v) { return eliminate_.count(v) != 0; };
    auto [me, mr] = m.split(elim);
    auto [ne, nr] = n.split(elim);
    if (int c = grevlex_compare(me, ne)) return c;
    return grevlex_compare(mr, nr);
  }

  bool less(const Monomial& m, const Monomial& n) const { return compare(m, n) < 0; }

  bool operator==(const MonomialOrder& o) const { return eliminate_ == o.eliminate_; }

 private:
  explicit MonomialOrder(std::set<VarId> eliminate) : eliminate_(std::move(eliminate)) {}

  static int grevlex_compare(const Monomial& m, const Monomial& n) {
    std::uint64_t dm = m.degree(), dn = n.degree();
    if (dm != dn) return dm < dn ? -1 : 1;
    // Reverse lexicographic: scan from the highest variable id down; the
    // first difference decides, smaller exponent there means larger monomial.
    const auto& a = m.entries();
    const auto& b = n.entries();
    auto i = a.rbegin();
    auto j = b.rbegin();
    while (i != a.rend() || j != b.rend()) {
      if (j == b.rend() || (i != a.rend() && i->first > j->first)) {
        return -1;  // m has an extra exponent at a later variable
      }
      if (i == a.rend() || j->first > i->first) {
        return 1;
      }
      if (i->second != j->second) return i->second > j->second ? -1 : 1;
      ++i;
      ++j;
    }
    return 0;
  }

  std::set<VarId> eliminate_;
};

}  // namespace lirr
