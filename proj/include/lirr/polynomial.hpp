#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lirr/ordering.hpp"
#include "lirr/rational.hpp"

namespace lirr {

// Exact multivariate polynomial over the rationals: a finite map from
// monomials to nonzero coefficients. The map uses the canonical (order
// independent) monomial comparison, so one value serves all monomial
// orderings; leading terms are computed on demand against the active order.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Rational c) {
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
  }
  static Polynomial constant(Rational c) { return Polynomial(std::move(c)); }
  static Polynomial variable(VarId v) { return term(Rational(1), Monomial::var(v)); }
  static Polynomial term(Rational c, Monomial m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_part() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  // Greatest monomial under ord, with its coefficient. Undefined on zero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
  }
  Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
  }

  Polynomial scaled(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  Polynomial mul_term(const Rational& c, const Monomial& m) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(m * mm, k * c);
    return r;
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial r = constant(Rational(1));
    for (std::uint32_t i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }
  // Canonical container comparison (order-independent).
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.entries()) vs.insert(v);
    return vs;
  }

  template <typename Pred>
  bool all_monomials(Pred pred) const {
    for (const auto& [m, c] : terms_)
      if (!pred(m)) return false;
    return true;
  }

  // Degree at most one over the given variables, no others.
  bool is_linear_over(const std::set<VarId>& vars) const {
    for (const auto& [m, c] : terms_) {
      if (m.is_one()) continue;
      if (!m.is_variable() || vars.count(m.entries()[0].first) == 0) return false;
    }
    return true;
  }

  // Capture-free substitution of variables by polynomials; variables not in
  // the map are left alone.
  Polynomial substitute(const std::map<VarId, Polynomial>& assign) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(c);
      Monomial untouched;
      for (const auto& [v, e] : m.entries()) {
        auto it = assign.find(v);
        if (it == assign.end()) {
          untouched = untouched * Monomial::var(v, e);
        } else {
          t = t * it->second.pow(e);
        }
      }
      r += t.mul_term(Rational(1), untouched);
    }
    return r;
  }

  Rational evaluate(const std::map<VarId, Rational>& point) const {
    Rational r(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [v, e] : m.entries()) {
        auto it = point.find(v);
        if (it == point.end()) throw std::out_of_range("unassigned variable in evaluation");
        for (std::uint32_t i = 0; i < e; ++i) t *= it->second;
      }
      r += t;
    }
    return r;
  }

  // Renders terms in descending active order: "x^2*y - 1/2*x + 3".
  std::string str(const VariableContext& ctx,
                  const MonomialOrder& ord = MonomialOrder::grevlex()) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
      if (int c = ord.compare(a->first, b->first)) return c > 0;
      return false;
    });
    std::string s;
    bool first = true;
    for (auto* t : ts) {
      Rational c = t->second;
      if (first) {
        if (c < 0) {
          s += "-";
          c = -c;
        }
      } else {
        s += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (t->first.is_one()) {
        s += to_string(c);
      } else {
        if (c != 1) s += to_string(c) + "*";
        s += t->first.str(ctx);
      }
    }
    return s;
  }

 private:
  Terms terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

// The four-way arithmetic entry point named in the module contract; plain
// operators above are what call sites actually use.
enum class PolyOp { add, neg, mul, scale };
inline Polynomial poly_arith(PolyOp op, const Polynomial& a, const Polynomial& b = {},
                             const Rational& k = Rational(0)) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::neg: return -a;
    case PolyOp::mul: return a * b;
    case PolyOp::scale: return a.scaled(k);
  }
  throw std::logic_error("unreachable");
}

}  // namespace lirr
