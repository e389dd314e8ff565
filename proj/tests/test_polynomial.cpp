#include <catch2/catch_amalgamated.hpp>

#include "lirr/polynomial.hpp"

#include "oracles.hpp"

using namespace lirr;

namespace {

struct Vars {
  VariableContext ctx;
  Polynomial x, y, z, w;
  Vars()
      : x(Polynomial::variable(ctx.intern("x"))),
        y(Polynomial::variable(ctx.intern("y"))),
        z(Polynomial::variable(ctx.intern("z"))),
        w(Polynomial::variable(ctx.intern("w"))) {}
};

Polynomial c(int n) { return Polynomial::constant(Rational(n)); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational q(2, 4);
  CHECK(num(q) == 1);
  CHECK(den(q) == 2);
  CHECK(q + Rational(1, 2) == 1);
  CHECK(floor_rat(Rational(-1, 2)) == -1);
  CHECK(ceil_rat(Rational(-1, 2)) == 0);
  CHECK(floor_rat(Rational(7, 2)) == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
}

TEST_CASE("polynomial arithmetic matches the worked products") {
  Vars v;
  CHECK((v.x + (-v.x)).is_zero());
  // (x-1)(y-2) = xy - 2x - y + 2
  Polynomial prod = (v.x - c(1)) * (v.y - c(2));
  Polynomial expect = v.x * v.y - c(2) * v.x - v.y + c(2);
  CHECK(prod == expect);
  CHECK((v.x + v.y) * (v.x - v.y) == v.x * v.x - v.y * v.y);
}

TEST_CASE("leading monomials under grevlex") {
  Vars v;
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial p = v.x * v.x - v.x * v.y;
  CHECK(p.leading_monomial(ord) == (v.x * v.x).leading_monomial(ord));
  Polynomial half = Polynomial::constant(Rational(1, 2)) * v.x * v.x - v.y;
  auto [m, coeff] = half.leading_term(ord);
  CHECK(m == (v.x * v.x).leading_monomial(ord));
  CHECK(coeff == Rational(1, 2));
  CHECK_THROWS_AS(Polynomial().leading_term(ord), std::domain_error);
}

TEST_CASE("leading monomial under an elimination order ignores absent variables") {
  Vars v;
  VarId xv = v.ctx.lookup("x");
  MonomialOrder ord = MonomialOrder::elimination({xv});
  Polynomial p = v.y + c(1);
  CHECK(p.leading_monomial(ord) == v.y.leading_monomial(ord));
}

TEST_CASE("elimination order ranks eliminated variables above everything") {
  Vars v;
  VarId tv = v.ctx.intern("t");
  MonomialOrder ord = MonomialOrder::elimination({tv});
  Monomial t = Monomial::var(tv);
  Monomial x2y = Monomial::var(v.ctx.lookup("x"), 2) * Monomial::var(v.ctx.lookup("y"));
  CHECK(ord.compare(t, x2y) > 0);
  CHECK(ord.compare(x2y, t) < 0);
}

TEST_CASE("grevlex compares degree first, then reversed tail") {
  Vars v;
  MonomialOrder ord = MonomialOrder::grevlex();
  Monomial x3 = Monomial::var(v.ctx.lookup("x"), 3);
  Monomial x2y = Monomial::var(v.ctx.lookup("x"), 2) * Monomial::var(v.ctx.lookup("y"));
  CHECK(ord.compare(x3, x2y) > 0);
  // 1 is the minimum.
  CHECK(ord.compare(Monomial(), x3) < 0);
  CHECK(ord.compare(Monomial(), Monomial()) == 0);
}

TEST_CASE("ring axioms hold on random inputs") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y"), v.ctx.lookup("z")};
  oracles::Rng rng(12345);
  for (int i = 0; i < 50; ++i) {
    Polynomial a = oracles::random_poly(rng, vars, 3, 4);
    Polynomial b = oracles::random_poly(rng, vars, 3, 4);
    Polynomial cc = oracles::random_poly(rng, vars, 3, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + cc == a + (b + cc));
    CHECK(a * b == b * a);
    CHECK((a * b) * cc == a * (b * cc));
    CHECK(a * (b + cc) == a * b + a * cc);
    CHECK(a + Polynomial() == a);
    CHECK(a * Polynomial::constant(Rational(1)) == a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("orders are total, multiplicative, and have 1 as minimum") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y"), v.ctx.lookup("z"),
                             v.ctx.lookup("w")};
  oracles::Rng rng(777);
  std::vector<MonomialOrder> orders = {MonomialOrder::grevlex(),
                                       MonomialOrder::elimination({vars[0], vars[2]})};
  for (const auto& ord : orders) {
    for (int i = 0; i < 200; ++i) {
      Monomial m = oracles::random_monomial(rng, vars, 4);
      Monomial n = oracles::random_monomial(rng, vars, 4);
      Monomial k = oracles::random_monomial(rng, vars, 3);
      CHECK(ord.compare(Monomial(), m) <= 0);
      int cmp = ord.compare(m, n);
      CHECK(cmp == -ord.compare(n, m));
      if (cmp <= 0) CHECK(ord.compare(m * k, n * k) <= 0);
      if (cmp == 0) CHECK(m == n);
    }
  }
}

TEST_CASE("leading monomial is multiplicative") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y"), v.ctx.lookup("z")};
  oracles::Rng rng(999);
  MonomialOrder ord = MonomialOrder::grevlex();
  for (int i = 0; i < 100; ++i) {
    Polynomial a = oracles::random_nonzero_poly(rng, vars, 3, 4);
    Polynomial b = oracles::random_nonzero_poly(rng, vars, 3, 4);
    CHECK((a * b).leading_monomial(ord) == a.leading_monomial(ord) * b.leading_monomial(ord));
  }
}

TEST_CASE("substitution and evaluation are exact") {
  Vars v;
  VarId xv = v.ctx.lookup("x");
  Polynomial p = v.x * v.x + v.y;
  std::map<VarId, Polynomial> sub = {{xv, v.y - c(1)}};
  CHECK(p.substitute(sub) == (v.y - c(1)) * (v.y - c(1)) + v.y);
  std::map<VarId, Rational> point = {{xv, Rational(3, 2)}, {v.ctx.lookup("y"), Rational(-1)}};
  CHECK(p.evaluate(point) == Rational(9, 4) - 1);
}

TEST_CASE("rendering uses descending active order with rational coefficients") {
  Vars v;
  Polynomial p = Polynomial::constant(Rational(1, 2)) * v.x * v.x - v.y + c(3);
  CHECK(p.str(v.ctx) == "1/2*x^2 - y + 3");
  CHECK(Polynomial().str(v.ctx) == "0");
  CHECK(Monomial::var(v.ctx.lookup("x"), 2).str(v.ctx) == "x^2");
}

TEST_CASE("fresh variables are deterministic and collision-free") {
  VariableContext ctx;
  ctx.intern("t!0");
  VarId a = ctx.fresh("t");
  VarId b = ctx.fresh("t");
  CHECK(ctx.name(a) == "t!1");
  CHECK(ctx.name(b) == "t!2");
  VariableContext ctx2;
  CHECK(ctx2.name(ctx2.fresh("t")) == "t!0");
}
