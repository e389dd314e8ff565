#include <catch2/catch_amalgamated.hpp>

#include "lirr/lattice.hpp"
#include "lirr/linear_cone.hpp"
#include "lirr/matrix.hpp"

#include "oracles.hpp"

using namespace lirr;

namespace {

struct Vars {
  VariableContext ctx;
  Polynomial x, y, t;
  Vars()
      : x(Polynomial::variable(ctx.intern("x"))),
        y(Polynomial::variable(ctx.intern("y"))),
        t(Polynomial::variable(ctx.intern("t"))) {}
};

Polynomial c(int n) { return Polynomial::constant(Rational(n)); }

bool same_cone(const PolyCone& a, const PolyCone& b) {
  for (const auto& g : a.generators)
    if (!cone_member(g, b)) return false;
  for (const auto& g : b.generators)
    if (!cone_member(g, a)) return false;
  return true;
}

}  // namespace

TEST_CASE("cone membership with certificates") {
  Vars v;
  PolyCone cxy({v.x, v.y});
  auto cert = cone_member_certificate(v.x + v.y, cxy);
  REQUIRE(cert);
  Polynomial recomposed;
  for (std::size_t i = 0; i < cert->size(); ++i)
    recomposed += cxy.generators[i].scaled((*cert)[i]);
  CHECK(recomposed == v.x + v.y);
  CHECK_FALSE(cone_member(-v.x, cxy));

  PolyCone paper({c(1), -v.y + c(2), v.x * v.x - v.y, v.x * v.x - c(1)});
  CHECK(cone_member(v.x * v.x - v.y, paper));
}

TEST_CASE("certificates recompose on random members") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y")};
  oracles::Rng rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i)
      gens.push_back(oracles::random_nonzero_poly(rng, vars, 2, 3));
    PolyCone cone(gens);
    // A known member: random nonnegative combination.
    Polynomial member;
    for (const auto& g : cone.generators) {
      Rational lambda(static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 3));
      member += g.scaled(lambda);
    }
    auto cert = cone_member_certificate(member, cone);
    REQUIRE(cert);
    Polynomial recomposed;
    for (std::size_t i = 0; i < cert->size(); ++i) {
      CHECK((*cert)[i] >= 0);
      recomposed += cone.generators[i].scaled((*cert)[i]);
    }
    CHECK(recomposed == member);
  }
}

TEST_CASE("additive units of the saturation-table cone") {
  Vars v;
  VariableContext& ctx = v.ctx;
  Polynomial z = Polynomial::variable(ctx.intern("z"));
  Polynomial w = Polynomial::variable(ctx.intern("w"));
  std::vector<Polynomial> q = {v.x * v.x - v.x * v.y, v.x * v.y - v.x * v.x,
                               v.x * v.x * v.y - z,   w - v.x * v.y * v.y,
                               z - w,                 w * w * w};
  q.insert(q.begin(), c(1));
  PolyCone cone(q);
  auto unit = cone_additive_unit(cone);
  REQUIRE(unit);
  CHECK(cone_member(*unit, cone));
  CHECK(cone_member(-*unit, cone));

  PolyCone salient({c(1), z * z * z});
  CHECK_FALSE(cone_additive_unit(salient));
  CHECK_FALSE(cone_zero_combination(salient));

  PolyCone line({v.x, -v.x});
  auto u = cone_additive_unit(line);
  REQUIRE(u);
  CHECK((*u == v.x || *u == -v.x));
}

TEST_CASE("salience cross-check: no unit iff no nonnegative zero-combination") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y")};
  oracles::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracles::random_nonzero_poly(rng, vars, 2, 3));
    PolyCone cone(gens);
    bool has_unit = cone_additive_unit(cone).has_value();
    bool has_zero = cone_zero_combination(cone).has_value();
    CHECK(has_unit == has_zero);
  }
}

TEST_CASE("Fourier-Motzkin projection of the tagged example") {
  Vars v;
  std::vector<Polynomial> gens = {v.t, -v.t - v.y + c(2), -v.t + c(1), v.t + v.x * v.x - c(2)};
  PolyCone projected = fm_project_if(PolyCone(gens), [&](const Monomial& m) {
    return m.exponent(v.ctx.lookup("t")) == 0;
  });
  PolyCone expect({c(1), -v.y + c(2), v.x * v.x - v.y, v.x * v.x - c(1)});
  CHECK(same_cone(projected, expect));
  for (const auto& g : projected.generators) CHECK(g.variables().count(v.ctx.lookup("t")) == 0);
}

TEST_CASE("Fourier-Motzkin with nothing to eliminate is the identity cone") {
  Vars v;
  PolyCone cone({v.x + v.y, v.x - v.y, c(1)});
  PolyCone kept = fm_project_if(cone, [](const Monomial&) { return true; });
  CHECK(same_cone(cone, kept));
}

TEST_CASE("pairing x+y with -x+y projects to the ray of y") {
  Vars v;
  PolyCone cone({v.x + v.y, -v.x + v.y});
  PolyCone projected =
      fm_project_if(cone, [&](const Monomial& m) { return m.exponent(v.ctx.lookup("x")) == 0; });
  CHECK(same_cone(projected, PolyCone({v.y})));
}

TEST_CASE("projection preserves membership over kept monomials") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y"), v.ctx.lookup("t")};
  VarId tv = v.ctx.lookup("t");
  oracles::Rng rng(909);
  auto keep = [&](const Monomial& m) { return m.exponent(tv) == 0; };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(oracles::random_nonzero_poly(rng, vars, 2, 3));
    PolyCone cone(gens);
    PolyCone projected = fm_project_if(cone, keep);
    for (int s = 0; s < 10; ++s) {
      Polynomial q =
          oracles::random_poly(rng, {v.ctx.lookup("x"), v.ctx.lookup("y")}, 2, 3);
      CHECK(cone_member(q, projected) == cone_member(q, cone));
    }
  }
}

TEST_CASE("lattice bases via Hermite reduction") {
  Vars v;
  LatticeBasis b = lattice_basis({c(2) * v.x, c(4) * v.x, c(3)});
  REQUIRE(b.basis.size() == 2);
  CHECK(lattice_member(c(2) * v.x, b));
  CHECK(lattice_member(c(3), b));
  CHECK_FALSE(lattice_member(v.x, b));
  CHECK_FALSE(lattice_member(c(1), b));

  CHECK(lattice_basis({}).basis.empty());
  CHECK(lattice_basis({Polynomial()}).basis.empty());

  LatticeBasis full = lattice_basis({c(2) * v.x + v.y, v.x + v.y, v.x});
  REQUIRE(full.basis.size() == 2);
  CHECK(lattice_member(v.x, full));
  CHECK(lattice_member(v.y, full));
  CHECK_FALSE(lattice_member(v.x.scaled(Rational(1, 2)), full));
}

TEST_CASE("lattice membership solves the unique linear system") {
  Vars v;
  LatticeBasis b = lattice_basis({c(2) * v.x, c(3)});
  CHECK(lattice_member(c(4) * v.x + c(6), b));
  CHECK_FALSE(lattice_member(c(3) * v.x, b));
  CHECK(lattice_member(Polynomial(), b));
  CHECK(lattice_member(Polynomial(), LatticeBasis{}));
  CHECK_FALSE(lattice_member(v.x, LatticeBasis{}));
}

TEST_CASE("Z-span equality is preserved by basis computation on random generators") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y")};
  oracles::Rng rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(oracles::random_poly(rng, vars, 1, 3));
    LatticeBasis b = lattice_basis(gens);
    // Independence: coefficient matrix has full row rank.
    if (!b.basis.empty()) {
      auto ms = detail::occurring_monomials(b.basis);
      QMatrix rows;
      for (const auto& p : b.basis) {
        QVector r;
        for (const auto& m : ms) r.push_back(p.coefficient(m));
        rows.push_back(std::move(r));
      }
      CHECK(rank(rows) == b.basis.size());
    }
    // Mutual inclusion of generators.
    for (const auto& g : gens) CHECK(lattice_member(g, b));
    for (const auto& p : b.basis) {
      LatticeBasis orig = lattice_basis(gens);
      CHECK(lattice_member(p, orig));
    }
    // Random integer combinations stay inside; a halved basis vector does not.
    Polynomial combo;
    for (const auto& g : gens) combo += g.scaled(Rational(static_cast<int>(rng() % 7) - 3));
    CHECK(lattice_member(combo, b));
  }
}

TEST_CASE("saturation of a rational row span is the full integer kernel lattice") {
  // span{(1,0,1/2),(0,1,1/2)} ∩ Z^3 contains (1,1,1), which the scaled rows
  // alone miss.
  QMatrix rows = {{Rational(1), Rational(0), Rational(1, 2)},
                  {Rational(0), Rational(1), Rational(1, 2)}};
  ZMatrix sat = saturate_lattice(rows);
  REQUIRE(sat.size() == 2);
  // (1,1,1) must be an integer combination of the saturated basis.
  QMatrix satq(sat.size());
  for (std::size_t i = 0; i < sat.size(); ++i)
    for (const auto& x : sat[i]) satq[i].push_back(Rational(x));
  QMatrix satt(3, QVector(sat.size()));
  for (std::size_t i = 0; i < sat.size(); ++i)
    for (std::size_t j = 0; j < 3; ++j) satt[j][i] = Rational(sat[i][j]);
  auto coords = solve_linear(satt, {Rational(1), Rational(1), Rational(1)});
  REQUIRE(coords);
  for (const auto& q : *coords) CHECK(is_integer(q));
}

TEST_CASE("unimodular extension covers non-trivial saturated rows") {
  ZMatrix b = {{2, 1}};
  ZMatrix u = unimodular_extension(b, 2);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == b[0]);
  CHECK(det_abs(to_q(u)) == 1);
  ZMatrix inv = unimodular_inverse(u);
  // u * inv = identity.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += u[i][k] * inv[k][j];
      CHECK(s == (i == j ? 1 : 0));
    }
}
