#include <catch2/catch_amalgamated.hpp>

#include "lirr/formula.hpp"
#include "lirr/sat.hpp"

#include "oracles.hpp"

using namespace lirr;

namespace {

struct Vars {
  VariableContext ctx;
  Polynomial x, y;
  Vars()
      : x(Polynomial::variable(ctx.intern("x"))),
        y(Polynomial::variable(ctx.intern("y"))) {}
};

Polynomial c(int n) { return Polynomial::constant(Rational(n)); }

std::vector<Cube> all_cubes(const Formula& f) {
  CubeEnumerator e(f);
  std::vector<Cube> out;
  while (auto cube = e.next()) out.push_back(*cube);
  return out;
}

// Truth-table equivalence of (the disjunction of) cubes with the formula.
bool cubes_cover_formula(const Formula& f, const std::vector<Cube>& cubes) {
  Formula nf = f.nnf();
  std::vector<Atom> atoms(nf.atoms().begin(), nf.atoms().end());
  if (atoms.size() > 16) throw std::logic_error("too many atoms for the truth table");
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    std::map<Atom, bool> assign;
    for (std::size_t i = 0; i < atoms.size(); ++i) assign[atoms[i]] = (mask >> i) & 1;
    // Evaluate the formula propositionally.
    std::function<bool(const Formula&)> eval = [&](const Formula& g) -> bool {
      switch (g.kind()) {
        case Formula::Kind::tru: return true;
        case Formula::Kind::fls: return false;
        case Formula::Kind::neg: return !eval(g.kids()[0]);
        case Formula::Kind::lit: return assign.at(g.atom()) == g.sign();
        case Formula::Kind::conj:
          return std::all_of(g.kids().begin(), g.kids().end(), eval);
        case Formula::Kind::disj:
          return std::any_of(g.kids().begin(), g.kids().end(), eval);
      }
      return false;
    };
    bool fval = eval(nf);
    bool cval = false;
    for (const auto& cube : cubes) {
      bool holds = true;
      Formula cf = cube.to_formula();
      holds = eval(cf.nnf());
      cval |= holds;
    }
    if (fval != cval) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("strict inequalities desugar into nonneg plus disequality") {
  Vars v;
  Formula f = Formula::lt(v.x, v.y).nnf();
  REQUIRE(f.kind() == Formula::Kind::conj);
  REQUIRE(f.kids().size() == 2);
  CHECK(f.kids()[0].atom().kind == Atom::Kind::nonneg);
  CHECK(f.kids()[1].atom().kind == Atom::Kind::zero);
  CHECK_FALSE(f.kids()[1].sign());
}

TEST_CASE("negation normal form folds double negation") {
  Vars v;
  Formula a = Formula::le(c(0), v.x);
  Formula f = Formula::neg(Formula::neg(a)).nnf();
  REQUIRE(f.kind() == Formula::Kind::lit);
  CHECK(f.sign());
  CHECK(f.atom() == a.nnf().atom());
  Formula g = Formula::neg(a).nnf();
  REQUIRE(g.kind() == Formula::Kind::lit);
  CHECK_FALSE(g.sign());
}

TEST_CASE("nnf preserves satisfaction at sampled rational points") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y")};
  oracles::Rng rng(271828);
  for (int trial = 0; trial < 30; ++trial) {
    // Random small formula tree.
    std::function<Formula(int)> gen = [&](int depth) -> Formula {
      if (depth == 0 || rng() % 3 == 0) {
        Polynomial p = oracles::random_poly(rng, vars, 2, 3);
        switch (rng() % 3) {
          case 0: return Formula::le(Polynomial(), p);
          case 1: return Formula::eq(Polynomial(), p);
          default: return Formula::is_int(p);
        }
      }
      switch (rng() % 3) {
        case 0: return Formula::neg(gen(depth - 1));
        case 1: return Formula::conj({gen(depth - 1), gen(depth - 1)});
        default: return Formula::disj({gen(depth - 1), gen(depth - 1)});
      }
    };
    Formula f = gen(3);
    Formula n = f.nnf();
    CHECK(n.is_nnf());
    for (int s = 0; s < 10; ++s) {
      std::map<VarId, Rational> pt;
      for (auto var : vars) pt[var] = oracles::random_rational(rng, -4, 4, 2);
      CHECK(f.evaluate(pt) == n.evaluate(pt));
    }
  }
}

TEST_CASE("atom normalization keeps equivalent comparisons identical") {
  Vars v;
  // not(x = y) and not(y = x) meet in the same atom.
  Formula a = Formula::neg(Formula::eq(v.x, v.y)).nnf();
  Formula b = Formula::neg(Formula::eq(v.y, v.x)).nnf();
  REQUIRE(a.kind() == Formula::Kind::lit);
  CHECK(a.atom() == b.atom());
  CHECK_FALSE(a.sign());
  // Positive scaling of inequalities is normalized away.
  CHECK(Atom::nonneg(v.x.scaled(Rational(2))) == Atom::nonneg(v.x));
  CHECK(Atom::nonneg(-v.x) == Atom::nonneg(-v.x.scaled(Rational(3))));
}

TEST_CASE("a single conjunction yields exactly one cube") {
  Vars v;
  Formula f = Formula::conj({Formula::le(c(0), v.x), Formula::eq(v.y, c(1))});
  auto cubes = all_cubes(f);
  REQUIRE(cubes.size() == 1);
  CHECK(cubes[0].p.size() == 3);  // x, y-1, 1-y (equality expanded)
  CHECK(cubes[0].q.empty());
}

TEST_CASE("(A or B) and C enumerates two cubes") {
  Vars v;
  Formula a = Formula::le(c(0), v.x);
  Formula b = Formula::le(c(0), v.y);
  Formula cc = Formula::le(c(1), v.x + v.y);
  Formula f = Formula::conj({Formula::disj({a, b}), cc});
  auto cubes = all_cubes(f);
  REQUIRE(cubes.size() == 2);
  for (const auto& cube : cubes) CHECK(cube.p.size() == 2);
  CHECK(cubes_cover_formula(f, cubes));
}

TEST_CASE("external blocking removes cubes") {
  Vars v;
  Formula a = Formula::le(c(0), v.x);
  Formula b = Formula::le(c(0), v.y);
  Formula cc = Formula::le(c(1), v.x + v.y);
  Formula f = Formula::conj({Formula::disj({a, b}), cc});
  CubeEnumerator e(f);
  // Block the A-branch up front.
  e.add_clause({{a.nnf().atom(), false}});
  int count = 0;
  bool saw_a_branch = false;
  while (auto cube = e.next()) {
    ++count;
    for (const auto& p : cube->p)
      if (Atom::nonneg(p) == a.nnf().atom()) saw_a_branch = true;
  }
  CHECK(count >= 1);
  CHECK_FALSE(saw_a_branch);
}

TEST_CASE("cube disjunction is propositionally equivalent to the formula") {
  Vars v;
  std::vector<VarId> vars = {v.ctx.lookup("x"), v.ctx.lookup("y")};
  oracles::Rng rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Formula> lits;
    for (int i = 0; i < 3; ++i)
      lits.push_back(Formula::le(Polynomial(), oracles::random_nonzero_poly(rng, vars, 1, 2)));
    Formula f = Formula::disj(
        {Formula::conj({lits[0], lits[1]}), Formula::conj({lits[1], lits[2]}),
         Formula::neg(lits[0])});
    auto cubes = all_cubes(f);
    CHECK(cubes_cover_formula(f, cubes));
  }
}

TEST_CASE("tautologies and contradictions") {
  Vars v;
  Formula a = Formula::le(c(0), v.x);
  auto taut = all_cubes(Formula::disj({a, Formula::neg(a)}));
  CHECK(!taut.empty());
  auto contra = all_cubes(Formula::conj({a, Formula::neg(a)}));
  CHECK(contra.empty());
  auto none = all_cubes(Formula::fls());
  CHECK(none.empty());
  auto one = all_cubes(Formula::tru());
  REQUIRE(one.size() == 1);
  CHECK(one[0].p.empty());
}

TEST_CASE("constant atoms fold during normalization") {
  Formula f = Formula::le(c(0), c(1)).nnf();
  CHECK(f.kind() == Formula::Kind::tru);
  Formula g = Formula::le(c(1), c(0)).nnf();
  CHECK(g.kind() == Formula::Kind::fls);
  Formula h = Formula::is_int(Polynomial::constant(Rational(1, 2))).nnf();
  CHECK(h.kind() == Formula::Kind::fls);
}

TEST_CASE("transition renaming is capture-free and idempotent on untouched formulas") {
  VariableContext ctx;
  VarId x = ctx.intern("x");
  VarId xp = ctx.primed(x);
  TransitionFormula f;
  f.vocab = {{x, xp}};
  f.formula = Formula::le(Polynomial::variable(xp), Polynomial::variable(x) + c(1));
  Formula renamed = rename(f, RenameScheme::prime_to_doubleprime, ctx);
  VarId xpp = ctx.lookup("x''");
  bool uses_xpp = false, uses_xp = false;
  renamed.visit_atoms([&](const Atom& a, bool) {
    uses_xpp |= a.poly.variables().count(xpp) != 0;
    uses_xp |= a.poly.variables().count(xp) != 0;
  });
  CHECK(uses_xpp);
  CHECK_FALSE(uses_xp);

  TransitionFormula g;
  g.vocab = {{x, xp}};
  g.formula = Formula::le(c(0), Polynomial::variable(x));  // no primed vars
  Formula renamed2 = rename(g, RenameScheme::prime_to_doubleprime, ctx);
  std::map<VarId, Rational> pt = {{x, Rational(2)}};
  CHECK(renamed2.evaluate(pt) == g.formula.evaluate(pt));
}

TEST_CASE("composition agrees with relational semantics at sampled points") {
  VariableContext ctx;
  VarId x = ctx.intern("x");
  VarId xp = ctx.primed(x);
  // F: x' = x + 1.
  TransitionFormula f;
  f.vocab = {{x, xp}};
  f.formula = Formula::eq(Polynomial::variable(xp), Polynomial::variable(x) + c(1));
  Formula left = rename(f, RenameScheme::prime_to_doubleprime, ctx);
  Formula right = rename(f, RenameScheme::unprime_to_doubleprime, ctx);
  Formula comp = Formula::conj({left, right});
  VarId xpp = ctx.lookup("x''");
  // x'' must be x+1 and x' must be x''+1 = x+2.
  std::map<VarId, Rational> pt = {{x, Rational(5)}, {xpp, Rational(6)}, {xp, Rational(7)}};
  CHECK(comp.evaluate(pt));
  pt[xp] = Rational(8);
  CHECK_FALSE(comp.evaluate(pt));
}
