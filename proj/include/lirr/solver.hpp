#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lirr/algebraic_cone.hpp"
#include "lirr/formula.hpp"
#include "lirr/sat.hpp"
#include "lirr/trace.hpp"

namespace lirr {

enum class Theory { lrr, lirr };

// M(C): the quotient-ring model carried by a reduced, regular, consistent
// cone. M(C) satisfies 0 <= q iff q is in the cone, 0 = q iff q is in the
// ideal.
struct ConeModel {
  AlgebraicCone cone;
};

// M(C, L): cone plus point-lattice basis (reduced against the ideal); the
// represented polynomial lattice is <Z> + Z-span(basis). Satisfies Int(q)
// iff red_Z(q) is in the point lattice.
struct ConeLatticeModel {
  AlgebraicCone cone;
  LatticeBasis lattice;
};

enum class UnsatReason { inconsistent_cone, q_violation, r_violation, t_violation };

inline std::string to_string(UnsatReason r) {
  switch (r) {
    case UnsatReason::inconsistent_cone: return "inconsistent-cone";
    case UnsatReason::q_violation: return "strict-bound-violated";
    case UnsatReason::r_violation: return "disequality-violated";
    case UnsatReason::t_violation: return "non-integrality-violated";
  }
  return "?";
}

template <typename Model>
struct CubeOutcome {
  std::optional<Model> model;
  UnsatReason reason = UnsatReason::inconsistent_cone;
  bool sat() const { return model.has_value(); }
};

// Conjunctive LRR satisfiability: saturate the nonnegative atoms, then
// check the negative ones against the minimal model.
inline CubeOutcome<ConeModel> solve_lrr_cube(const Cube& cube,
                                             const MonomialOrder& ord = MonomialOrder::grevlex()) {
  if (cube.has_int_atoms())
    throw std::invalid_argument("solve_lrr_cube: Int atoms present (use LIRR)");
  CubeOutcome<ConeModel> out;
  AlgebraicCone c = saturate(cube.p, ord);
  if (c.inconsistent()) {
    out.reason = UnsatReason::inconsistent_cone;
    return out;
  }
  for (const auto& q : cube.q)
    if (member(q, c)) {
      out.reason = UnsatReason::q_violation;
      return out;
    }
  for (const auto& r : cube.r)
    if (c.ideal().reduces_to_zero(r)) {
      out.reason = UnsatReason::r_violation;
      return out;
    }
  out.model = ConeModel{std::move(c)};
  return out;
}

// Conjunctive LIRR satisfiability: regular cutting-plane closure with
// respect to the asserted Int terms (plus 1), then model checking against
// the coherent cone/lattice pair.
inline CubeOutcome<ConeLatticeModel> solve_lirr_cube(
    const Cube& cube, VariableContext& ctx, const MonomialOrder& ord = MonomialOrder::grevlex()) {
  CubeOutcome<ConeLatticeModel> out;
  AlgebraicCone c0 = saturate(cube.p, ord);
  std::vector<Polynomial> b = cube.s;
  b.push_back(Polynomial::constant(Rational(1)));
  AlgebraicCone c = rcp(c0, b, ctx);
  std::vector<Polynomial> reduced_b;
  for (const auto& bi : b) reduced_b.push_back(c.ideal().reduce(bi));
  LatticeBasis basis = lattice_basis(reduced_b);
  if (c.inconsistent()) {
    out.reason = UnsatReason::inconsistent_cone;
    return out;
  }
  for (const auto& q : cube.q)
    if (member(q, c)) {
      out.reason = UnsatReason::q_violation;
      return out;
    }
  for (const auto& r : cube.r)
    if (c.ideal().reduces_to_zero(r)) {
      out.reason = UnsatReason::r_violation;
      return out;
    }
  for (const auto& t : cube.t)
    if (lattice_member(c.ideal().reduce(t), basis)) {
      out.reason = UnsatReason::t_violation;
      return out;
    }
  out.model = ConeLatticeModel{std::move(c), std::move(basis)};
  return out;
}

namespace detail {

inline bool atom_holds(const Atom& a, const AlgebraicCone& cone, const LatticeBasis* lattice) {
  switch (a.kind) {
    case Atom::Kind::nonneg: return member(a.poly, cone);
    case Atom::Kind::zero: return cone.ideal().reduces_to_zero(a.poly);
    case Atom::Kind::is_int:
      if (!lattice) throw std::invalid_argument("Int atom against an LRR model");
      return lattice_member(cone.ideal().reduce(a.poly), *lattice);
  }
  throw std::logic_error("unreachable");
}

inline bool eval_model(const Formula& f, const AlgebraicCone& cone, const LatticeBasis* lattice) {
  switch (f.kind()) {
    case Formula::Kind::tru: return true;
    case Formula::Kind::fls: return false;
    case Formula::Kind::neg: return !eval_model(f.kids()[0], cone, lattice);
    case Formula::Kind::lit: return atom_holds(f.atom(), cone, lattice) == f.sign();
    case Formula::Kind::conj:
      for (const auto& k : f.kids())
        if (!eval_model(k, cone, lattice)) return false;
      return true;
    case Formula::Kind::disj:
      for (const auto& k : f.kids())
        if (eval_model(k, cone, lattice)) return true;
      return false;
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

inline bool check_model(const ConeModel& m, const Formula& f) {
  return detail::eval_model(f, m.cone, nullptr);
}
inline bool check_model(const ConeLatticeModel& m, const Formula& f) {
  return detail::eval_model(f, m.cone, &m.lattice);
}

// Ground satisfiability with boolean structure: enumerate propositional
// cubes, run the theory solver per cube; theory-refuted cubes stay blocked
// and the first theory model wins.
struct GroundResult {
  bool sat = false;
  std::optional<ConeModel> lrr_model;
  std::optional<ConeLatticeModel> lirr_model;
  int cubes_tried = 0;
};

inline GroundResult solve_ground(const Formula& f, Theory theory, VariableContext& ctx,
                                 const MonomialOrder& ord = MonomialOrder::grevlex()) {
  GroundResult out;
  CubeEnumerator cubes(f);
  while (auto cube = cubes.next()) {
    ++out.cubes_tried;
    if (theory == Theory::lrr) {
      auto o = solve_lrr_cube(*cube, ord);
      if (o.sat()) {
        out.sat = true;
        out.lrr_model = std::move(o.model);
        return out;
      }
      trace::log("solve: cube refuted (" + to_string(o.reason) + ")");
    } else {
      auto o = solve_lirr_cube(*cube, ctx, ord);
      if (o.sat()) {
        out.sat = true;
        out.lirr_model = std::move(o.model);
        return out;
      }
      trace::log("solve: cube refuted (" + to_string(o.reason) + ")");
    }
  }
  return out;
}

}  // namespace lirr
