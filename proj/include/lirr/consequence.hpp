#pragma once

#include <set>

#include "lirr/solver.hpp"

namespace lirr {

// Lazy consequence finding: the strongest conjunctive consequence of a
// ground formula over the chosen variables, as a reduced algebraic cone.
// The loop pulls a theory model per propositional cube, projects its cone
// onto X, intersects into the accumulator (which starts at the whole ring),
// and blocks models whose consequences are already included.
inline AlgebraicCone consequence(const Formula& f, const std::set<VarId>& xs, Theory theory,
                                 VariableContext& ctx,
                                 const MonomialOrder& ord = MonomialOrder::grevlex(),
                                 int* iterations = nullptr) {
  AlgebraicCone acc = AlgebraicCone::everything(ord);
  CubeEnumerator cubes(f);
  if (iterations) *iterations = 0;
  while (auto cube = cubes.next()) {
    std::optional<AlgebraicCone> model_cone;
    if (theory == Theory::lrr) {
      auto o = solve_lrr_cube(*cube, ord);
      if (o.sat()) model_cone = std::move(o.model->cone);
    } else {
      // The point-lattice part of the LIRR model is ignored here.
      auto o = solve_lirr_cube(*cube, ctx, ord);
      if (o.sat()) model_cone = std::move(o.model->cone);
    }
    if (!model_cone) continue;
    if (iterations) ++*iterations;
    AlgebraicCone projected = project(*model_cone, xs);
    acc = intersect(acc, projected, ctx);
    // Block any model whose consequence cone is inside the accumulator:
    // not (every z = 0 and every p >= 0) over the accumulated pair.
    std::vector<std::pair<Atom, bool>> clause;
    for (const auto& z : acc.ideal().generators()) clause.push_back({Atom::zero(z), false});
    for (const auto& p : acc.positives()) {
      if (p.is_constant()) continue;  // constant atoms fold away
      clause.push_back({Atom::nonneg(p), false});
    }
    trace::log("consequence: intersected a cube cone; blocking");
    if (clause.empty()) break;  // accumulator is the trivial cone; nothing can shrink it
    cubes.add_clause(clause);
  }
  // The consequence cone is regular, so re-saturating its generators leaves
  // the cone unchanged while making the ideal part carry all units.
  std::vector<Polynomial> gens;
  for (const auto& z : acc.ideal().generators()) {
    gens.push_back(z);
    gens.push_back(-z);
  }
  for (const auto& p : acc.positives()) gens.push_back(p);
  return saturate(gens, ord);
}

}  // namespace lirr
