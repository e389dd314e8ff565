#pragma once

// Umbrella header for the lirr library: exact reasoning in the weak
// arithmetic theories of linear real rings (LRR) and linear integer/real
// rings (LIRR) — satisfiability, complete consequence finding over
// algebraic cones, and recurrence-based loop summarization.

#include "lirr/algebraic_cone.hpp"
#include "lirr/consequence.hpp"
#include "lirr/cutting.hpp"
#include "lirr/formula.hpp"
#include "lirr/groebner.hpp"
#include "lirr/hilbert.hpp"
#include "lirr/invgen.hpp"
#include "lirr/lattice.hpp"
#include "lirr/linear_cone.hpp"
#include "lirr/matrix.hpp"
#include "lirr/monomial.hpp"
#include "lirr/ordering.hpp"
#include "lirr/polynomial.hpp"
#include "lirr/rational.hpp"
#include "lirr/sat.hpp"
#include "lirr/sexpr.hpp"
#include "lirr/simplex.hpp"
#include "lirr/smt.hpp"
#include "lirr/solver.hpp"
#include "lirr/trace.hpp"
#include "lirr/tsys.hpp"
#include "lirr/variable.hpp"
