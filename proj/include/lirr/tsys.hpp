#pragma once

#include <string>
#include <vector>

#include "lirr/formula.hpp"
#include "lirr/sexpr.hpp"
#include "lirr/smt.hpp"

namespace lirr {

// Transition-system format:
//   (vars (w x y z))
//   (body <formula over plain and primed names>)
//   (assert <formula>)   ; optional, recorded for clients
// Primed names are <name>'; only declared variables (and their primes) may
// appear in the body.
struct TsysScript {
  TransitionFormula transition;
  std::vector<Formula> assertions;
};

inline TsysScript parse_tsys(const std::string& text, VariableContext& ctx) {
  auto exprs = parse_sexprs(text);
  std::vector<std::string> declared;
  TsysScript out;
  bool have_vars = false, have_body = false;
  for (const auto& e : exprs) {
    if (e.head_is("vars")) {
      if (have_vars) throw ParseError("duplicate (vars ...)", e.line, e.col);
      if (e.size() != 2 || e.at(1).is_atom)
        throw ParseError("vars takes a name list", e.line, e.col);
      for (const auto& v : e.at(1).items) {
        if (!v.is_atom) throw ParseError("expected variable name", v.line, v.col);
        if (v.text.find('\'') != std::string::npos || v.text.find('!') != std::string::npos)
          throw ParseError("plain names only in (vars ...)", v.line, v.col);
        VarId x = ctx.intern(v.text);
        VarId xp = ctx.primed(x);
        out.transition.vocab.push_back({x, xp});
        declared.push_back(v.text);
        declared.push_back(v.text + "'");
      }
      have_vars = true;
    } else if (e.head_is("body")) {
      if (!have_vars) throw ParseError("(vars ...) must precede (body ...)", e.line, e.col);
      if (have_body) throw ParseError("duplicate (body ...)", e.line, e.col);
      if (e.size() != 2) throw ParseError("body takes one formula", e.line, e.col);
      smt_detail::TermParser tp{ctx, declared};
      out.transition.formula = tp.formula(e.at(1));
      have_body = true;
    } else if (e.head_is("assert")) {
      if (!have_vars) throw ParseError("(vars ...) must precede (assert ...)", e.line, e.col);
      if (e.size() != 2) throw ParseError("assert takes one formula", e.line, e.col);
      smt_detail::TermParser tp{ctx, declared};
      out.assertions.push_back(tp.formula(e.at(1)));
    } else {
      throw ParseError("unknown transition-system element", e.line, e.col);
    }
  }
  if (!have_vars) throw ParseError("missing (vars ...)", 1, 1);
  if (!have_body) throw ParseError("missing (body ...)", 1, 1);
  return out;
}

}  // namespace lirr
