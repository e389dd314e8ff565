#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lirr/consequence.hpp"
#include "lirr/sexpr.hpp"
#include "lirr/solver.hpp"

namespace lirr {

// Script format, s-expression based:
//   (declare-const x Real|Int)
//   (assert <formula>)
//   (check-sat) (get-model) (find-consequences (x y ...))
// Terms: numerals, rational literals (/ a b) or a/b, + - *, comparisons
// <= < >= > =, connectives and/or/not, and int(t). Int-sorted constants
// contribute an implicit Int(x) atom to every query. Quantifiers and
// symbolic division are rejected.

struct SmtScript {
  struct Declaration {
    VarId var;
    bool is_int;
  };
  enum class CommandKind { check_sat, get_model, find_consequences };
  struct Command {
    CommandKind kind;
    std::vector<VarId> vars;  // for find_consequences
  };
  std::vector<Declaration> declarations;
  std::vector<Formula> assertions;
  std::vector<Command> commands;

  bool mentions_int() const {
    for (const auto& d : declarations)
      if (d.is_int) return true;
    for (const auto& f : assertions) {
      bool found = false;
      f.visit_atoms([&](const Atom& a, bool) { found |= a.kind == Atom::Kind::is_int; });
      if (found) return true;
    }
    return false;
  }

  // All assertions plus the implicit integrality atoms.
  Formula query() const {
    std::vector<Formula> fs = assertions;
    for (const auto& d : declarations)
      if (d.is_int) fs.push_back(Formula::is_int(Polynomial::variable(d.var)));
    return Formula::conj(std::move(fs));
  }
};

namespace smt_detail {

inline bool is_numeral(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) break;
  return i == s.size();
}

inline bool is_rational_literal(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 >= s.size()) return false;
  std::string a = s.substr(0, slash), b = s.substr(slash + 1);
  if (!a.empty() && a[0] == '-') a = a.substr(1);
  return is_numeral(a) && is_numeral(b);
}

struct TermParser {
  VariableContext& ctx;
  const std::vector<std::string>& declared;  // names allowed as symbols

  bool declared_name(const std::string& s) const {
    return std::find(declared.begin(), declared.end(), s) != declared.end();
  }

  Rational numeral_arg(const SExpr& e) const {
    if (e.is_atom && (is_numeral(e.text) || is_rational_literal(e.text)))
      return parse_rational(e.text);
    if (!e.is_atom && e.head_is("-") && e.size() == 2) return -numeral_arg(e.at(1));
    throw ParseError("expected numeral", e.line, e.col);
  }

  Polynomial term(const SExpr& e) const {
    if (e.is_atom) {
      if (is_numeral(e.text) || is_rational_literal(e.text))
        return Polynomial::constant(parse_rational(e.text));
      if (declared_name(e.text)) return Polynomial::variable(ctx.lookup(e.text));
      throw ParseError("undeclared symbol '" + e.text + "'", e.line, e.col);
    }
    if (e.items.empty() || !e.items[0].is_atom)
      throw ParseError("expected operator", e.line, e.col);
    const std::string& op = e.items[0].text;
    if (op == "+") {
      Polynomial r;
      for (std::size_t i = 1; i < e.size(); ++i) r += term(e.at(i));
      return r;
    }
    if (op == "-") {
      if (e.size() == 2) return -term(e.at(1));
      if (e.size() < 2) throw ParseError("'-' needs arguments", e.line, e.col);
      Polynomial r = term(e.at(1));
      for (std::size_t i = 2; i < e.size(); ++i) r -= term(e.at(i));
      return r;
    }
    if (op == "*") {
      Polynomial r = Polynomial::constant(Rational(1));
      for (std::size_t i = 1; i < e.size(); ++i) r = r * term(e.at(i));
      return r;
    }
    if (op == "/") {
      if (e.size() != 3) throw ParseError("'/' is only a rational literal", e.line, e.col);
      Rational a = numeral_arg(e.at(1));
      Rational b = numeral_arg(e.at(2));
      if (b == 0) throw ParseError("division by zero", e.line, e.col);
      return Polynomial::constant(a / b);
    }
    throw ParseError("unknown term constructor '" + op + "'", e.line, e.col);
  }

  Formula formula(const SExpr& e) const {
    if (e.is_atom) {
      if (e.text == "true") return Formula::tru();
      if (e.text == "false") return Formula::fls();
      throw ParseError("expected formula", e.line, e.col);
    }
    if (e.items.empty() || !e.items[0].is_atom)
      throw ParseError("expected formula head", e.line, e.col);
    const std::string& op = e.items[0].text;
    if (op == "forall" || op == "exists")
      throw ParseError("quantifiers are not supported (ground formulas only)", e.line, e.col);
    if (op == "and" || op == "or") {
      std::vector<Formula> kids;
      for (std::size_t i = 1; i < e.size(); ++i) kids.push_back(formula(e.at(i)));
      return op == "and" ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
    if (op == "not") {
      if (e.size() != 2) throw ParseError("'not' takes one argument", e.line, e.col);
      return Formula::neg(formula(e.at(1)));
    }
    if (op == "int") {
      if (e.size() != 2) throw ParseError("'int' takes one argument", e.line, e.col);
      return Formula::is_int(term(e.at(1)));
    }
    if (op == "<=" || op == "<" || op == ">=" || op == ">" || op == "=") {
      if (e.size() < 3) throw ParseError("comparison needs two arguments", e.line, e.col);
      std::vector<Formula> chain;
      for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        Polynomial a = term(e.at(i));
        Polynomial b = term(e.at(i + 1));
        if (op == "<=") chain.push_back(Formula::le(a, b));
        if (op == "<") chain.push_back(Formula::lt(a, b));
        if (op == ">=") chain.push_back(Formula::le(b, a));
        if (op == ">") chain.push_back(Formula::lt(b, a));
        if (op == "=") chain.push_back(Formula::eq(a, b));
      }
      return Formula::conj(std::move(chain));
    }
    throw ParseError("unknown formula constructor '" + op + "'", e.line, e.col);
  }
};

}  // namespace smt_detail

inline SmtScript parse_smt(const std::string& text, VariableContext& ctx) {
  SmtScript script;
  std::vector<std::string> declared;
  smt_detail::TermParser tp{ctx, declared};
  for (const auto& e : parse_sexprs(text)) {
    if (e.is_atom) throw ParseError("expected command", e.line, e.col);
    if (e.head_is("declare-const")) {
      if (e.size() != 3 || !e.at(1).is_atom || !e.at(2).is_atom)
        throw ParseError("declare-const takes a name and a sort", e.line, e.col);
      const std::string& name = e.at(1).text;
      const std::string& sort = e.at(2).text;
      if (sort != "Real" && sort != "Int")
        throw ParseError("unknown sort '" + sort + "'", e.at(2).line, e.at(2).col);
      if (name.find('!') != std::string::npos)
        throw ParseError("'!' is reserved in names", e.at(1).line, e.at(1).col);
      if (std::find(declared.begin(), declared.end(), name) != declared.end())
        throw ParseError("duplicate declaration of '" + name + "'", e.at(1).line, e.at(1).col);
      declared.push_back(name);
      script.declarations.push_back({ctx.intern(name), sort == "Int"});
    } else if (e.head_is("assert")) {
      if (e.size() != 2) throw ParseError("assert takes one formula", e.line, e.col);
      script.assertions.push_back(tp.formula(e.at(1)));
    } else if (e.head_is("check-sat")) {
      script.commands.push_back({SmtScript::CommandKind::check_sat, {}});
    } else if (e.head_is("get-model")) {
      script.commands.push_back({SmtScript::CommandKind::get_model, {}});
    } else if (e.head_is("find-consequences")) {
      if (e.size() != 2 || e.at(1).is_atom)
        throw ParseError("find-consequences takes a variable list", e.line, e.col);
      SmtScript::Command cmd{SmtScript::CommandKind::find_consequences, {}};
      for (const auto& v : e.at(1).items) {
        if (!v.is_atom || std::find(declared.begin(), declared.end(), v.text) == declared.end())
          throw ParseError("undeclared variable in find-consequences", v.line, v.col);
        cmd.vars.push_back(ctx.lookup(v.text));
      }
      script.commands.push_back(std::move(cmd));
    } else {
      throw ParseError("unknown command", e.line, e.col);
    }
  }
  return script;
}

// ---- rendering ----

inline std::string render_term_sexpr(const Polynomial& p, const VariableContext& ctx) {
  if (p.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [m, c] : p.terms()) {
    std::string coeff = is_integer(c) && c >= 0 ? to_string(c)
                        : c < 0 && is_integer(c) ? "(- " + to_string(-c) + ")"
                        : c < 0 ? "(- (/ " + num(-c).str() + " " + den(c).str() + "))"
                                : "(/ " + num(c).str() + " " + den(c).str() + ")";
    if (m.is_one()) {
      parts.push_back(coeff);
      continue;
    }
    std::string vars;
    for (const auto& [v, exp] : m.entries())
      for (std::uint32_t i = 0; i < exp; ++i) vars += " " + ctx.name(v);
    if (c == 1 && m.entries().size() == 1 && m.entries()[0].second == 1) {
      parts.push_back(ctx.name(m.entries()[0].first));
    } else if (c == 1) {
      parts.push_back("(*" + vars + ")");
    } else {
      parts.push_back("(* " + coeff + vars + ")");
    }
  }
  if (parts.size() == 1) return parts[0];
  std::string s = "(+";
  for (const auto& t : parts) s += " " + t;
  return s + ")";
}

inline std::string render_formula_sexpr(const Formula& f, const VariableContext& ctx) {
  switch (f.kind()) {
    case Formula::Kind::tru: return "(and)";
    case Formula::Kind::fls: return "(or)";
    case Formula::Kind::neg: return "(not " + render_formula_sexpr(f.kids()[0], ctx) + ")";
    case Formula::Kind::lit: {
      std::string a;
      switch (f.atom().kind) {
        case Atom::Kind::nonneg: a = "(<= 0 " + render_term_sexpr(f.atom().poly, ctx) + ")"; break;
        case Atom::Kind::zero: a = "(= 0 " + render_term_sexpr(f.atom().poly, ctx) + ")"; break;
        case Atom::Kind::is_int: a = "(int " + render_term_sexpr(f.atom().poly, ctx) + ")"; break;
      }
      return f.sign() ? a : "(not " + a + ")";
    }
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      std::string s = f.kind() == Formula::Kind::conj ? "(and" : "(or";
      for (const auto& k : f.kids()) s += " " + render_formula_sexpr(k, ctx);
      return s + ")";
    }
  }
  throw std::logic_error("unreachable");
}

inline std::string render_formula_human(const Formula& f, const VariableContext& ctx,
                                        bool parenthesize = false) {
  auto wrap = [&](const std::string& s) { return parenthesize ? "(" + s + ")" : s; };
  switch (f.kind()) {
    case Formula::Kind::tru: return "true";
    case Formula::Kind::fls: return "false";
    case Formula::Kind::neg: return "not " + render_formula_human(f.kids()[0], ctx, true);
    case Formula::Kind::lit: {
      const Atom& a = f.atom();
      std::string s;
      switch (a.kind) {
        case Atom::Kind::nonneg: s = a.poly.str(ctx) + " >= 0"; break;
        case Atom::Kind::zero: s = a.poly.str(ctx) + " = 0"; break;
        case Atom::Kind::is_int: s = "int(" + a.poly.str(ctx) + ")"; break;
      }
      if (!f.sign()) return "not (" + s + ")";
      return s;
    }
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      std::string op = f.kind() == Formula::Kind::conj ? " and " : " or ";
      std::string s;
      for (std::size_t i = 0; i < f.kids().size(); ++i) {
        if (i) s += op;
        s += render_formula_human(f.kids()[i], ctx, true);
      }
      return wrap(s);
    }
  }
  throw std::logic_error("unreachable");
}

inline bool formula_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::tru:
    case Formula::Kind::fls: return true;
    case Formula::Kind::lit: return a.sign() == b.sign() && a.atom() == b.atom();
    default: {
      if (a.kids().size() != b.kids().size()) return false;
      for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (!formula_equal(a.kids()[i], b.kids()[i])) return false;
      return true;
    }
  }
}

// Runs a parsed script; returns stdout-style text (first line per command
// is the verdict, payload lines follow).
inline std::string run_smt_script(const SmtScript& script, VariableContext& ctx,
                                  std::optional<Theory> theory_override = std::nullopt,
                                  const MonomialOrder& ord = MonomialOrder::grevlex()) {
  Theory theory =
      theory_override.value_or(script.mentions_int() ? Theory::lirr : Theory::lrr);
  std::string out;
  Formula query = script.query();
  std::optional<GroundResult> last;
  for (const auto& cmd : script.commands) {
    switch (cmd.kind) {
      case SmtScript::CommandKind::check_sat: {
        last = solve_ground(query, theory, ctx, ord);
        out += last->sat ? "sat\n" : "unsat\n";
        break;
      }
      case SmtScript::CommandKind::get_model: {
        if (!last) last = solve_ground(query, theory, ctx, ord);
        if (!last->sat) {
          out += "no model (unsat)\n";
          break;
        }
        if (last->lrr_model) {
          out += last->lrr_model->cone.dump(ctx) + "\n";
        } else {
          out += last->lirr_model->cone.dump(ctx) + "\nB:";
          for (const auto& b : last->lirr_model->lattice.basis)
            out += " " + b.str(ctx) + ";";
          out += "\n";
        }
        break;
      }
      case SmtScript::CommandKind::find_consequences: {
        std::set<VarId> xs(cmd.vars.begin(), cmd.vars.end());
        AlgebraicCone cn = consequence(query, xs, theory, ctx, ord);
        out += cn.dump(ctx) + "\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace lirr
