#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lirr/lirr.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lirr::MonomialOrder order_from_name(const std::string& name) {
  if (name == "grevlex") return lirr::MonomialOrder::grevlex();
  throw CLI::ValidationError("--order", "unknown order '" + name + "'");
}

std::optional<lirr::Theory> theory_from_name(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "lrr") return lirr::Theory::lrr;
  if (name == "lirr") return lirr::Theory::lirr;
  throw CLI::ValidationError("--theory", "expected lrr or lirr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lirr: satisfiability, consequence finding, and loop summarization "
               "in weak nonlinear arithmetic"};
  app.require_subcommand(1);

  std::string file, theory_name, order_name = "grevlex", vars_csv, t_name = "t";
  bool do_trace = false;
  app.add_flag("--trace", do_trace, "log saturation/cut/blocking steps to stderr");

  auto add_common = [&](CLI::App* sub, bool with_theory) {
    sub->add_option("file", file, "input file")->required();
    sub->add_option("--order", order_name, "monomial order (grevlex)");
    if (with_theory) sub->add_option("--theory", theory_name, "lrr or lirr");
  };

  CLI::App* solve = app.add_subcommand("solve", "check satisfiability of a script");
  add_common(solve, true);
  CLI::App* conseq = app.add_subcommand("conseq", "strongest conjunctive consequence");
  add_common(conseq, true);
  conseq->add_option("--vars", vars_csv, "comma-separated consequence variables")->required();
  CLI::App* star_cmd = app.add_subcommand("star", "approximate transitive closure of a loop");
  add_common(star_cmd, false);
  CLI::App* exp_cmd = app.add_subcommand("exp", "symbolic t-fold composition of a loop");
  add_common(exp_cmd, false);
  exp_cmd->add_option("--t", t_name, "name of the counter variable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    lirr::trace::Scoped trace_guard(do_trace ? &std::cerr : nullptr);
    lirr::VariableContext ctx;
    lirr::MonomialOrder ord = order_from_name(order_name);
    std::string text = read_file(file);

    if (solve->parsed()) {
      lirr::SmtScript script = lirr::parse_smt(text, ctx);
      if (script.commands.empty())
        script.commands.push_back({lirr::SmtScript::CommandKind::check_sat, {}});
      std::cout << lirr::run_smt_script(script, ctx, theory_from_name(theory_name), ord);
    } else if (conseq->parsed()) {
      lirr::SmtScript script = lirr::parse_smt(text, ctx);
      std::set<lirr::VarId> xs;
      std::stringstream ss(vars_csv);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        if (!ctx.contains(name)) throw std::runtime_error("undeclared variable '" + name + "'");
        xs.insert(ctx.lookup(name));
      }
      lirr::Theory theory = theory_from_name(theory_name)
                                .value_or(script.mentions_int() ? lirr::Theory::lirr
                                                                : lirr::Theory::lrr);
      lirr::AlgebraicCone cn = lirr::consequence(script.query(), xs, theory, ctx, ord);
      std::cout << cn.dump(ctx) << "\n";
    } else if (star_cmd->parsed()) {
      lirr::TsysScript ts = lirr::parse_tsys(text, ctx);
      lirr::StarFormula sf = lirr::star(ts.transition, ctx);
      std::cout << "exists " << ctx.name(sf.counter) << ". "
                << lirr::render_formula_human(sf.body, ctx) << "\n";
    } else if (exp_cmd->parsed()) {
      lirr::TsysScript ts = lirr::parse_tsys(text, ctx);
      if (t_name.find('\'') != std::string::npos || ctx.contains(t_name))
        throw std::runtime_error("counter name '" + t_name + "' is taken");
      lirr::VarId t = ctx.intern(t_name);
      lirr::Formula body = lirr::exp_closure(ts.transition, t, ctx);
      std::cout << lirr::render_formula_human(body, ctx) << "\n";
    }
  } catch (const lirr::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
