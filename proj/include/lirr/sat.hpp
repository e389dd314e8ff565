#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "lirr/formula.hpp"
#include "lirr/trace.hpp"

namespace lirr {

// Propositional backend: a small watched-literal DPLL that enumerates
// satisfying cubes of an NNF formula under a growing clause set. Each
// emitted cube is minimized against the input formula (so it is a genuine
// cube of the DNF, with don't-care literals dropped) and then blocked.
// Callers may add further blocking clauses, introducing new atoms.
class CubeEnumerator {
 public:
  explicit CubeEnumerator(const Formula& f) : formula_(f.nnf()) {
    if (formula_.kind() == Formula::Kind::fls) {
      exhausted_ = true;
      return;
    }
    if (formula_.kind() != Formula::Kind::tru) {
      int root = encode(formula_);
      add_clause_internal({root});
    }
  }

  // Registers the atoms of a clause (disjunction of literals) and adds it.
  void add_clause(const std::vector<std::pair<Atom, bool>>& lits) {
    std::vector<int> cl;
    for (const auto& [a, s] : lits) cl.push_back(make_lit(atom_var(a), s));
    add_clause_internal(cl);
  }

  std::optional<Cube> next() {
    if (exhausted_) return std::nullopt;
    if (clauses_.empty()) {
      // Tautology: one empty cube.
      exhausted_ = true;
      return Cube{};
    }
    restart();
    if (!search()) {
      exhausted_ = true;
      return std::nullopt;
    }
    auto lits = minimized_cube();
    std::vector<int> block;
    for (const auto& [a, s] : lits) block.push_back(make_lit(atom_var(a), !s));
    add_clause_internal(block);
    return Cube::from_literals(lits);
  }

  std::size_t atom_count() const { return atom_vars_.size(); }

 private:
  static int make_lit(int var, bool sign) { return 2 * var + (sign ? 0 : 1); }
  static int lit_var(int lit) { return lit / 2; }
  static bool lit_sign(int lit) { return (lit & 1) == 0; }
  static int negate(int lit) { return lit ^ 1; }

  int new_var(bool real) {
    int v = static_cast<int>(assign_.size());
    assign_.push_back(-1);
    watches_.emplace_back();
    watches_.emplace_back();
    real_.push_back(real);
    atoms_.resize(assign_.size());
    return v;
  }

  int atom_var(const Atom& a) {
    auto it = atom_vars_.find(a);
    if (it != atom_vars_.end()) return it->second;
    int v = new_var(true);
    atom_vars_.emplace(a, v);
    atoms_[static_cast<std::size_t>(v)] = a;
    return v;
  }

  // One-sided Tseitin over NNF: aux variables imply their definitions.
  int encode(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::lit: return make_lit(atom_var(f.atom()), f.sign());
      case Formula::Kind::conj: {
        int a = new_var(false);
        for (const auto& k : f.kids()) add_clause_internal({make_lit(a, false), encode(k)});
        return make_lit(a, true);
      }
      case Formula::Kind::disj: {
        int a = new_var(false);
        std::vector<int> cl = {make_lit(a, false)};
        for (const auto& k : f.kids()) cl.push_back(encode(k));
        add_clause_internal(cl);
        return make_lit(a, true);
      }
      default: throw std::logic_error("encode: formula not in NNF");
    }
  }

  void add_clause_internal(std::vector<int> cl) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    if (cl.empty()) {
      exhausted_ = true;
      return;
    }
    std::size_t idx = clauses_.size();
    clauses_.push_back(cl);
    // Watch the first two literals (positions 0 and 1).
    watches_[static_cast<std::size_t>(cl[0])].push_back(idx);
    if (cl.size() > 1) watches_[static_cast<std::size_t>(clauses_[idx][1])].push_back(idx);
  }

  void restart() {
    trail_.clear();
    decisions_.clear();
    qhead_ = 0;
    std::fill(assign_.begin(), assign_.end(), -1);
  }

  int value(int lit) const {
    int v = assign_[static_cast<std::size_t>(lit_var(lit))];
    if (v < 0) return -1;
    return lit_sign(lit) ? v : 1 - v;
  }

  void enqueue(int lit) {
    assign_[static_cast<std::size_t>(lit_var(lit))] = lit_sign(lit) ? 1 : 0;
    trail_.push_back(lit);
  }

  // Standard two-watch propagation with watches at clause positions 0/1.
  bool propagate() {
    while (qhead_ < trail_.size()) {
      int flit = negate(trail_[qhead_++]);
      auto wl = std::move(watches_[static_cast<std::size_t>(flit)]);
      watches_[static_cast<std::size_t>(flit)].clear();
      for (std::size_t wi = 0; wi < wl.size(); ++wi) {
        std::size_t ci = wl[wi];
        auto& cl = clauses_[ci];
        if (cl.size() == 1) {
          watches_[static_cast<std::size_t>(flit)].push_back(ci);
          if (value(cl[0]) == 0) {
            for (std::size_t rest = wi + 1; rest < wl.size(); ++rest)
              watches_[static_cast<std::size_t>(flit)].push_back(wl[rest]);
            return false;
          }
          continue;
        }
        if (cl[0] == flit) std::swap(cl[0], cl[1]);
        // Now cl[1] == flit.
        if (value(cl[0]) == 1) {
          watches_[static_cast<std::size_t>(flit)].push_back(ci);
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < cl.size(); ++k) {
          if (value(cl[k]) != 0) {
            std::swap(cl[1], cl[k]);
            watches_[static_cast<std::size_t>(cl[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watches_[static_cast<std::size_t>(flit)].push_back(ci);
        if (value(cl[0]) == 0) {
          for (std::size_t rest = wi + 1; rest < wl.size(); ++rest)
            watches_[static_cast<std::size_t>(flit)].push_back(wl[rest]);
          return false;
        }
        if (value(cl[0]) == -1) enqueue(cl[0]);
      }
    }
    return true;
  }

  bool clause_satisfied(const std::vector<int>& cl) const {
    for (int l : cl)
      if (value(l) == 1) return true;
    return false;
  }

  bool all_clauses_satisfied() const {
    for (const auto& cl : clauses_)
      if (!clause_satisfied(cl)) return false;
    return true;
  }

  int pick_decision() const {
    int best = -1;
    for (const auto& cl : clauses_) {
      if (clause_satisfied(cl)) continue;
      for (int l : cl)
        if (value(l) == -1 && (best == -1 || lit_var(l) < best)) best = lit_var(l);
    }
    return best;
  }

  struct Decision {
    int var;
    bool flipped;
    std::size_t trail_size;
  };

  bool backtrack() {
    for (;;) {
      if (decisions_.empty()) return false;
      Decision d = decisions_.back();
      decisions_.pop_back();
      while (trail_.size() > d.trail_size) {
        assign_[static_cast<std::size_t>(lit_var(trail_.back()))] = -1;
        trail_.pop_back();
      }
      qhead_ = trail_.size();
      if (!d.flipped) {
        decisions_.push_back({d.var, true, trail_.size()});
        enqueue(make_lit(d.var, false));
        return true;
      }
    }
  }

  bool search() {
    // Seed unit clauses.
    for (const auto& cl : clauses_) {
      if (cl.size() != 1) continue;
      if (value(cl[0]) == 0) return false;
      if (value(cl[0]) == -1) enqueue(cl[0]);
    }
    for (;;) {
      if (!propagate()) {
        if (!backtrack()) return false;
        continue;
      }
      if (all_clauses_satisfied()) return true;
      int var = pick_decision();
      if (var == -1) {
        if (!backtrack()) return false;
        continue;
      }
      decisions_.push_back({var, false, trail_.size()});
      enqueue(make_lit(var, true));
    }
  }

  enum class TV { t, f, u };
  TV eval3(const Formula& f, const std::map<Atom, bool>& partial) const {
    switch (f.kind()) {
      case Formula::Kind::tru: return TV::t;
      case Formula::Kind::fls: return TV::f;
      case Formula::Kind::lit: {
        auto it = partial.find(f.atom());
        if (it == partial.end()) return TV::u;
        return it->second == f.sign() ? TV::t : TV::f;
      }
      case Formula::Kind::conj: {
        TV acc = TV::t;
        for (const auto& k : f.kids()) {
          TV v = eval3(k, partial);
          if (v == TV::f) return TV::f;
          if (v == TV::u) acc = TV::u;
        }
        return acc;
      }
      case Formula::Kind::disj: {
        TV acc = TV::f;
        for (const auto& k : f.kids()) {
          TV v = eval3(k, partial);
          if (v == TV::t) return TV::t;
          if (v == TV::u) acc = TV::u;
        }
        return acc;
      }
      default: throw std::logic_error("eval3: not NNF");
    }
  }

  // Assigned real-atom literals, greedily minimized (latest assigned first)
  // so the cube still propositionally implies the input formula.
  std::vector<std::pair<Atom, bool>> minimized_cube() const {
    std::map<Atom, bool> partial;
    for (std::size_t v = 0; v < assign_.size(); ++v) {
      if (assign_[v] < 0 || !real_[v]) continue;
      partial[atoms_[v]] = assign_[v] == 1;
    }
    for (auto it = trail_.rbegin(); it != trail_.rend(); ++it) {
      std::size_t var = static_cast<std::size_t>(lit_var(*it));
      if (!real_[var]) continue;
      auto node = partial.extract(atoms_[var]);
      if (eval3(formula_, partial) != TV::t) partial.insert(std::move(node));
    }
    return {partial.begin(), partial.end()};
  }

  Formula formula_;
  std::map<Atom, int> atom_vars_;
  std::vector<Atom> atoms_;
  std::vector<bool> real_;
  std::vector<int> assign_;
  std::vector<std::vector<std::size_t>> watches_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> trail_;
  std::vector<Decision> decisions_;
  std::size_t qhead_ = 0;
  bool exhausted_ = false;
};

}  // namespace lirr
