#pragma once

#include <optional>
#include <vector>

#include "lirr/linear_cone.hpp"
#include "lirr/matrix.hpp"
#include "lirr/polynomial.hpp"

namespace lirr {

// A basis (linearly independent generating set) for a point lattice of
// polynomials: Z-span(basis).
struct LatticeBasis {
  std::vector<Polynomial> basis;
};

// Basis computation: clear denominators globally, Hermite-reduce the integer
// coefficient matrix, scale back.
inline LatticeBasis lattice_basis(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {};
  auto ms = detail::occurring_monomials(nz);
  Int scale = 1;
  for (const auto& p : nz)
    for (const auto& [m, c] : p.terms()) scale = scale / gcd_int(scale, den(c)) * den(c);
  ZMatrix rows(nz.size(), ZVector(ms.size(), Int(0)));
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      Rational c = nz[i].coefficient(ms[j]) * scale;
      rows[i][j] = num(c);
    }
  ZMatrix h = hermite_normal_form(std::move(rows));
  LatticeBasis out;
  for (const auto& row : h) {
    Polynomial p;
    for (std::size_t j = 0; j < ms.size(); ++j)
      p.add_term(ms[j], Rational(row[j], scale));
    if (!p.is_zero()) out.basis.push_back(std::move(p));
  }
  return out;
}

// p ∈ Z-span(basis): solve the linear system for its unique solution and
// check that every coordinate is an integer.
inline bool lattice_member(const Polynomial& p, const LatticeBasis& b) {
  if (p.is_zero()) return true;
  if (b.basis.empty()) return false;
  auto ms = detail::occurring_monomials(b.basis, &p);
  QMatrix a = detail::coefficient_matrix(ms, b.basis);
  QVector rhs(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) rhs[i] = p.coefficient(ms[i]);
  auto sol = solve_linear(a, rhs);
  if (!sol) return false;
  for (const auto& q : *sol)
    if (!is_integer(q)) return false;
  return true;
}

}  // namespace lirr
