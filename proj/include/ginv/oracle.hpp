#pragma once

#include <optional>

#include "ginv/inverses.hpp"

namespace ginv {

// Ground truth for existence and value of inverses, computed only through
// linear solvability and factorization formulas. Nothing here calls the
// perturbation formulas under test.

template <StarRing S>
struct ExistenceReport {
  bool group_exists = false;
  std::optional<Matrix<S>> group_right;  ///< x with a² x = a
  std::optional<Matrix<S>> group_left;   ///< y with y a² = a
  bool one_three_exists = false;
  std::optional<Matrix<S>> one_three;  ///< x with x* a* a = a
  bool one_four_exists = false;
  std::optional<Matrix<S>> one_four;  ///< y with a a* y* = a
  bool core_exists = false;
  bool dual_core_exists = false;
};

/// Decides group, {1,3}, {1,4}, core and dual-core existence by exact
/// linear solvability, keeping the solutions as witnesses.
template <StarRing S>
ExistenceReport<S> oracle_existence(const Matrix<S>& a) {
  detail::require_square(a, "oracle_existence");
  ExistenceReport<S> rep;
  Matrix<S> a2 = a * a;
  auto right = solve_linear(a2, a, Side::right);
  auto left = solve_linear(a2, a, Side::left);
  rep.group_right = right.solution;
  rep.group_left = left.solution;
  rep.group_exists = right && left;

  Matrix<S> as = adjoint(a);
  // z (a* a) = a, then x = z*.
  auto z = solve_linear(Matrix<S>(as * a), a, Side::left);
  if (z) rep.one_three = adjoint(*z.solution);
  rep.one_three_exists = z.solution.has_value();
  // (a a*) w = a, then y = w*.
  auto w = solve_linear(Matrix<S>(a * as), a, Side::right);
  if (w) rep.one_four = adjoint(*w.solution);
  rep.one_four_exists = w.solution.has_value();

  rep.core_exists = rep.group_exists && rep.one_three_exists;
  rep.dual_core_exists = rep.group_exists && rep.one_four_exists;
  return rep;
}

/// a# = y a x from the existence witnesses.
template <StarRing S>
std::optional<Matrix<S>> oracle_group(const Matrix<S>& a) {
  auto rep = oracle_existence(a);
  if (!rep.group_exists) return std::nullopt;
  return *rep.group_left * a * *rep.group_right;
}

/// a^⊕ = a# a a^(1,3), every factor taken from a solved linear system.
template <StarRing S>
std::optional<Matrix<S>> oracle_core(const Matrix<S>& a) {
  auto rep = oracle_existence(a);
  if (!rep.core_exists) return std::nullopt;
  Matrix<S> g = *rep.group_left * a * *rep.group_right;
  Matrix<S> x = g * a * *rep.one_three;
  detail::require_valid(verify(InverseKind::core, a, x), "oracle_core");
  return x;
}

/// a_⊕ = a^(1,4) a a#.
template <StarRing S>
std::optional<Matrix<S>> oracle_dual_core(const Matrix<S>& a) {
  auto rep = oracle_existence(a);
  if (!rep.dual_core_exists) return std::nullopt;
  Matrix<S> g = *rep.group_left * a * *rep.group_right;
  Matrix<S> x = *rep.one_four * a * g;
  detail::require_valid(verify(InverseKind::dual_core, a, x), "oracle_dual_core");
  return x;
}

/// Moore-Penrose inverse from a factorization of a* (so a = F G with
/// F = (G')*, G = (F')*), evaluated as G*(G G*)^-1 (F* F)^-1 F*.
inline GMatrix oracle_mp_frf(const GMatrix& a) {
  if (a.is_zero()) return GMatrix(a.cols(), a.rows());
  auto adj = full_rank_factorize(adjoint(a));
  GMatrix F = adjoint(adj.G), G = adjoint(adj.F);
  GMatrix Gs = adjoint(G), Fs = adjoint(F);
  return Gs * invert(GMatrix(G * Gs)) * invert(GMatrix(Fs * F)) * Fs;
}

/// Group inverse as F (G F)^-2 G; none when G F is singular.
inline std::optional<GMatrix> group_frf(const GMatrix& a) {
  detail::require_square(a, "group_frf");
  if (a.is_zero()) return GMatrix(a.rows(), a.cols());
  auto [F, G, r] = full_rank_factorize(a);
  auto gf_inv = try_invert(GMatrix(G * F));
  if (!gf_inv) return std::nullopt;
  return F * *gf_inv * *gf_inv * G;
}

}  // namespace ginv
