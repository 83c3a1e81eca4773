#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ginv/matrix.hpp"
#include "ginv/outcome.hpp"

namespace ginv {

/// Species of generalized inverse. The {i,j,...} kinds name subsets of the
/// four Penrose equations
///   (1) axa = a   (2) xax = x   (3) (ax)* = ax   (4) (xa)* = xa.
enum class InverseKind {
  one,
  one_two,
  one_three,
  one_four,
  one_two_three,
  one_two_four,
  moore_penrose,
  group,
  core,
  dual_core,
};

inline constexpr std::array<InverseKind, 10> all_inverse_kinds = {
    InverseKind::one,           InverseKind::one_two,      InverseKind::one_three,     InverseKind::one_four,
    InverseKind::one_two_three, InverseKind::one_two_four, InverseKind::moore_penrose, InverseKind::group,
    InverseKind::core,          InverseKind::dual_core,
};

inline std::string_view to_string(InverseKind k) {
  switch (k) {
    case InverseKind::one: return "one";
    case InverseKind::one_two: return "one_two";
    case InverseKind::one_three: return "one_three";
    case InverseKind::one_four: return "one_four";
    case InverseKind::one_two_three: return "one_two_three";
    case InverseKind::one_two_four: return "one_two_four";
    case InverseKind::moore_penrose: return "moore_penrose";
    case InverseKind::group: return "group";
    case InverseKind::core: return "core";
    case InverseKind::dual_core: return "dual_core";
  }
  return "?";
}

inline std::optional<InverseKind> parse_inverse_kind(std::string_view name) {
  for (auto k : all_inverse_kinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

/// Kinds defined only for square matrices.
inline bool requires_square(InverseKind k) {
  return k == InverseKind::group || k == InverseKind::core || k == InverseKind::dual_core;
}

inline bool is_penrose_subset(InverseKind k) {
  switch (k) {
    case InverseKind::one:
    case InverseKind::one_two:
    case InverseKind::one_three:
    case InverseKind::one_four:
    case InverseKind::one_two_three:
    case InverseKind::one_two_four:
      return true;
    default:
      return false;
  }
}

/// Equation ids checked for each kind, in evaluation order.
inline std::vector<std::string> equation_ids(InverseKind k) {
  switch (k) {
    case InverseKind::one: return {"1"};
    case InverseKind::one_two: return {"1", "2"};
    case InverseKind::one_three: return {"1", "3"};
    case InverseKind::one_four: return {"1", "4"};
    case InverseKind::one_two_three: return {"1", "2", "3"};
    case InverseKind::one_two_four: return {"1", "2", "4"};
    case InverseKind::moore_penrose: return {"1", "2", "3", "4"};
    case InverseKind::group: return {"1", "2", "commute"};
    case InverseKind::core: return {"1", "2", "3", "ax^2=x", "xa^2=a"};
    case InverseKind::dual_core: return {"1", "2", "4", "x^2a=x", "a^2x=a"};
  }
  return {};
}

struct EquationCheck {
  std::string id;
  bool holds = false;
};

/// The result of checking a candidate against the defining equations of a
/// kind. Everything is recomputed from `a` and `candidate`.
template <StarRing S>
struct Certificate {
  InverseKind kind{};
  Matrix<S> candidate;
  std::vector<EquationCheck> equations;
  bool valid = false;

  bool holds(std::string_view id) const {
    auto it = std::find_if(equations.begin(), equations.end(), [&](const auto& e) { return e.id == id; });
    return it != equations.end() && it->holds;
  }
};

namespace detail {

template <StarRing S>
bool check_equation(std::string_view id, const Matrix<S>& a, const Matrix<S>& x) {
  if (id == "1") return a * x * a == a;
  if (id == "2") return x * a * x == x;
  if (id == "3") {
    auto ax = a * x;
    return adjoint(ax) == ax;
  }
  if (id == "4") {
    auto xa = x * a;
    return adjoint(xa) == xa;
  }
  if (id == "commute") return a * x == x * a;
  if (id == "ax^2=x") return a * x * x == x;
  if (id == "xa^2=a") return x * a * a == a;
  if (id == "x^2a=x") return x * x * a == x;
  if (id == "a^2x=a") return a * a * x == a;
  throw std::logic_error("unknown equation id " + std::string(id));
}

}  // namespace detail

/// Evaluates every defining equation of `kind` for the pair (a, x).
/// Pure: never computes an inverse.
template <StarRing S>
Certificate<S> verify(InverseKind kind, const Matrix<S>& a, const Matrix<S>& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows())
    throw DimensionMismatch("candidate " + x.shape() + " cannot invert " + a.shape());
  if (requires_square(kind) && !a.is_square())
    throw DimensionMismatch(std::string(to_string(kind)) + " inverse needs a square matrix, got " + a.shape());
  Certificate<S> cert{kind, x, {}, true};
  for (auto& id : equation_ids(kind)) {
    bool ok = detail::check_equation(id, a, x);
    cert.valid = cert.valid && ok;
    cert.equations.push_back({id, ok});
  }
  return cert;
}

/// x is a {1,3}-inverse of a iff x* a* a = a.
template <StarRing S>
bool normal_one_three_holds(const Matrix<S>& a, const Matrix<S>& x) {
  return adjoint(x) * adjoint(a) * a == a;
}

/// y is a {1,4}-inverse of a iff a a* y* = a.
template <StarRing S>
bool normal_one_four_holds(const Matrix<S>& a, const Matrix<S>& y) {
  return a * adjoint(a) * adjoint(y) == a;
}

namespace detail {

template <StarRing S>
void require_valid(const Certificate<S>& cert, const char* what) {
  if (cert.valid) return;
  std::string failed;
  for (const auto& e : cert.equations)
    if (!e.holds) failed += " " + e.id;
  throw ContractViolation(std::string(what) + " fails equations:" + failed);
}

template <StarRing S>
void require_square(const Matrix<S>& a, std::string_view what) {
  if (!a.is_square()) throw DimensionMismatch(std::string(what) + " needs a square matrix, got " + a.shape());
}

}  // namespace detail

// --- Moore-Penrose ----------------------------------------------------------

/// A† = G*(F* A G*)^-1 F* for A = F G; 0 for A = 0.
inline GMatrix mp_inverse(const GMatrix& a) {
  if (a.is_zero()) return GMatrix(a.cols(), a.rows());
  auto [F, G, r] = full_rank_factorize(a);
  GMatrix Gs = adjoint(G), Fs = adjoint(F);
  GMatrix x = Gs * invert(Fs * a * Gs) * Fs;
  detail::require_valid(verify(InverseKind::moore_penrose, a, x), "mp_inverse");
  return x;
}

/// Any {i,j,...}-inverse; the Moore-Penrose inverse is one for every subset.
inline GMatrix ijl_inverse(const GMatrix& a, InverseKind kind) {
  if (!is_penrose_subset(kind))
    throw PreconditionViolated(std::string(to_string(kind)) + " is not a subset of the Penrose equations");
  return mp_inverse(a);
}

// --- group ------------------------------------------------------------------

/// a# = y a x where a²x = a and y a² = a. Works over either scalar ring;
/// fails with "NotGroupInvertible" when either system has no solution.
template <StarRing S>
Outcome<Matrix<S>> group_inverse(const Matrix<S>& a) {
  detail::require_square(a, "group_inverse");
  if (a.is_zero()) return Matrix<S>(a.rows(), a.cols());
  Matrix<S> a2 = a * a;
  auto right = solve_linear(a2, a, Side::right);
  auto left = solve_linear(a2, a, Side::left);
  if (!right || !left) {
    std::string detail = !right ? "a^2 x = a has no solution (row " + std::to_string(right.inconsistency->row) + ")"
                                : "y a^2 = a has no solution (row " + std::to_string(left.inconsistency->row) + ")";
    if constexpr (is_field_v<S>)
      detail += "; rank(a^2) = " + std::to_string(rank(a2)) + " < rank(a) = " + std::to_string(rank(a));
    return Failure{"NotGroupInvertible", detail};
  }
  Matrix<S> g = *left.solution * a * *right.solution;
  detail::require_valid(verify(InverseKind::group, a, g), "group_inverse");
  return g;
}

// --- core and dual core -----------------------------------------------------

/// a^⊕ = a# a a†. Exists exactly when a is group invertible.
inline Outcome<GMatrix> core_inverse(const GMatrix& a) {
  auto g = group_inverse(a);
  if (!g) return Failure{"NotCoreInvertible", g.failure().detail};
  GMatrix x = *g * a * mp_inverse(a);
  detail::require_valid(verify(InverseKind::core, a, x), "core_inverse");
  return x;
}

/// a_⊕ = a† a a#.
inline Outcome<GMatrix> dual_core_inverse(const GMatrix& a) {
  auto g = group_inverse(a);
  if (!g) return Failure{"NotDualCoreInvertible", g.failure().detail};
  GMatrix x = mp_inverse(a) * a * *g;
  detail::require_valid(verify(InverseKind::dual_core, a, x), "dual_core_inverse");
  return x;
}

/// The inverse of the requested kind over the field, or the reason it does
/// not exist.
inline Outcome<GMatrix> compute_inverse(const GMatrix& a, InverseKind kind) {
  switch (kind) {
    case InverseKind::group: return group_inverse(a);
    case InverseKind::core: return core_inverse(a);
    case InverseKind::dual_core: return dual_core_inverse(a);
    case InverseKind::moore_penrose: return mp_inverse(a);
    default: return ijl_inverse(a, kind);
  }
}

/// Core inverse from a Hermitian p with p a = 0 and u = a + p invertible:
/// a^⊕ = u^-1 a u^-1, which must coincide with (u* u)^-1 a*.
///
/// Failure codes: NotHermitian, PAnotZero, UNotInvertible.
template <StarRing S>
Outcome<Matrix<S>> core_via_projection(const Matrix<S>& a, const Matrix<S>& p) {
  detail::require_square(a, "core_via_projection");
  if (p.rows() != a.rows() || p.cols() != a.cols())
    throw DimensionMismatch("projection " + p.shape() + " does not match " + a.shape());
  if (!is_hermitian(p)) return Failure{"NotHermitian", "p* != p"};
  if (!(p * a).is_zero()) return Failure{"PAnotZero", "p a != 0"};
  auto u_inv = try_invert(Matrix<S>(a + p));
  if (!u_inv) return Failure{"UNotInvertible", "a + p is singular"};
  Matrix<S> x = *u_inv * a * *u_inv;
  Matrix<S> u = a + p;
  if (invert(Matrix<S>(adjoint(u) * u)) * adjoint(a) != x)
    throw ContractViolation("u^-1 a u^-1 != (u* u)^-1 a*");
  return x;
}

}  // namespace ginv
