#pragma once

#include <optional>
#include <string>

#include "ginv/morphism_sum.hpp"
#include "ginv/oracle.hpp"

namespace ginv {

// Perturbation of a core (or dual core) invertible a by an element j of the
// Jacobson radical, realized as matrices over the dual numbers where the
// radical is the set of matrices with zero constant part.

/// True iff every entry of j has zero constant part.
inline bool radical_check(const DMatrix& j) {
  for (const auto& x : j.entries())
    if (!x.in_radical()) return false;
  return true;
}

enum class RadicalVariant { core, dual_core };

inline std::string_view to_string(RadicalVariant v) { return v == RadicalVariant::core ? "core" : "dual_core"; }

/// Core (or dual core) inverse of a dual-number matrix: computed over the
/// constant-part field and lifted when the lift still satisfies the defining
/// equations, otherwise taken from the linear-system construction.
inline std::optional<DMatrix> dual_ring_inverse(const DMatrix& a, RadicalVariant variant) {
  const InverseKind kind = variant == RadicalVariant::core ? InverseKind::core : InverseKind::dual_core;
  if (eps_part(a).is_zero()) {
    GMatrix a0 = const_part(a);
    auto r = variant == RadicalVariant::core ? core_inverse(a0) : dual_core_inverse(a0);
    if (r) {
      DMatrix lifted = lift(*r);
      if (verify(kind, a, lifted).valid) return lifted;
    }
  }
  return variant == RadicalVariant::core ? oracle_core(a) : oracle_dual_core(a);
}

/// ε = (1 - a a^τ) j (1 + a^τ j)^-1 (1 - a^τ a), where a^τ is the core or
/// dual core inverse `a_inv` of a.
inline DMatrix epsilon_criterion(const DMatrix& a, const DMatrix& a_inv, const DMatrix& j,
                                 RadicalVariant variant = RadicalVariant::core) {
  if (!a.is_square() || a.rows() != j.rows() || a.cols() != j.cols())
    throw DimensionMismatch("a is " + a.shape() + ", j is " + j.shape());
  if (!radical_check(j)) throw PreconditionViolated("j is not in the radical");
  const InverseKind kind = variant == RadicalVariant::core ? InverseKind::core : InverseKind::dual_core;
  if (!verify(kind, a, a_inv).valid)
    throw PreconditionViolated("supplied inverse is not the " + std::string(to_string(variant)) + " inverse of a");
  const DMatrix one = identity_like(a);
  return (one - a * a_inv) * j * invert(DMatrix(one + a_inv * j)) * (one - a_inv * a);
}

/// A checked instance (a, j) with all derived quantities. For the core
/// variant the factors are
///   γ = (1+a^⊕j)^-1 (1-a^⊕a) (1+ja^⊕) a a^⊕ (1+ja^⊕)^-1,
///   δ = (1+(a^⊕)*j*)^-1 (a^⊕)* j* (1-aa^⊕) (1+ja^⊕)^-1;
/// for the dual core variant
///   ρ = (1+a_⊕j)^-1 a_⊕a (1+a_⊕j) (1-aa_⊕) (1+ja_⊕)^-1,
///   ξ = (1+a_⊕j)^-1 (1-a_⊕a) j* (a_⊕)* (1+j*(a_⊕)*)^-1.
/// `left` holds γ or ξ, `right` holds δ or ρ.
struct RadicalPerturbation {
  RadicalVariant variant = RadicalVariant::core;
  DMatrix a, a_inv, j;
  DMatrix epsilon;
  DMatrix left, right;
};

/// Validates (a, j) and computes every factor. The factors are also derived
/// through the general sum construction with φ = a, η = j and the two routes
/// must agree.
inline RadicalPerturbation make_radical_perturbation(const DMatrix& a, const DMatrix& j, RadicalVariant variant,
                                                     std::optional<DMatrix> a_inv = std::nullopt) {
  if (!a.is_square()) throw DimensionMismatch("a must be square, got " + a.shape());
  if (a.rows() != j.rows() || a.cols() != j.cols()) throw DimensionMismatch("a is " + a.shape() + ", j is " + j.shape());
  if (!radical_check(j)) throw PreconditionViolated("j is not in the radical");
  if (!a_inv) a_inv = dual_ring_inverse(a, variant);
  if (!a_inv) throw PreconditionViolated("a has no " + std::string(to_string(variant)) + " inverse");

  RadicalPerturbation p{variant, a, *a_inv, j, epsilon_criterion(a, *a_inv, j, variant), {}, {}};
  const DMatrix one = identity_like(a);
  const DMatrix& x = p.a_inv;
  const DMatrix xj_inv = invert(DMatrix(one + x * j));  // (1 + a^τ j)^-1
  const DMatrix jx = one + j * x;                      // 1 + j a^τ
  const DMatrix jx_inv = invert(jx);
  if (variant == RadicalVariant::core) {
    p.left = xj_inv * (one - x * a) * jx * a * x * jx_inv;
    p.right = invert(DMatrix(one + adjoint(x) * adjoint(j))) * adjoint(x) * adjoint(j) * (one - a * x) * jx_inv;
  } else {
    p.right = xj_inv * x * a * (one + x * j) * (one - a * x) * jx_inv;
    p.left = xj_inv * (one - x * a) * adjoint(j) * adjoint(x) * invert(DMatrix(one + adjoint(j) * adjoint(x)));
  }

  auto ctx = build_context_with(a, j, variant == RadicalVariant::core ? InverseKind::core : InverseKind::dual_core, x);
  if (!ctx) throw ContractViolation("1 + a^tau j singular for radical j");
  if (ctx->epsilon != p.epsilon) throw ContractViolation("epsilon differs between the two constructions");
  if (variant == RadicalVariant::core) {
    auto w = core_sum_witness(*ctx);
    if (w.gamma != p.left || w.delta != p.right) throw ContractViolation("gamma/delta differ between the two constructions");
  } else {
    auto w = dual_core_sum_witness(*ctx);
    if (w.xi != p.left || w.rho != p.right) throw ContractViolation("xi/rho differ between the two constructions");
  }
  return p;
}

struct RadicalResult {
  bool epsilon_is_zero = false;
  std::optional<DMatrix> inverse;
  /// Set when ε != 0: the linear-system oracle found no inverse of a + j.
  bool oracle_confirms_nonexistence = false;
};

/// (a+j)^⊕ = (1-γ)^-1 (1+a^⊕j)^-1 a^⊕ (1-δ)^-1 when ε = 0, or
/// (a+j)_⊕ = (1-ξ)^-1 (1+a_⊕j)^-1 a_⊕ (1-ρ)^-1 for the dual variant.
/// When ε != 0 non-existence is confirmed by the oracle; any disagreement
/// throws ContractViolation.
inline RadicalResult perturbed_inverse(const RadicalPerturbation& p) {
  const DMatrix one = identity_like(p.a);
  const DMatrix sum = p.a + p.j;
  const bool core = p.variant == RadicalVariant::core;
  RadicalResult r;
  r.epsilon_is_zero = p.epsilon.is_zero();
  if (!r.epsilon_is_zero) {
    auto rep = oracle_existence(sum);
    if (core ? rep.core_exists : rep.dual_core_exists)
      throw ContractViolation("epsilon != 0 but a + j has an inverse of the requested kind");
    r.oracle_confirms_nonexistence = true;
    return r;
  }
  auto inv_left = try_invert(DMatrix(one - p.left));
  auto inv_right = try_invert(DMatrix(one - p.right));
  if (!inv_left || !inv_right) throw ContractViolation("epsilon = 0 but a perturbation factor is singular");
  DMatrix x = *inv_left * invert(DMatrix(one + p.a_inv * p.j)) * p.a_inv * *inv_right;
  detail::require_valid(verify(core ? InverseKind::core : InverseKind::dual_core, sum, x), "perturbed inverse");
  r.inverse = std::move(x);
  return r;
}

inline RadicalResult perturbed_core_inverse(const RadicalPerturbation& p) {
  if (p.variant != RadicalVariant::core) throw PreconditionViolated("perturbation was built for the dual core");
  return perturbed_inverse(p);
}

inline RadicalResult perturbed_dual_core_inverse(const RadicalPerturbation& p) {
  if (p.variant != RadicalVariant::dual_core) throw PreconditionViolated("perturbation was built for the core");
  return perturbed_inverse(p);
}

struct ProjectionWitness {
  DMatrix q;  ///< [(1 + j a^⊕)^-1]* (1 - a a^⊕) (1 + j a^⊕)^-1
  DMatrix u;  ///< a + j + q
};

/// The Hermitian q with q(a+j) = 0 and a+j+q invertible, for ε = 0.
/// Throws ContractViolation if any of those fails.
inline ProjectionWitness projection_construction(const RadicalPerturbation& p) {
  if (p.variant != RadicalVariant::core) throw PreconditionViolated("projection construction is for the core variant");
  if (!p.epsilon.is_zero()) throw PreconditionViolated("epsilon is not zero");
  const DMatrix one = identity_like(p.a);
  const DMatrix sum = p.a + p.j;
  const DMatrix jx_inv = invert(DMatrix(one + p.j * p.a_inv));
  ProjectionWitness w{adjoint(jx_inv) * (one - p.a * p.a_inv) * jx_inv, {}};
  w.u = sum + w.q;
  if (!is_hermitian(w.q)) throw ContractViolation("q is not Hermitian");
  if (!(w.q * sum).is_zero()) throw ContractViolation("q (a + j) != 0");
  if (!try_invert(w.u)) throw ContractViolation("a + j + q is singular");
  return w;
}

}  // namespace ginv
