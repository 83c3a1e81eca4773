#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ginv/inverses.hpp"
#include "ginv/oracle.hpp"

namespace ginv {

// Generalized inverses of a perturbed morphism f = φ + η - ε, where φ has a
// chosen τ-inverse φτ and ε is the correction that makes α φτ a {1,2}-inverse
// of f. Morphisms are matrices; φ : X -> Y is a (dim Y) x (dim X) matrix.

/// All quantities derived from (φ, η, φτ):
///   α = (1_X + φτ η)^-1,  β = (1_Y + η φτ)^-1,
///   ε = (1_Y - φ φτ) η α (1_X - φτ φ),  f = φ + η - ε,  f0 = α φτ = φτ β.
template <StarRing S>
struct SumContext {
  InverseKind tau{};
  Matrix<S> phi, eta, phi_tau;
  Matrix<S> alpha, alpha_inv, beta, beta_inv;
  Matrix<S> epsilon, f, f0;

  Matrix<S> one_x() const { return Matrix<S>::identity(phi.cols()); }
  Matrix<S> one_y() const { return Matrix<S>::identity(phi.rows()); }
};

inline bool is_sum_tau(InverseKind k) {
  switch (k) {
    case InverseKind::group:
    case InverseKind::core:
    case InverseKind::dual_core:
    case InverseKind::one_two_three:
    case InverseKind::one_two_four:
    case InverseKind::moore_penrose:
      return true;
    default:
      return false;
  }
}

/// A τ-inverse of φ, or none when φ has no inverse of that kind. Over the dual
/// numbers only the species reachable by linear systems are available.
template <StarRing S>
std::optional<Matrix<S>> tau_inverse(const Matrix<S>& phi, InverseKind tau) {
  if constexpr (is_field_v<S>) {
    auto r = compute_inverse(phi, tau);
    if (!r) return std::nullopt;
    return *r;
  } else {
    switch (tau) {
      case InverseKind::group: return oracle_group(phi);
      case InverseKind::core: return oracle_core(phi);
      case InverseKind::dual_core: return oracle_dual_core(phi);
      default:
        throw UnsupportedRing(std::string(to_string(tau)) + " inverse is not available over " +
                              std::string(ring_traits<S>::name));
    }
  }
}

/// Builds the context from an explicit τ-inverse of φ, which must pass its
/// certificate. Fails with "OnePlusPhiTauEtaNotInvertible" when 1 + φτ η is
/// singular.
template <StarRing S>
Outcome<SumContext<S>> build_context_with(const Matrix<S>& phi, const Matrix<S>& eta, InverseKind tau,
                                          const Matrix<S>& phi_tau) {
  if (!is_sum_tau(tau)) throw PreconditionViolated(std::string(to_string(tau)) + " is not a {1,2}-inverse kind");
  if (phi.rows() != eta.rows() || phi.cols() != eta.cols())
    throw DimensionMismatch("phi is " + phi.shape() + " but eta is " + eta.shape());
  if (requires_square(tau) && !phi.is_square())
    throw DimensionMismatch(std::string(to_string(tau)) + " perturbation needs square phi, got " + phi.shape());
  if (!verify(tau, phi, phi_tau).valid)
    throw PreconditionViolated("supplied phi^tau is not a " + std::string(to_string(tau)) + " inverse of phi");

  SumContext<S> c;
  c.tau = tau;
  c.phi = phi;
  c.eta = eta;
  c.phi_tau = phi_tau;
  const Matrix<S> ix = c.one_x(), iy = c.one_y();
  c.alpha_inv = ix + phi_tau * eta;
  auto alpha = try_invert(c.alpha_inv);
  if (!alpha) return Failure{"OnePlusPhiTauEtaNotInvertible", "1_X + phi^tau eta is singular"};
  c.alpha = std::move(*alpha);
  c.beta_inv = iy + eta * phi_tau;
  auto beta = try_invert(c.beta_inv);
  if (!beta) throw ContractViolation("1_Y + eta phi^tau singular although 1_X + phi^tau eta is invertible");
  c.beta = std::move(*beta);
  if (c.alpha * phi_tau != phi_tau * c.beta) throw ContractViolation("alpha phi^tau != phi^tau beta");

  c.epsilon = (iy - phi * phi_tau) * eta * c.alpha * (ix - phi_tau * phi);
  c.f = phi + eta - c.epsilon;
  c.f0 = c.alpha * phi_tau;
  if (c.f0 * c.f * c.f0 != c.f0 || c.f * c.f0 * c.f != c.f) throw ContractViolation("f0 is not a {1,2}-inverse of f");
  return c;
}

/// As `build_context_with`, computing φτ itself. Fails with
/// "TauInverseMissing" when φ has no τ-inverse.
template <StarRing S>
Outcome<SumContext<S>> build_context(const Matrix<S>& phi, const Matrix<S>& eta, InverseKind tau) {
  if (!is_sum_tau(tau)) throw PreconditionViolated(std::string(to_string(tau)) + " is not a {1,2}-inverse kind");
  if (requires_square(tau) && !phi.is_square())
    throw DimensionMismatch(std::string(to_string(tau)) + " perturbation needs square phi, got " + phi.shape());
  auto phi_tau = tau_inverse(phi, tau);
  if (!phi_tau) return Failure{"TauInverseMissing", "phi has no " + std::string(to_string(tau)) + " inverse"};
  return build_context_with(phi, eta, tau, *phi_tau);
}

/// If t is a {1}-inverse of φ + η then it is also a {1}-inverse of ε.
template <StarRing S>
bool one_inverse_passes_to_epsilon(const SumContext<S>& c, const Matrix<S>& t) {
  Matrix<S> sum = c.phi + c.eta;
  if (sum * t * sum != sum) throw PreconditionViolated("t is not a {1}-inverse of phi + eta");
  return c.epsilon * t * c.epsilon == c.epsilon;
}

// --- core inverse of the sum ------------------------------------------------

namespace detail {

template <StarRing S>
void require_tau(const SumContext<S>& c, InverseKind tau) {
  if (c.tau != tau)
    throw PreconditionViolated("context was built for " + std::string(to_string(c.tau)) + ", not " +
                               std::string(to_string(tau)));
}

template <StarRing S>
void require_two_sided(const Matrix<S>& m, const Matrix<S>& inv, const char* what) {
  Matrix<S> id = identity_like(m);
  if (m * inv != id || inv * m != id) throw ContractViolation(std::string("closed form is not the inverse of ") + what);
}

}  // namespace detail

/// γ = α(1-φ^⊕φ)β^-1 φφ^⊕ β,  σ = α φ^⊕φ α^-1 (1-φφ^⊕) β,
/// δ = β* (φ^⊕)* η* (1-φφ^⊕) β, with the inverses of 1-γ, 1-σ, 1-δ when
/// they exist.
template <StarRing S>
struct CoreSumWitness {
  Matrix<S> gamma, sigma, delta;
  std::optional<Matrix<S>> inv_one_minus_gamma, inv_one_minus_sigma, inv_one_minus_delta;
};

template <StarRing S>
CoreSumWitness<S> core_sum_witness(const SumContext<S>& c) {
  detail::require_tau(c, InverseKind::core);
  const Matrix<S> one = c.one_x();
  const Matrix<S> pp = c.phi * c.phi_tau;  // φφ^⊕
  const Matrix<S> qp = c.phi_tau * c.phi;  // φ^⊕φ
  CoreSumWitness<S> w;
  w.gamma = c.alpha * (one - qp) * c.beta_inv * pp * c.beta;
  w.sigma = c.alpha * qp * c.alpha_inv * (one - pp) * c.beta;
  w.delta = adjoint(c.beta) * adjoint(c.phi_tau) * adjoint(c.eta) * (one - pp) * c.beta;
  w.inv_one_minus_gamma = try_invert(Matrix<S>(one - w.gamma));
  w.inv_one_minus_sigma = try_invert(Matrix<S>(one - w.sigma));
  w.inv_one_minus_delta = try_invert(Matrix<S>(one - w.delta));
  return w;
}

template <StarRing S>
struct CoreSumResult {
  CoreSumWitness<S> witness;
  std::optional<Matrix<S>> inverse;  ///< f^⊕ when it exists
  std::vector<std::string> failing;  ///< names of the singular factors otherwise

  bool exists() const { return inverse.has_value(); }
};

/// f^⊕ = (1-γ)^-1 α φ^⊕ (1-δ)^-1 when 1-γ, 1-σ and 1-δ are all invertible.
/// The returned inverse always passes the core certificate for f.
template <StarRing S>
CoreSumResult<S> sum_core_inverse(const SumContext<S>& c) {
  CoreSumResult<S> r{core_sum_witness(c), std::nullopt, {}};
  const auto& w = r.witness;
  if (!w.inv_one_minus_gamma) r.failing.push_back("1-gamma");
  if (!w.inv_one_minus_sigma) r.failing.push_back("1-sigma");
  if (!w.inv_one_minus_delta) r.failing.push_back("1-delta");
  if (!r.failing.empty()) return r;
  Matrix<S> x = *w.inv_one_minus_gamma * c.alpha * c.phi_tau * *w.inv_one_minus_delta;
  detail::require_valid(verify(InverseKind::core, c.f, x), "core inverse of the sum");
  r.inverse = std::move(x);
  return r;
}

/// Identities the construction guarantees whenever the witness exists,
/// independent of whether f is core invertible.
template <StarRing S>
std::vector<EquationCheck> core_sum_identities(const SumContext<S>& c, const CoreSumWitness<S>& w) {
  const Matrix<S> one = c.one_x();
  const Matrix<S> pp = c.phi * c.phi_tau;
  const Matrix<S> ff0 = c.f * c.f0, f0f = c.f0 * c.f;
  std::vector<EquationCheck> out;
  out.push_back({"f*gamma=0", (c.f * w.gamma).is_zero()});
  out.push_back({"sigma*f=0", (w.sigma * c.f).is_zero()});
  out.push_back({"delta*f=0", (w.delta * c.f).is_zero()});
  out.push_back({"f0*f=alpha*phi_core*phi*alpha^-1", f0f == c.alpha * c.phi_tau * c.phi * c.alpha_inv});
  out.push_back({"1-f*f0=(1-phi*phi_core)*beta", one - ff0 == (one - pp) * c.beta});
  out.push_back({"gamma=(1-f0*f)*f*f0", w.gamma == (one - f0f) * ff0});
  out.push_back({"sigma=f0*f*(1-f*f0)", w.sigma == f0f * (one - ff0)});
  out.push_back({"delta=(f*f0)^**(1-f*f0)", w.delta == adjoint(ff0) * (one - ff0)});
  out.push_back({"f0*f^2=(1-gamma)*f", c.f0 * c.f * c.f == (one - w.gamma) * c.f});
  out.push_back({"f^2*f0=f*(1-sigma)", c.f * c.f * c.f0 == c.f * (one - w.sigma)});
  out.push_back({"f^**f*f0=f^**(1-delta)", adjoint(c.f) * ff0 == adjoint(c.f) * (one - w.delta)});
  return out;
}

template <StarRing S>
struct ClosedForms {
  Matrix<S> first, second, third;
};

/// The inverses of 1-γ, 1-σ, 1-δ written in terms of f^⊕:
///   1 - φφ^⊕ + f^⊕ f φφ^⊕,  1 - φφ^⊕ + φφ^⊕ f^⊕ f,  1 - φφ^⊕ + φφ^⊕ f f^⊕.
/// Throws ContractViolation unless each is a two-sided inverse.
template <StarRing S>
ClosedForms<S> closed_form_inverses(const SumContext<S>& c, const CoreSumWitness<S>& w, const Matrix<S>& f_core) {
  const Matrix<S> one = c.one_x();
  const Matrix<S> pp = c.phi * c.phi_tau;
  ClosedForms<S> out{one - pp + f_core * c.f * pp, one - pp + pp * f_core * c.f, one - pp + pp * c.f * f_core};
  detail::require_two_sided(Matrix<S>(one - w.gamma), out.first, "1-gamma");
  detail::require_two_sided(Matrix<S>(one - w.sigma), out.second, "1-sigma");
  detail::require_two_sided(Matrix<S>(one - w.delta), out.third, "1-delta");
  return out;
}

template <StarRing S>
ClosedForms<S> closed_form_inverses(const SumContext<S>& c, const Matrix<S>& f_core) {
  return closed_form_inverses(c, core_sum_witness(c), f_core);
}

template <StarRing S>
struct ProjectionCore {
  Matrix<S> q;       ///< β*(1 - φφ^⊕)β
  Matrix<S> result;  ///< (f f0)^⊕
};

/// (f f0)^⊕ = f f0 (1-δ)^-1 whenever 1-δ is invertible, via the Hermitian
/// q = β*(1-φφ^⊕)β = 1 - δ - f f0 which annihilates f f0.
template <StarRing S>
Outcome<ProjectionCore<S>> core_of_ff0(const SumContext<S>& c, const CoreSumWitness<S>& w) {
  if (!w.inv_one_minus_delta) return Failure{"NotInvertible", "1-delta is singular"};
  const Matrix<S> one = c.one_x();
  const Matrix<S> ff0 = c.f * c.f0;
  ProjectionCore<S> out;
  out.q = adjoint(c.beta) * (one - c.phi * c.phi_tau) * c.beta;
  if (out.q != one - w.delta - ff0) throw ContractViolation("q != 1 - delta - f f0");
  if (!is_hermitian(out.q)) throw ContractViolation("q is not Hermitian");
  if (!(out.q * ff0).is_zero()) throw ContractViolation("q f f0 != 0");
  out.result = ff0 * *w.inv_one_minus_delta;
  detail::require_valid(verify(InverseKind::core, ff0, out.result), "core inverse of f f0");
  return out;
}

// --- dual core inverse of the sum ---------------------------------------------

/// ρ = α φ_⊕φ α^-1 (1-φφ_⊕) β,  ζ = α(1-φ_⊕φ)β^-1 φφ_⊕ β,
/// ξ = α(1-φ_⊕φ) η* (φ_⊕)* α*.
template <StarRing S>
struct DualCoreSumWitness {
  Matrix<S> rho, zeta, xi;
  std::optional<Matrix<S>> inv_one_minus_rho, inv_one_minus_zeta, inv_one_minus_xi;
};

template <StarRing S>
DualCoreSumWitness<S> dual_core_sum_witness(const SumContext<S>& c) {
  detail::require_tau(c, InverseKind::dual_core);
  const Matrix<S> one = c.one_x();
  const Matrix<S> pp = c.phi * c.phi_tau;  // φφ_⊕
  const Matrix<S> qp = c.phi_tau * c.phi;  // φ_⊕φ
  DualCoreSumWitness<S> w;
  w.rho = c.alpha * qp * c.alpha_inv * (one - pp) * c.beta;
  w.zeta = c.alpha * (one - qp) * c.beta_inv * pp * c.beta;
  w.xi = c.alpha * (one - qp) * adjoint(c.eta) * adjoint(c.phi_tau) * adjoint(c.alpha);
  w.inv_one_minus_rho = try_invert(Matrix<S>(one - w.rho));
  w.inv_one_minus_zeta = try_invert(Matrix<S>(one - w.zeta));
  w.inv_one_minus_xi = try_invert(Matrix<S>(one - w.xi));
  return w;
}

template <StarRing S>
struct DualCoreSumResult {
  DualCoreSumWitness<S> witness;
  std::optional<Matrix<S>> inverse;  ///< f_⊕ when it exists
  std::vector<std::string> failing;
  std::optional<ClosedForms<S>> closed_forms;

  bool exists() const { return inverse.has_value(); }
};

/// f_⊕ = (1-ξ)^-1 α φ_⊕ (1-ρ)^-1 when 1-ρ, 1-ζ, 1-ξ are invertible, checked
/// against the dual-core certificate and the closed forms
///   (1-ρ)^-1 = 1 - φ_⊕φ + φ_⊕φ f f_⊕,  (1-ζ)^-1 = 1 - φ_⊕φ + f f_⊕ φ_⊕φ,
///   (1-ξ)^-1 = 1 - φ_⊕φ + f_⊕ f φ_⊕φ.
template <StarRing S>
DualCoreSumResult<S> sum_dual_core_inverse(const SumContext<S>& c) {
  DualCoreSumResult<S> r{dual_core_sum_witness(c), std::nullopt, {}, std::nullopt};
  const auto& w = r.witness;
  if (!w.inv_one_minus_rho) r.failing.push_back("1-rho");
  if (!w.inv_one_minus_zeta) r.failing.push_back("1-zeta");
  if (!w.inv_one_minus_xi) r.failing.push_back("1-xi");
  if (!r.failing.empty()) return r;
  Matrix<S> x = *w.inv_one_minus_xi * c.alpha * c.phi_tau * *w.inv_one_minus_rho;
  detail::require_valid(verify(InverseKind::dual_core, c.f, x), "dual core inverse of the sum");
  const Matrix<S> one = c.one_x();
  const Matrix<S> qp = c.phi_tau * c.phi;
  ClosedForms<S> cf{one - qp + qp * c.f * x, one - qp + c.f * x * qp, one - qp + x * c.f * qp};
  detail::require_two_sided(Matrix<S>(one - w.rho), cf.first, "1-rho");
  detail::require_two_sided(Matrix<S>(one - w.zeta), cf.second, "1-zeta");
  detail::require_two_sided(Matrix<S>(one - w.xi), cf.third, "1-xi");
  r.closed_forms = std::move(cf);
  r.inverse = std::move(x);
  return r;
}

template <StarRing S>
std::vector<EquationCheck> dual_core_sum_identities(const SumContext<S>& c, const DualCoreSumWitness<S>& w) {
  const Matrix<S> one = c.one_x();
  const Matrix<S> ff0 = c.f * c.f0, f0f = c.f0 * c.f;
  std::vector<EquationCheck> out;
  out.push_back({"rho*f=0", (w.rho * c.f).is_zero()});
  out.push_back({"f*zeta=0", (c.f * w.zeta).is_zero()});
  out.push_back({"f*xi=0", (c.f * w.xi).is_zero()});
  out.push_back({"rho=f0*f*(1-f*f0)", w.rho == f0f * (one - ff0)});
  out.push_back({"zeta=(1-f0*f)*f*f0", w.zeta == (one - f0f) * ff0});
  out.push_back({"xi=(1-f0*f)*(f0*f)^*", w.xi == (one - f0f) * adjoint(f0f)});
  return out;
}

// --- group, {1,2,4}, {1,2,3} and Moore-Penrose inverses of the sum -------------

/// Factors for the τ-generic sums:
///   group:   γ = α(1-φ#φ)η φ# β,  δ = α φ# η (1-φφ#) β
///   others:  λ = α(1-φτφ) η* (φτ)* α*,  μ = β* (φτ)* η* (1-φφτ) β
/// Only the factors the kind needs are populated.
template <StarRing S>
struct TauSumFactors {
  std::optional<Matrix<S>> group_gamma, group_delta, lambda, mu;
};

template <StarRing S>
struct TauSumResult {
  TauSumFactors<S> factors;
  std::vector<std::string> failing;
  std::optional<Matrix<S>> inverse;
  /// The closed-form inverses that were checked, by factor name.
  std::vector<std::pair<std::string, Matrix<S>>> closed_forms;

  bool exists() const { return inverse.has_value(); }
};

template <StarRing S>
TauSumResult<S> sum_tau_inverse(const SumContext<S>& c) {
  const InverseKind tau = c.tau;
  if (tau != InverseKind::group && tau != InverseKind::one_two_four && tau != InverseKind::one_two_three &&
      tau != InverseKind::moore_penrose)
    throw PreconditionViolated("sum_tau_inverse handles group, one_two_four, one_two_three, moore_penrose");
  const Matrix<S> ix = c.one_x(), iy = c.one_y();
  const Matrix<S> pp = c.phi * c.phi_tau;  // φφτ : Y -> Y
  const Matrix<S> qp = c.phi_tau * c.phi;  // φτφ : X -> X
  TauSumResult<S> r;
  auto& fa = r.factors;
  std::optional<Matrix<S>> inv_left, inv_right;  // inverses of the X-side and Y-side factors

  if (tau == InverseKind::group) {
    fa.group_gamma = c.alpha * (ix - qp) * c.eta * c.phi_tau * c.beta;
    fa.group_delta = c.alpha * c.phi_tau * c.eta * (iy - pp) * c.beta;
    inv_left = try_invert(Matrix<S>(ix - *fa.group_gamma));
    inv_right = try_invert(Matrix<S>(ix - *fa.group_delta));
    if (!inv_left) r.failing.push_back("1-gamma");
    if (!inv_right) r.failing.push_back("1-delta");
  } else {
    if (tau != InverseKind::one_two_three) {
      fa.lambda = c.alpha * (ix - qp) * adjoint(c.eta) * adjoint(c.phi_tau) * adjoint(c.alpha);
      inv_left = try_invert(Matrix<S>(ix - *fa.lambda));
      if (!inv_left) r.failing.push_back("1-lambda");
    }
    if (tau != InverseKind::one_two_four) {
      fa.mu = adjoint(c.beta) * adjoint(c.phi_tau) * adjoint(c.eta) * (iy - pp) * c.beta;
      inv_right = try_invert(Matrix<S>(iy - *fa.mu));
      if (!inv_right) r.failing.push_back("1-mu");
    }
  }
  if (!r.failing.empty()) return r;

  Matrix<S> x;
  switch (tau) {
    case InverseKind::group:
    case InverseKind::moore_penrose:
      x = *inv_left * c.alpha * c.phi_tau * *inv_right;
      break;
    case InverseKind::one_two_four:
      x = *inv_left * c.alpha * c.phi_tau;
      break;
    default:
      x = c.phi_tau * c.beta * *inv_right;
      break;
  }
  detail::require_valid(verify(tau, c.f, x), "tau inverse of the sum");

  if (tau == InverseKind::group) {
    Matrix<S> g = ix - qp + x * c.f * qp;
    Matrix<S> d = ix - pp + pp * c.f * x;
    detail::require_two_sided(Matrix<S>(ix - *fa.group_gamma), g, "1-gamma");
    detail::require_two_sided(Matrix<S>(ix - *fa.group_delta), d, "1-delta");
    r.closed_forms = {{"1-gamma", std::move(g)}, {"1-delta", std::move(d)}};
  } else {
    if (fa.lambda) {
      Matrix<S> l = ix - qp + x * c.f * qp;
      detail::require_two_sided(Matrix<S>(ix - *fa.lambda), l, "1-lambda");
      r.closed_forms.emplace_back("1-lambda", std::move(l));
    }
    if (fa.mu) {
      Matrix<S> m = iy - pp + pp * c.f * x;
      detail::require_two_sided(Matrix<S>(iy - *fa.mu), m, "1-mu");
      r.closed_forms.emplace_back("1-mu", std::move(m));
    }
  }
  r.inverse = std::move(x);
  return r;
}

}  // namespace ginv
