#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ginv/json_io.hpp"
#include "ginv/morphism_sum.hpp"
#include "ginv/radical.hpp"
#include "ginv/sampling.hpp"

namespace ginv {

/// Claims a fuzz campaign can exercise. The external names are the ones
/// accepted by `ginv fuzz --theorem`.
enum class Claim {
  core_sum,           // thm2_1
  dual_core_sum,      // thm2_3
  group_sum,          // prop_I
  one_two_four_sum,   // prop_II
  one_two_three_sum,  // prop_III
  mp_sum,             // prop_IV
  radical_core,       // thm3_1
  radical_dual_core,  // thm3_2
};

inline constexpr std::array<std::pair<Claim, std::string_view>, 8> claim_names = {{
    {Claim::core_sum, "thm2_1"},
    {Claim::dual_core_sum, "thm2_3"},
    {Claim::group_sum, "prop_I"},
    {Claim::one_two_four_sum, "prop_II"},
    {Claim::one_two_three_sum, "prop_III"},
    {Claim::mp_sum, "prop_IV"},
    {Claim::radical_core, "thm3_1"},
    {Claim::radical_dual_core, "thm3_2"},
}};

inline std::string_view to_string(Claim c) {
  for (auto [k, name] : claim_names)
    if (k == c) return name;
  return "?";
}

inline std::optional<Claim> parse_claim(std::string_view name) {
  for (auto [k, name_k] : claim_names)
    if (name_k == name) return k;
  return std::nullopt;
}

inline bool is_radical_claim(Claim c) { return c == Claim::radical_core || c == Claim::radical_dual_core; }

/// The scalar ring a claim is instantiated over.
inline std::string_view claim_ring(Claim c) {
  return is_radical_claim(c) ? ring_traits<DualGaussian>::name : ring_traits<GaussianRational>::name;
}

struct CampaignConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t dim_lo = 2, dim_hi = 3;
  Claim claim = Claim::core_sum;
  /// Percentage of trials steered into the rarer branch: non-existence for
  /// the sum claims, ε = 0 for the radical claims.
  unsigned force_percent = 40;
  /// Corrupts the formula output of this trial before the cross-checks; a
  /// campaign with a fault must report a contract violation.
  std::optional<std::size_t> fault_trial;
};

enum class TrialOutcome { exists_agrees, not_exists_agrees, contract_violation };

inline std::string_view to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::exists_agrees: return "exists_agrees";
    case TrialOutcome::not_exists_agrees: return "not_exists_agrees";
    case TrialOutcome::contract_violation: return "contract_violation";
  }
  return "?";
}

struct TrialRecord {
  std::size_t index = 0;
  std::size_t dim = 0;
  bool forced = false;
  TrialOutcome outcome = TrialOutcome::contract_violation;
  std::string detail;
  std::optional<bool> epsilon_is_zero;  // radical claims only
  json inputs = json::object();
  std::vector<EquationCheck> checks;  // sum identities and cross-checks
  bool fault = false;
};

struct CampaignSummary {
  std::size_t exists_agrees = 0;
  std::size_t not_exists_agrees = 0;
  std::size_t contract_violations = 0;
  std::size_t epsilon_zero = 0;
  std::size_t trials = 0;
};

namespace detail {

inline void require_checks(TrialRecord& rec, std::vector<EquationCheck> checks) {
  for (auto& c : checks) {
    if (!c.holds) throw ContractViolation("identity failed: " + c.id);
    rec.checks.push_back(std::move(c));
  }
}

inline void record_check(TrialRecord& rec, std::string id, bool holds) {
  if (!holds) throw ContractViolation("cross-check failed: " + id);
  rec.checks.push_back({std::move(id), true});
}

// Perturbs a computed inverse (or invents one where none exists).
template <StarRing S>
void inject_fault(const TrialRecord& rec, std::optional<Matrix<S>>& inverse, std::size_t rows, std::size_t cols) {
  if (!rec.fault) return;
  if (inverse)
    (*inverse)(0, 0) = (*inverse)(0, 0) + S::one();
  else
    inverse = Matrix<S>(rows, cols);
}

inline void set_outcome(TrialRecord& rec, bool exists) {
  rec.outcome = exists ? TrialOutcome::exists_agrees : TrialOutcome::not_exists_agrees;
}

// Rank for a sum trial: the breaking construction needs 1 <= r <= n - r.
inline std::size_t pick_rank(Sampler& g, std::size_t n, bool forced) {
  if (forced) return g.uniform(1, n / 2);
  return g.uniform(n == 1 ? 1 : 0, n);
}

template <class Build>
auto resample(Build build) {
  for (int attempt = 0; attempt < 64; ++attempt)
    if (auto r = build()) return *r;
  throw PreconditionViolated("sampler could not produce an admissible input");
}

inline void run_core_sum(Sampler& g, std::size_t n, TrialRecord& rec) {
  rec.forced = n >= 2 && rec.forced;
  auto ctx = resample([&]() -> std::optional<SumContext<GaussianRational>> {
    auto phi = sample_core_invertible(g, n, pick_rank(g, n, rec.forced));
    GMatrix eta = rec.forced ? sample_core_breaking_eta(g, phi) : g.matrix(n, n);
    auto c = build_context(phi.phi, eta, InverseKind::core);
    if (!c) return std::nullopt;
    return *c;
  });
  rec.inputs = json{{"phi", entries_to_json(ctx.phi)}, {"eta", entries_to_json(ctx.eta)}};
  auto res = sum_core_inverse(ctx);
  inject_fault(rec, res.inverse, n, n);
  require_checks(rec, core_sum_identities(ctx, res.witness));
  record_check(rec, "epsilon{1} contains (phi+eta)^+", one_inverse_passes_to_epsilon(ctx, mp_inverse(ctx.phi + ctx.eta)));
  auto oracle = oracle_core(ctx.f);
  if (oracle.has_value() != res.exists())
    throw ContractViolation(std::string("formula says ") + (res.exists() ? "exists" : "not exists") + ", oracle disagrees");
  if (res.exists()) {
    record_check(rec, "formula=oracle_core(f)", *res.inverse == *oracle);
    record_check(rec, "formula=core_inverse(f)", *res.inverse == *core_inverse(ctx.f));
    closed_form_inverses(ctx, res.witness, *res.inverse);
    rec.checks.push_back({"closed_forms", true});
  }
  if (res.witness.inv_one_minus_delta) {
    core_of_ff0(ctx, res.witness);
    rec.checks.push_back({"core(f*f0)=f*f0*(1-delta)^-1", true});
  }
  set_outcome(rec, res.exists());
}

inline void run_dual_core_sum(Sampler& g, std::size_t n, TrialRecord& rec) {
  rec.forced = n >= 2 && rec.forced;
  // The dual core picture is the adjoint of the core one: sample there and
  // take adjoints, which carries the breaking construction along.
  auto ctx = resample([&]() -> std::optional<SumContext<GaussianRational>> {
    auto psi = sample_core_invertible(g, n, pick_rank(g, n, rec.forced));
    GMatrix theta = rec.forced ? sample_core_breaking_eta(g, psi) : g.matrix(n, n);
    auto c = build_context(adjoint(psi.phi), adjoint(theta), InverseKind::dual_core);
    if (!c) return std::nullopt;
    return *c;
  });
  rec.inputs = json{{"phi", entries_to_json(ctx.phi)}, {"eta", entries_to_json(ctx.eta)}};
  auto res = sum_dual_core_inverse(ctx);
  inject_fault(rec, res.inverse, n, n);
  require_checks(rec, dual_core_sum_identities(ctx, res.witness));
  auto oracle = oracle_dual_core(ctx.f);
  auto via_duality = core_inverse(adjoint(ctx.f));
  if (oracle.has_value() != via_duality.has_value()) throw ContractViolation("oracles disagree on dual core existence");
  if (oracle.has_value() != res.exists())
    throw ContractViolation(std::string("formula says ") + (res.exists() ? "exists" : "not exists") + ", oracle disagrees");
  if (res.exists()) {
    record_check(rec, "formula=oracle_dual_core(f)", *res.inverse == *oracle);
    record_check(rec, "formula=adjoint(core(f*))", *res.inverse == adjoint(*via_duality));
    rec.checks.push_back({"closed_forms", true});
  }
  set_outcome(rec, res.exists());
}

inline void run_group_sum(Sampler& g, std::size_t n, TrialRecord& rec) {
  rec.forced = n >= 2 && rec.forced;
  auto ctx = resample([&]() -> std::optional<SumContext<GaussianRational>> {
    auto phi = sample_group_invertible(g, n, pick_rank(g, n, rec.forced));
    GMatrix eta = rec.forced ? sample_group_breaking_eta(g, phi) : g.matrix(n, n);
    auto c = build_context(phi.phi, eta, InverseKind::group);
    if (!c) return std::nullopt;
    return *c;
  });
  rec.inputs = json{{"phi", entries_to_json(ctx.phi)}, {"eta", entries_to_json(ctx.eta)}};
  auto res = sum_tau_inverse(ctx);
  inject_fault(rec, res.inverse, n, n);
  record_check(rec, "epsilon{1} contains (phi+eta)^+", one_inverse_passes_to_epsilon(ctx, mp_inverse(ctx.phi + ctx.eta)));
  auto oracle = group_frf(ctx.f);
  if (oracle.has_value() != res.exists())
    throw ContractViolation(std::string("formula says ") + (res.exists() ? "exists" : "not exists") + ", oracle disagrees");
  if (res.exists()) {
    record_check(rec, "formula=group_frf(f)", *res.inverse == *oracle);
    record_check(rec, "formula=oracle_group(f)", *res.inverse == *oracle_group(ctx.f));
    rec.checks.push_back({"closed_forms", true});
  }
  set_outcome(rec, res.exists());
}

inline void run_penrose_sum(Sampler& g, std::size_t n, TrialRecord& rec, InverseKind tau) {
  rec.forced = false;
  std::size_t rows = n, cols = g.uniform(n > 1 ? n - 1 : 1, n + 1);
  if (g.chance(50)) std::swap(rows, cols);
  auto ctx = resample([&]() -> std::optional<SumContext<GaussianRational>> {
    GMatrix phi = g.of_rank(rows, cols, g.uniform(0, std::min(rows, cols)));
    GMatrix phi_tau = tau == InverseKind::one_two_three  ? sample_one_two_three(g, phi)
                      : tau == InverseKind::one_two_four ? sample_one_two_four(g, phi)
                                                         : mp_inverse(phi);
    auto c = build_context_with(phi, g.matrix(rows, cols), tau, phi_tau);
    if (!c) return std::nullopt;
    return *c;
  });
  rec.dim = std::max(rows, cols);
  rec.inputs = json{{"phi", entries_to_json(ctx.phi)}, {"eta", entries_to_json(ctx.eta)},
                    {"phi_tau", entries_to_json(ctx.phi_tau)}};
  auto res = sum_tau_inverse(ctx);
  inject_fault(rec, res.inverse, cols, rows);
  record_check(rec, "epsilon{1} contains (phi+eta)^+", one_inverse_passes_to_epsilon(ctx, mp_inverse(ctx.phi + ctx.eta)));
  // Over the complex field every matrix has a Moore-Penrose inverse, hence
  // inverses of every Penrose subset: the oracle verdict is always "exists".
  if (!res.exists()) throw ContractViolation("formula says not exists, but f always has a " + std::string(to_string(tau)) + " inverse");
  if (tau == InverseKind::moore_penrose) {
    record_check(rec, "formula=mp_inverse(f)", *res.inverse == mp_inverse(ctx.f));
    record_check(rec, "formula=oracle_mp_frf(f)", *res.inverse == oracle_mp_frf(ctx.f));
  }
  if (tau == InverseKind::one_two_three) record_check(rec, "x*f*f=f", normal_one_three_holds(ctx.f, *res.inverse));
  if (tau == InverseKind::one_two_four) record_check(rec, "f*f*x*=f", normal_one_four_holds(ctx.f, *res.inverse));
  rec.checks.push_back({"closed_forms", true});
  set_outcome(rec, true);
}

inline void run_radical(Sampler& g, std::size_t n, TrialRecord& rec, RadicalVariant variant) {
  const bool core = variant == RadicalVariant::core;
  // ε = 0 needs (1 - a a^τ) J (1 - a^τ a) = 0 for the e-part J of j; a
  // random J almost never does that unless a is invertible.
  std::size_t r = rec.forced ? g.uniform(0, n) : g.uniform(0, n - 1);
  auto base = sample_core_invertible(g, n, r);
  GMatrix a0 = core ? base.phi : adjoint(base.phi);
  GMatrix a0_inv = core ? *core_inverse(a0) : *dual_core_inverse(a0);
  DMatrix a = lift(a0);
  if (g.chance(30)) {
    DMatrix candidate = make_dual(a0, g.matrix(n, n));
    if (dual_ring_inverse(candidate, variant)) a = candidate;
  }
  GMatrix j1 = rec.forced ? GMatrix(a0 * a0_inv * g.matrix(n, n) + g.matrix(n, n) * a0_inv * a0) : g.matrix(n, n);
  DMatrix j = make_dual(GMatrix(n, n), j1);
  rec.inputs = json{{"a", entries_to_json(a)}, {"j", entries_to_json(j)}};

  auto p = make_radical_perturbation(a, j, variant);
  auto res = perturbed_inverse(p);
  inject_fault(rec, res.inverse, n, n);
  res.epsilon_is_zero = res.inverse.has_value();
  rec.epsilon_is_zero = res.epsilon_is_zero;
  record_check(rec, "epsilon in radical", radical_check(p.epsilon));
  const DMatrix sum = a + j;
  auto rep = oracle_existence(sum);
  const bool oracle_exists = core ? rep.core_exists : rep.dual_core_exists;
  if (oracle_exists != res.epsilon_is_zero) throw ContractViolation("epsilon criterion disagrees with oracle existence");
  if (res.epsilon_is_zero) {
    if (core) {
      record_check(rec, "formula=oracle_core(a+j)", *res.inverse == *oracle_core(sum));
      auto w = projection_construction(p);
      auto via_q = core_via_projection(sum, w.q);
      record_check(rec, "formula=projection route", via_q && *via_q == *res.inverse);
    } else {
      record_check(rec, "formula=oracle_dual_core(a+j)", *res.inverse == *oracle_dual_core(sum));
      auto dual = oracle_core(DMatrix(adjoint(sum)));
      record_check(rec, "formula=adjoint(core((a+j)*))", dual && adjoint(*dual) == *res.inverse);
    }
    // With ε = 0 the general sum construction applies to f = a + j.
    auto ctx = build_context_with(a, j, core ? InverseKind::core : InverseKind::dual_core, p.a_inv);
    if (core) {
      auto s = sum_core_inverse(*ctx);
      record_check(rec, "sum construction agrees", s.exists() && *s.inverse == *res.inverse);
    } else {
      auto s = sum_dual_core_inverse(*ctx);
      record_check(rec, "sum construction agrees", s.exists() && *s.inverse == *res.inverse);
    }
  }
  set_outcome(rec, res.epsilon_is_zero);
}

}  // namespace detail

/// Runs one trial. Its randomness depends only on (seed, index), so trials
/// can be evaluated in any order.
inline TrialRecord run_trial(const CampaignConfig& cfg, std::size_t index) {
  Sampler g(mix_seed(cfg.seed, index));
  TrialRecord rec;
  rec.index = index;
  rec.dim = g.uniform(cfg.dim_lo, cfg.dim_hi);
  rec.forced = g.chance(cfg.force_percent);
  rec.fault = cfg.fault_trial == index;
  try {
    switch (cfg.claim) {
      case Claim::core_sum: detail::run_core_sum(g, rec.dim, rec); break;
      case Claim::dual_core_sum: detail::run_dual_core_sum(g, rec.dim, rec); break;
      case Claim::group_sum: detail::run_group_sum(g, rec.dim, rec); break;
      case Claim::one_two_four_sum: detail::run_penrose_sum(g, rec.dim, rec, InverseKind::one_two_four); break;
      case Claim::one_two_three_sum: detail::run_penrose_sum(g, rec.dim, rec, InverseKind::one_two_three); break;
      case Claim::mp_sum: detail::run_penrose_sum(g, rec.dim, rec, InverseKind::moore_penrose); break;
      case Claim::radical_core: detail::run_radical(g, rec.dim, rec, RadicalVariant::core); break;
      case Claim::radical_dual_core: detail::run_radical(g, rec.dim, rec, RadicalVariant::dual_core); break;
    }
  } catch (const std::exception& e) {
    rec.outcome = TrialOutcome::contract_violation;
    rec.detail = e.what();
  }
  return rec;
}

inline json trial_to_json(const TrialRecord& rec) {
  json doc;
  doc["trial"] = rec.index;
  doc["dim"] = rec.dim;
  doc["forced"] = rec.forced;
  doc["outcome"] = std::string(to_string(rec.outcome));
  if (rec.epsilon_is_zero) doc["epsilon_is_zero"] = *rec.epsilon_is_zero;
  if (!rec.detail.empty()) doc["detail"] = rec.detail;
  doc["checks"] = rec.checks.size();
  if (rec.fault) doc["fault_injected"] = true;
  doc["inputs"] = rec.inputs;
  return doc;
}

inline json summary_to_json(const CampaignConfig& cfg, const CampaignSummary& s) {
  json doc;
  doc["summary"] = true;
  doc["theorem"] = std::string(to_string(cfg.claim));
  doc["ring"] = std::string(claim_ring(cfg.claim));
  doc["seed"] = cfg.seed;
  doc["trials"] = s.trials;
  doc["dims"] = std::to_string(cfg.dim_lo) + ".." + std::to_string(cfg.dim_hi);
  doc["force_percent"] = cfg.force_percent;
  if (cfg.fault_trial) doc["fault_trial"] = *cfg.fault_trial;
  doc["exists_agrees"] = s.exists_agrees;
  doc["not_exists_agrees"] = s.not_exists_agrees;
  doc["contract_violations"] = s.contract_violations;
  if (is_radical_claim(cfg.claim)) {
    doc["epsilon_zero"] = s.epsilon_zero;
    doc["epsilon_zero_rate"] = s.trials ? static_cast<double>(s.epsilon_zero) / static_cast<double>(s.trials) : 0.0;
  }
  return doc;
}

/// Runs every trial, writing one JSON line per trial (in index order) and a
/// final summary line to `out` when given.
inline CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream* out = nullptr) {
  if (cfg.dim_lo == 0 || cfg.dim_lo > cfg.dim_hi) throw PreconditionViolated("dims must satisfy 1 <= lo <= hi");
  CampaignSummary s;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    TrialRecord rec = run_trial(cfg, i);
    ++s.trials;
    switch (rec.outcome) {
      case TrialOutcome::exists_agrees: ++s.exists_agrees; break;
      case TrialOutcome::not_exists_agrees: ++s.not_exists_agrees; break;
      case TrialOutcome::contract_violation: ++s.contract_violations; break;
    }
    if (rec.epsilon_is_zero.value_or(false)) ++s.epsilon_zero;
    if (out) *out << trial_to_json(rec).dump() << '\n';
  }
  if (out) *out << summary_to_json(cfg, s).dump() << '\n';
  return s;
}

}  // namespace ginv
