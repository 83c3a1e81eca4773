// ginv: compute and verify generalized inverses, run the sum and radical
// perturbation constructions, and run seeded fuzz campaigns.
//
// Exit codes: 0 ok, 2 inverse does not exist (or candidate rejected),
// 3 input error, 4 precondition not met, 5 contract violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ginv/campaign.hpp"
#include "ginv/json_io.hpp"
#include "ginv/morphism_sum.hpp"
#include "ginv/radical.hpp"

namespace {

using namespace ginv;

enum Exit : int { ok = 0, not_exists = 2, input_error = 3, precondition = 4, contract = 5 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnyMatrix load_matrix(const std::string& path, const std::string& ring) {
  AnyMatrix m = parse_matrix_document(read_file(path));
  if (!ring.empty()) {
    const bool is_gaussian = std::holds_alternative<GMatrix>(m);
    const std::string_view actual = is_gaussian ? ring_traits<GaussianRational>::name : ring_traits<DualGaussian>::name;
    if (actual != ring) throw InputError(path + " holds a " + std::string(actual) + " matrix, --ring is " + ring);
  }
  return m;
}

DMatrix to_dual(const AnyMatrix& m) {
  if (auto* d = std::get_if<DMatrix>(&m)) return *d;
  return lift(std::get<GMatrix>(m));
}

/// Both operands in the same ring; a Gaussian operand is lifted when the other
/// one is dual.
template <class F>
int with_pair(const AnyMatrix& a, const AnyMatrix& b, F&& fn) {
  if (auto* ga = std::get_if<GMatrix>(&a); ga && std::holds_alternative<GMatrix>(b))
    return fn(*ga, std::get<GMatrix>(b));
  return fn(to_dual(a), to_dual(b));
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
  void write(const json& doc) { stream() << doc.dump(2) << '\n'; }

 private:
  std::ofstream file_;
};

InverseKind require_kind(const std::string& name) {
  auto k = parse_inverse_kind(name);
  if (!k) throw InputError("unknown inverse kind '" + name + "'");
  return *k;
}

template <StarRing S>
Outcome<Matrix<S>> any_ring_inverse(const Matrix<S>& a, InverseKind kind) {
  if constexpr (is_field_v<S>) {
    return compute_inverse(a, kind);
  } else {
    if (requires_square(kind)) detail::require_square(a, to_string(kind));
    auto r = tau_inverse(a, kind);
    if (!r) return Failure{"NotInvertible", "no " + std::string(to_string(kind)) + " inverse"};
    return *r;
  }
}

// --- compute ------------------------------------------------------------------

int cmd_compute(const std::string& file, const std::string& kind_name, const std::string& ring, Output& out) {
  const InverseKind kind = require_kind(kind_name);
  return std::visit(
      [&](const auto& a) {
        json doc;
        doc["kind"] = std::string(to_string(kind));
        doc["input"] = matrix_to_json(a);
        auto r = any_ring_inverse(a, kind);
        doc["exists"] = r.has_value();
        if (!r) {
          doc["reason"] = json{{"code", r.failure().code}, {"detail", r.failure().detail}};
          out.write(doc);
          return int(not_exists);
        }
        auto cert = verify(kind, a, *r);
        doc["inverse"] = matrix_to_json(*r);
        doc["certificate"] = certificate_to_json(cert);
        out.write(doc);
        return cert.valid ? int(ok) : int(contract);
      },
      load_matrix(file, ring));
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const std::string& a_file, const std::string& x_file, const std::string& kind_name,
               const std::string& ring, Output& out) {
  const InverseKind kind = require_kind(kind_name);
  return with_pair(load_matrix(a_file, ring), load_matrix(x_file, ring), [&](const auto& a, const auto& x) {
    auto cert = verify(kind, a, x);
    out.write(certificate_to_json(cert));
    return cert.valid ? int(ok) : int(not_exists);
  });
}

// --- perturb ------------------------------------------------------------------

template <StarRing S>
json context_to_json(const SumContext<S>& c) {
  json doc;
  doc["tau"] = std::string(to_string(c.tau));
  doc["phi"] = matrix_to_json(c.phi);
  doc["eta"] = matrix_to_json(c.eta);
  doc["phi_tau"] = matrix_to_json(c.phi_tau);
  doc["alpha"] = matrix_to_json(c.alpha);
  doc["beta"] = matrix_to_json(c.beta);
  doc["epsilon"] = matrix_to_json(c.epsilon);
  doc["f"] = matrix_to_json(c.f);
  doc["f0"] = matrix_to_json(c.f0);
  return doc;
}

template <StarRing S>
int finish_sum(json& doc, InverseKind kind, const SumContext<S>& c, const std::optional<Matrix<S>>& inverse,
               const std::vector<std::string>& failing, Output& out) {
  doc["exists"] = inverse.has_value();
  if (inverse) {
    doc["inverse"] = matrix_to_json(*inverse);
    doc["certificate"] = certificate_to_json(verify(kind, c.f, *inverse));
  } else {
    doc["singular_factors"] = failing;
  }
  out.write(doc);
  return inverse ? int(ok) : int(not_exists);
}

template <StarRing S>
int perturb(const Matrix<S>& phi, const Matrix<S>& eta, InverseKind tau, Output& out) {
  if (!is_sum_tau(tau)) throw InputError(std::string(to_string(tau)) + " is not a {1,2}-inverse kind");
  auto ctx = build_context(phi, eta, tau);
  if (!ctx) {
    json doc{{"tau", std::string(to_string(tau))},
             {"precondition", json{{"code", ctx.failure().code}, {"detail", ctx.failure().detail}}}};
    out.write(doc);
    return precondition;
  }
  const SumContext<S>& c = *ctx;
  json doc = context_to_json(c);
  if (tau == InverseKind::core) {
    auto r = sum_core_inverse(c);
    doc["witness"] = json{{"gamma", matrix_to_json(r.witness.gamma)},
                          {"sigma", matrix_to_json(r.witness.sigma)},
                          {"delta", matrix_to_json(r.witness.delta)}};
    doc["identities"] = checks_to_json(core_sum_identities(c, r.witness));
    return finish_sum(doc, tau, c, r.inverse, r.failing, out);
  }
  if (tau == InverseKind::dual_core) {
    auto r = sum_dual_core_inverse(c);
    doc["witness"] = json{{"rho", matrix_to_json(r.witness.rho)},
                          {"zeta", matrix_to_json(r.witness.zeta)},
                          {"xi", matrix_to_json(r.witness.xi)}};
    doc["identities"] = checks_to_json(dual_core_sum_identities(c, r.witness));
    return finish_sum(doc, tau, c, r.inverse, r.failing, out);
  }
  auto r = sum_tau_inverse(c);
  json factors = json::object();
  auto put = [&factors](const char* name, const std::optional<Matrix<S>>& m) {
    if (m) factors[name] = matrix_to_json(*m);
  };
  put("gamma", r.factors.group_gamma);
  put("delta", r.factors.group_delta);
  put("lambda", r.factors.lambda);
  put("mu", r.factors.mu);
  doc["witness"] = factors;
  return finish_sum(doc, tau, c, r.inverse, r.failing, out);
}

int cmd_perturb(const std::string& phi_file, const std::string& eta_file, const std::string& tau_name,
                const std::string& ring, Output& out) {
  const InverseKind tau = require_kind(tau_name);
  return with_pair(load_matrix(phi_file, ring), load_matrix(eta_file, ring),
                   [&](const auto& phi, const auto& eta) { return perturb(phi, eta, tau, out); });
}

// --- radical ------------------------------------------------------------------

int cmd_radical(const std::string& a_file, const std::string& j_file, const std::string& variant_name,
                Output& out) {
  RadicalVariant variant;
  if (variant_name == "core")
    variant = RadicalVariant::core;
  else if (variant_name == "dual" || variant_name == "dual_core")
    variant = RadicalVariant::dual_core;
  else
    throw InputError("variant must be core or dual, got '" + variant_name + "'");

  const DMatrix a = to_dual(load_matrix(a_file, ""));
  const DMatrix j = to_dual(load_matrix(j_file, ""));
  if (!a.is_square() || a.rows() != j.rows() || a.cols() != j.cols())
    throw DimensionMismatch("a is " + a.shape() + ", j is " + j.shape());

  json doc;
  doc["variant"] = std::string(to_string(variant));
  doc["a"] = matrix_to_json(a);
  doc["j"] = matrix_to_json(j);
  doc["radical_check"] = radical_check(j);
  if (!radical_check(j)) {
    doc["precondition"] = json{{"code", "NotInRadical"}, {"detail", "j has an entry with nonzero constant part"}};
    out.write(doc);
    return precondition;
  }
  auto a_inv = dual_ring_inverse(a, variant);
  if (!a_inv) {
    doc["precondition"] = json{{"code", variant == RadicalVariant::core ? "NotCoreInvertible" : "NotDualCoreInvertible"},
                               {"detail", "a has no " + std::string(to_string(variant)) + " inverse"}};
    out.write(doc);
    return precondition;
  }
  auto p = make_radical_perturbation(a, j, variant, a_inv);
  auto r = perturbed_inverse(p);
  doc["a_inverse"] = matrix_to_json(p.a_inv);
  doc["epsilon"] = matrix_to_json(p.epsilon);
  doc["epsilon_is_zero"] = r.epsilon_is_zero;
  doc["exists"] = r.inverse.has_value();
  if (r.inverse) {
    const InverseKind kind = variant == RadicalVariant::core ? InverseKind::core : InverseKind::dual_core;
    doc["inverse"] = matrix_to_json(*r.inverse);
    doc["certificate"] = certificate_to_json(verify(kind, DMatrix(a + j), *r.inverse));
  } else {
    doc["oracle_confirms_nonexistence"] = r.oracle_confirms_nonexistence;
  }
  out.write(doc);
  return r.inverse ? int(ok) : int(not_exists);
}

// --- fuzz ---------------------------------------------------------------------

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad --dims '" + text + "', expected N or LO..HI");
    return std::stoul(s);
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto n = number(text);
    return {n, n};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int cmd_fuzz(const std::string& theorem, std::uint64_t seed, std::size_t trials, const std::string& dims,
             const std::string& ring, unsigned force, std::optional<std::size_t> fault, std::ostream& out) {
  auto claim = parse_claim(theorem);
  if (!claim) throw InputError("unknown claim '" + theorem + "'");
  if (!ring.empty() && ring != claim_ring(*claim))
    throw InputError(theorem + " runs over " + std::string(claim_ring(*claim)) + ", not " + ring);
  CampaignConfig cfg;
  cfg.claim = *claim;
  cfg.seed = seed;
  cfg.trials = trials;
  std::tie(cfg.dim_lo, cfg.dim_hi) = parse_dims(dims);
  if (cfg.dim_lo == 0 || cfg.dim_lo > cfg.dim_hi || cfg.dim_hi > 8) throw InputError("--dims must satisfy 1 <= LO <= HI <= 8");
  if (force > 100) throw InputError("--force is a percentage");
  cfg.force_percent = force;
  cfg.fault_trial = fault;
  auto summary = run_campaign(cfg, &out);
  return summary.contract_violations == 0 ? int(ok) : int(contract);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized inverses over rings with involution"};
  app.require_subcommand(1);

  std::string ring, out_path;
  app.add_option("--ring", ring, "Expected scalar ring")
      ->check(CLI::IsMember({"gaussian_rational", "dual_gaussian"}));
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::string file_a, file_b, kind = "moore_penrose", tau = "core", variant = "core", theorem, dims = "2..3";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  unsigned force = 40;
  std::optional<std::size_t> fault;

  auto* compute = app.add_subcommand("compute", "Compute an inverse and its certificate");
  compute->add_option("matrix", file_a, "Matrix JSON file")->required();
  compute->add_option("--kind,--tau", kind, "Inverse kind");

  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate inverse");
  verify_cmd->add_option("matrix", file_a, "Matrix JSON file")->required();
  verify_cmd->add_option("candidate", file_b, "Candidate inverse JSON file")->required();
  verify_cmd->add_option("--kind,--tau", kind, "Inverse kind");

  auto* perturb_cmd = app.add_subcommand("perturb", "Inverse of phi + eta - epsilon");
  perturb_cmd->add_option("phi", file_a, "phi JSON file")->required();
  perturb_cmd->add_option("eta", file_b, "eta JSON file")->required();
  perturb_cmd->add_option("--tau,--kind", tau, "core, dual_core, group, one_two_three, one_two_four, moore_penrose");

  auto* radical_cmd = app.add_subcommand("radical", "Core inverse of a + j for j in the radical");
  radical_cmd->add_option("a", file_a, "a JSON file")->required();
  radical_cmd->add_option("j", file_b, "j JSON file")->required();
  radical_cmd->add_option("--variant", variant, "core or dual");

  auto* fuzz = app.add_subcommand("fuzz", "Seeded campaign checking a claim against the oracle");
  fuzz->add_option("--theorem", theorem, "thm2_1, thm2_3, prop_I, prop_II, prop_III, prop_IV, thm3_1, thm3_2")
      ->required();
  fuzz->add_option("--seed", seed, "Campaign seed");
  fuzz->add_option("--trials", trials, "Number of trials");
  fuzz->add_option("--dims", dims, "Dimension range LO..HI");
  fuzz->add_option("--force", force, "Percent of trials steered into the rare branch");
  fuzz->add_option("--inject-fault", fault, "Corrupt the result of this trial (checks the harness)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input_error;
  }

  try {
    Output out(out_path);
    if (*compute) return cmd_compute(file_a, kind, ring, out);
    if (*verify_cmd) return cmd_verify(file_a, file_b, kind, ring, out);
    if (*perturb_cmd) return cmd_perturb(file_a, file_b, tau, ring, out);
    if (*radical_cmd) return cmd_radical(file_a, file_b, variant, out);
    return cmd_fuzz(theorem, seed, trials, dims, ring, force, fault, out.stream());
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return input_error;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return input_error;
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << '\n';
    return input_error;
  } catch (const UnsupportedRing& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return input_error;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return precondition;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return contract;
  }
}
