#pragma once

// Runs the hand-derived cases in golden/derived_cases.json. Shared by the
// unit suite and the acceptance binary.

#include <fstream>
#include <string>
#include <vector>

#include "ginv/json_io.hpp"
#include "ginv/radical.hpp"

namespace ginv::golden {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string message;
};

namespace detail {

template <StarRing S>
Matrix<S> mat(const json& rows) {
  json doc;
  doc["ring"] = std::string(ring_traits<S>::name);
  doc["rows"] = rows.size();
  doc["cols"] = rows.empty() ? 0 : rows[0].size();
  doc["entries"] = rows;
  return matrix_from_json<S>(doc);
}

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

template <StarRing S>
void expect_optional(const std::optional<Matrix<S>>& got, const json& expected, const char* what) {
  if (expected.is_null()) {
    expect(!got.has_value(), std::string(what) + ": expected none, got " + (got ? got->to_string() : ""));
  } else {
    expect(got.has_value(), std::string(what) + ": expected a value, got none");
    expect(*got == mat<S>(expected), std::string(what) + ": got " + got->to_string());
  }
}

template <class T>
std::optional<T> opt(const Outcome<T>& o) {
  if (!o) return std::nullopt;
  return *o;
}

template <StarRing S>
void run_generic(const std::string& op, const json& c) {
  if (op == "invert") {
    expect_optional<S>(try_invert(mat<S>(c["a"])), c["expected"], "inverse");
  } else if (op == "solve_right") {
    Matrix<S> a = mat<S>(c["a"]), b = mat<S>(c["b"]);
    auto r = solve_linear(a, b, Side::right);
    if (c["expected"].is_null()) {
      expect(!r, "expected no solution");
      const Matrix<S>& y = r.inconsistency->combination;
      expect((y * a).is_zero() && !(y * b).is_zero(), "witness does not separate A from B");
    } else {
      expect(bool(r) && a * *r.solution == b, "expected a solution with zero residual");
    }
  } else if (op == "oracle_group_exists") {
    expect(oracle_existence(mat<S>(c["a"])).group_exists == c["expected"].get<bool>(), "group existence differs");
  } else {
    throw std::runtime_error("unknown op " + op);
  }
}

inline void run_case(const json& c) {
  const std::string op = c.at("op").get<std::string>();
  const std::string ring = c.value("ring", "gaussian_rational");
  if (op == "scalar_inverse") {
    DualGaussian x = DualGaussian::parse(c["x"].get<std::string>());
    if (c["expected"].is_null()) {
      expect(!is_invertible(x), "expected not invertible");
    } else {
      expect(inverse(x) == DualGaussian::parse(c["expected"].get<std::string>()), "got " + inverse(x).to_string());
      expect(x * inverse(x) == DualGaussian(1), "product is not 1");
    }
    return;
  }
  if (op == "invert" || op == "solve_right" || op == "oracle_group_exists") {
    if (ring == "dual_gaussian")
      run_generic<DualGaussian>(op, c);
    else
      run_generic<GaussianRational>(op, c);
    return;
  }
  if (op == "radical" || op == "radical_projection") {
    DMatrix a = mat<DualGaussian>(c["a"]), j = mat<DualGaussian>(c["j"]);
    const auto variant = c.value("variant", "core") == "core" ? RadicalVariant::core : RadicalVariant::dual_core;
    auto p = make_radical_perturbation(a, j, variant);
    if (op == "radical_projection") {
      auto w = projection_construction(p);
      if (c.contains("q")) expect(w.q == mat<DualGaussian>(c["q"]), "q = " + w.q.to_string());
      expect((w.q * DMatrix(a + j)).is_zero(), "q (a + j) != 0");
      expect(try_invert(w.u).has_value(), "u singular");
      return;
    }
    auto r = perturbed_inverse(p);
    expect(r.epsilon_is_zero == c["epsilon_zero"].get<bool>(), "epsilon = " + p.epsilon.to_string());
    if (c.contains("epsilon")) expect(p.epsilon == mat<DualGaussian>(c["epsilon"]), "epsilon = " + p.epsilon.to_string());
    expect_optional<DualGaussian>(r.inverse, c["expected"], "perturbed inverse");
    auto oracle = variant == RadicalVariant::core ? oracle_core(DMatrix(a + j)) : oracle_dual_core(DMatrix(a + j));
    expect_optional<DualGaussian>(oracle, c["expected"], "oracle");
    return;
  }

  const GMatrix a = c.contains("a") ? mat<GaussianRational>(c["a"]) : GMatrix();
  if (op == "frf") {
    auto f = full_rank_factorize(a);
    expect(f.F == mat<GaussianRational>(c["F"]) && f.G == mat<GaussianRational>(c["G"]),
           "F = " + f.F.to_string() + ", G = " + f.G.to_string());
    expect(f.F * f.G == a, "FG != A");
  } else if (op == "mp") {
    expect_optional<GaussianRational>(mp_inverse(a), c["expected"], "mp");
  } else if (op == "group") {
    expect_optional<GaussianRational>(opt(group_inverse(a)), c["expected"], "group");
  } else if (op == "core") {
    expect_optional<GaussianRational>(opt(core_inverse(a)), c["expected"], "core");
  } else if (op == "dual_core") {
    expect_optional<GaussianRational>(opt(dual_core_inverse(a)), c["expected"], "dual core");
  } else if (op == "one_three_normal") {
    expect(normal_one_three_holds(a, ijl_inverse(a, InverseKind::one_three)), "x* a* a != a");
  } else if (op == "core_via_projection") {
    expect_optional<GaussianRational>(opt(core_via_projection(a, mat<GaussianRational>(c["p"]))), c["expected"], "projection");
  } else if (op == "verify_core") {
    auto cert = verify(InverseKind::core, a, mat<GaussianRational>(c["x"]));
    expect(cert.valid == c["expected"].get<bool>(), "certificate validity differs");
    if (c.contains("failing")) expect(!cert.holds(c["failing"].get<std::string>()), "expected equation to fail");
  } else if (op == "oracle_core") {
    expect_optional<GaussianRational>(oracle_core(a), c["expected"], "oracle core");
  } else if (op == "oracle_mp") {
    expect_optional<GaussianRational>(oracle_mp_frf(a), c["expected"], "oracle mp");
  } else if (op == "group_frf") {
    expect_optional<GaussianRational>(group_frf(a), c["expected"], "group frf");
  } else if (op == "sum") {
    const auto tau = *parse_inverse_kind(c["tau"].get<std::string>());
    auto ctx = build_context(mat<GaussianRational>(c["phi"]), mat<GaussianRational>(c["eta"]), tau);
    if (c.contains("rejected")) {
      expect(!ctx && ctx.failure().code == c["rejected"].get<std::string>(), "expected rejection");
      return;
    }
    expect(ctx.has_value(), "context rejected: " + (ctx ? std::string() : ctx.failure().code));
    for (const char* key : {"alpha", "epsilon", "f"}) {
      if (!c.contains(key)) continue;
      const GMatrix& got = std::string(key) == "alpha" ? ctx->alpha : std::string(key) == "epsilon" ? ctx->epsilon : ctx->f;
      expect(got == mat<GaussianRational>(c[key]), std::string(key) + " = " + got.to_string());
    }
    std::optional<GMatrix> inv;
    if (tau == InverseKind::core)
      inv = sum_core_inverse(*ctx).inverse;
    else if (tau == InverseKind::dual_core)
      inv = sum_dual_core_inverse(*ctx).inverse;
    else
      inv = sum_tau_inverse(*ctx).inverse;
    expect_optional<GaussianRational>(inv, c["expected"], "sum inverse");
  } else {
    throw std::runtime_error("unknown op " + op);
  }
}

}  // namespace detail

inline std::vector<CaseResult> run_derived_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json cases = json::parse(in);
  std::vector<CaseResult> out;
  for (const auto& c : cases) {
    CaseResult r{c.at("name").get<std::string>(), false, {}};
    try {
      detail::run_case(c);
      r.passed = true;
    } catch (const std::exception& e) {
      r.message = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ginv::golden
