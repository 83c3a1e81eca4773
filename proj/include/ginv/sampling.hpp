#pragma once

#include <cstdint>
#include <random>

#include "ginv/inverses.hpp"

namespace ginv {

/// splitmix64 finalizer; derives independent per-trial seeds from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic generator of small exact scalars and structured matrices.
///
/// Rationals have numerators uniform in [-3, 3] and denominators in {1, 2};
/// Gaussian rationals draw an imaginary part half of the time. Everything is
/// derived from the engine by plain modular reduction so a seed reproduces
/// the same values on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(next() % (hi - lo + 1)); }

  /// True with probability percent/100.
  bool chance(unsigned percent) { return next() % 100 < percent; }

  Rational rational() {
    long num = static_cast<long>(uniform(0, 6)) - 3;
    long den = static_cast<long>(uniform(1, 2));
    return Rational(num, den);
  }

  GaussianRational gaussian() {
    Rational re = rational();
    if (chance(50)) return {re};
    return {re, rational()};
  }

  GMatrix matrix(std::size_t rows, std::size_t cols) {
    GMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = gaussian();
    return m;
  }

  GMatrix invertible(std::size_t n) {
    for (;;) {
      GMatrix m = matrix(n, n);
      if (try_invert(m)) return m;
    }
  }

  /// Rank exactly r (r <= min(rows, cols)).
  GMatrix of_rank(std::size_t rows, std::size_t cols, std::size_t r) {
    if (r == 0) return GMatrix(rows, cols);
    for (;;) {
      GMatrix m = matrix(rows, r) * matrix(r, cols);
      if (rank(m) == r) return m;
    }
  }

  /// A unitary matrix with Gaussian-rational entries: a signed permutation
  /// with unit phases, optionally composed with a (3/5, 4/5) rotation.
  GMatrix unitary(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = k;
    for (std::size_t k = n; k > 1; --k) std::swap(perm[k - 1], perm[uniform(0, k - 1)]);
    static const GaussianRational phases[4] = {GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                               -GaussianRational::i()};
    GMatrix u(n, n);
    for (std::size_t k = 0; k < n; ++k) u(k, perm[k]) = phases[uniform(0, 3)];
    if (n >= 2 && chance(50)) {
      std::size_t p = uniform(0, n - 2);
      GMatrix g = GMatrix::identity(n);
      g(p, p) = Rational(3, 5);
      g(p, p + 1) = Rational(-4, 5);
      g(p + 1, p) = Rational(4, 5);
      g(p + 1, p + 1) = Rational(3, 5);
      u = g * u;
    }
    return u;
  }

 private:
  std::mt19937_64 engine_;
};

/// [[a, b], [c, d]] assembled from blocks.
inline GMatrix block_matrix(const GMatrix& a, const GMatrix& b, const GMatrix& c, const GMatrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw DimensionMismatch("block shapes do not tile");
  GMatrix m(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&m](const GMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < blk.rows(); ++i)
      for (std::size_t j = 0; j < blk.cols(); ++j) m(r0 + i, c0 + j) = blk(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

/// A core-invertible matrix U [[T, S], [0, 0]] U* of rank r with T invertible
/// and U unitary. Every core-invertible matrix has this shape.
struct CoreInvertibleSample {
  GMatrix phi;
  GMatrix unitary;
  GMatrix t, s;
  std::size_t rank = 0;
};

inline CoreInvertibleSample sample_core_invertible(Sampler& g, std::size_t n, std::size_t r) {
  CoreInvertibleSample out;
  out.rank = r;
  out.unitary = g.unitary(n);
  out.t = g.invertible(r);
  out.s = g.matrix(r, n - r);
  GMatrix hs = block_matrix(out.t, out.s, GMatrix(n - r, r), GMatrix(n - r, n - r));
  out.phi = out.unitary * hs * adjoint(out.unitary);
  return out;
}

/// Perturbation η of a core-invertible φ (given in the shape above) for which
/// 1 + φ^⊕η is invertible but f = φ + η - ε has no core inverse.
///
/// In the unitary frame, with η = [[E11, E12], [E21, E22]], K = T + E11 and
/// L = E21 K^-1, the sum is f = [I; L] [K, S + E12], which is group
/// invertible iff K + (S + E12) L is. Choosing S + E12 = (Z - K) L⁺ for a
/// singular Z and a left inverse L⁺ makes it singular. Needs 1 <= r <= n - r.
inline GMatrix sample_core_breaking_eta(Sampler& g, const CoreInvertibleSample& phi) {
  const std::size_t r = phi.rank, n = phi.phi.rows();
  if (r == 0 || 2 * r > n) throw PreconditionViolated("breaking perturbation needs 1 <= rank <= n - rank");
  for (;;) {
    GMatrix e11 = g.matrix(r, r);
    auto k_inv = try_invert(GMatrix(phi.t + e11));
    if (!k_inv) continue;
    GMatrix k = phi.t + e11;
    GMatrix e21 = g.matrix(n - r, r);
    GMatrix l = e21 * *k_inv;
    auto gram_inv = try_invert(GMatrix(adjoint(l) * l));
    if (!gram_inv) continue;
    GMatrix z = r == 1 ? GMatrix(1, 1) : g.of_rank(r, r, r - 1);
    GMatrix w = (z - k) * *gram_inv * adjoint(l);
    GMatrix e12 = w - phi.s;
    GMatrix e22 = g.matrix(n - r, n - r);
    GMatrix eta = block_matrix(e11, e12, e21, e22);
    return phi.unitary * eta * adjoint(phi.unitary);
  }
}

/// A group-invertible matrix P (B ⊕ 0) P^-1 of rank r with B invertible.
struct GroupInvertibleSample {
  GMatrix phi;
  GMatrix similarity;
  GMatrix b;
  std::size_t rank = 0;
};

inline GroupInvertibleSample sample_group_invertible(Sampler& g, std::size_t n, std::size_t r) {
  GroupInvertibleSample out;
  out.rank = r;
  out.similarity = g.invertible(n);
  out.b = g.invertible(r);
  GMatrix d = block_matrix(out.b, GMatrix(r, n - r), GMatrix(n - r, r), GMatrix(n - r, n - r));
  out.phi = out.similarity * d * invert(out.similarity);
  return out;
}

/// Perturbation of a group-invertible φ for which f = φ + η - ε (built with
/// φ#) is not group invertible; the group analogue of
/// `sample_core_breaking_eta` with S = 0 and a similarity instead of a
/// unitary frame.
inline GMatrix sample_group_breaking_eta(Sampler& g, const GroupInvertibleSample& phi) {
  const std::size_t r = phi.rank, n = phi.phi.rows();
  if (r == 0 || 2 * r > n) throw PreconditionViolated("breaking perturbation needs 1 <= rank <= n - rank");
  for (;;) {
    GMatrix e11 = g.matrix(r, r);
    auto k_inv = try_invert(GMatrix(phi.b + e11));
    if (!k_inv) continue;
    GMatrix k = phi.b + e11;
    GMatrix e21 = g.matrix(n - r, r);
    GMatrix l = e21 * *k_inv;
    auto gram_inv = try_invert(GMatrix(adjoint(l) * l));
    if (!gram_inv) continue;
    GMatrix z = r == 1 ? GMatrix(1, 1) : g.of_rank(r, r, r - 1);
    GMatrix e12 = (z - k) * *gram_inv * adjoint(l);
    GMatrix e22 = g.matrix(n - r, n - r);
    GMatrix eta = block_matrix(e11, e12, e21, e22);
    return phi.similarity * eta * invert(phi.similarity);
  }
}

/// P (B ⊕ N) P^-1 with B invertible and N a nonzero strictly upper triangular
/// block: a square matrix without a group inverse. Needs n >= 2.
inline GMatrix sample_index_above_one(Sampler& g, std::size_t n) {
  if (n < 2) throw PreconditionViolated("every 1x1 matrix has index at most one");
  const std::size_t r = g.uniform(0, n - 2);
  GMatrix d = block_matrix(g.invertible(r), GMatrix(r, n - r), GMatrix(n - r, r), GMatrix(n - r, n - r));
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = g.gaussian();
  d(r, r + 1) = GaussianRational(1);
  GMatrix p = g.invertible(n);
  return p * d * invert(p);
}

/// A {1,2,3}-inverse of φ other than the Moore-Penrose one in general:
/// φ† + (1 - φ†φ) Z φφ†.
inline GMatrix sample_one_two_three(Sampler& g, const GMatrix& phi) {
  GMatrix mp = mp_inverse(phi);
  GMatrix ix = GMatrix::identity(phi.cols());
  return mp + (ix - mp * phi) * g.matrix(phi.cols(), phi.rows()) * phi * mp;
}

/// φ† + φ†φ Z (1 - φφ†), a {1,2,4}-inverse.
inline GMatrix sample_one_two_four(Sampler& g, const GMatrix& phi) {
  GMatrix mp = mp_inverse(phi);
  GMatrix iy = GMatrix::identity(phi.rows());
  return mp + mp * phi * g.matrix(phi.cols(), phi.rows()) * (iy - phi * mp);
}

}  // namespace ginv
