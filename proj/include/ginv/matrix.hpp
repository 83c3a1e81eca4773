#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ginv/errors.hpp"
#include "ginv/scalar.hpp"

namespace ginv {

/// Dense row-major matrix over a scalar *-ring. A value type: copies are
/// deep and `==` compares shape and every entry exactly.
template <StarRing S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionMismatch("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one();
    return m;
  }
  /// Matrix unit E_ij scaled by `value`.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j, S value = S::one()) {
    Matrix m(rows, cols);
    m(i, j) = std::move(value);
    return m;
  }
  static Matrix diagonal(std::initializer_list<S> diag) {
    Matrix m(diag.size(), diag.size());
    std::size_t k = 0;
    for (const auto& d : diag) {
      m(k, k) = d;
      ++k;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<S>& entries() const { return data_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return x.is_zero(); });
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const S& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ',';
        out += (*this)(i, j).to_string();
      }
      out += ']';
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.to_string(); }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch(std::string("operator") + op + " on " + shape() + " and " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using GMatrix = Matrix<GaussianRational>;
using DMatrix = Matrix<DualGaussian>;

/// Conjugate transpose; realizes the involution on morphisms.
template <StarRing S>
Matrix<S> adjoint(const Matrix<S>& a) {
  Matrix<S> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = conj(a(i, j));
  return r;
}

template <StarRing S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <StarRing S>
bool is_hermitian(const Matrix<S>& a) {
  return a.is_square() && adjoint(a) == a;
}

template <StarRing S>
Matrix<S> identity_like(const Matrix<S>& a) {
  if (!a.is_square()) throw DimensionMismatch("identity_like needs a square matrix, got " + a.shape());
  return Matrix<S>::identity(a.rows());
}

// --- dual-number matrix parts ----------------------------------------------

inline GMatrix const_part(const DMatrix& a) {
  GMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).const_part();
  return r;
}

inline GMatrix eps_part(const DMatrix& a) {
  GMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).eps_part();
  return r;
}

/// c + e·ε, entrywise.
inline DMatrix make_dual(const GMatrix& c, const GMatrix& e) {
  if (c.rows() != e.rows() || c.cols() != e.cols()) throw DimensionMismatch("dual parts differ in shape");
  DMatrix r(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) r(i, j) = DualGaussian(c(i, j), e(i, j));
  return r;
}

inline DMatrix lift(const GMatrix& c) { return make_dual(c, GMatrix(c.rows(), c.cols())); }

// --- exact elimination over the field --------------------------------------

namespace detail {

/// In-place Gauss-Jordan reduction of `m`, choosing pivots only among the
/// first `pivot_cols` columns. Pivot rule: first row at or below the current
/// one with a nonzero entry. Returns the pivot columns in order.
inline std::vector<std::size_t> reduce(GMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    GaussianRational inv = inverse(m(row, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      GaussianRational factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// [a | b] side by side.
inline GMatrix hconcat(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat of " + a.shape() + " and " + b.shape());
  GMatrix r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

inline GMatrix block(const GMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  GMatrix r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = m(r0 + i, c0 + j);
  return r;
}

}  // namespace detail

/// Row-echelon rank. Only defined over the field.
template <StarRing S>
std::size_t rank(const Matrix<S>& a) {
  if constexpr (!is_field_v<S>) {
    throw UnsupportedRing("rank is only defined over " + std::string(ring_traits<GaussianRational>::name));
  } else {
    GMatrix work = a;
    return detail::reduce(work, work.cols()).size();
  }
}

// --- inversion ---------------------------------------------------------------

inline GMatrix invert(const GMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("invert needs a square matrix, got " + a.shape());
  const std::size_t n = a.rows();
  GMatrix work = detail::hconcat(a, GMatrix::identity(n));
  auto pivots = detail::reduce(work, n);
  if (pivots.size() < n) {
    std::size_t stage = 0;
    while (stage < pivots.size() && pivots[stage] == stage) ++stage;
    throw NotInvertible("no invertible pivot in column " + std::to_string(stage), stage);
  }
  return detail::block(work, 0, n, n, n);
}

/// Block lift: (A + Bε)^-1 = A^-1 - A^-1 B A^-1 ε.
inline DMatrix invert(const DMatrix& a) {
  GMatrix c_inv = invert(const_part(a));
  return make_dual(c_inv, -(c_inv * eps_part(a) * c_inv));
}

template <StarRing S>
std::optional<Matrix<S>> try_invert(const Matrix<S>& a) {
  try {
    return invert(a);
  } catch (const NotInvertible&) {
    return std::nullopt;
  }
}

// --- full-rank factorization ------------------------------------------------

/// Thrown by `full_rank_factorize` for the zero matrix, which has none.
class ZeroMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FullRankFactorization {
  GMatrix F;  ///< n x r, full column rank
  GMatrix G;  ///< r x m, full row rank
  std::size_t rank = 0;
};

/// A = F G with F the pivot columns of A and G the nonzero rows of its
/// reduced row echelon form.
inline FullRankFactorization full_rank_factorize(const GMatrix& a) {
  GMatrix work = a;
  auto pivots = detail::reduce(work, work.cols());
  if (pivots.empty()) throw ZeroMatrix("zero matrix has no full-rank factorization");
  const std::size_t r = pivots.size();
  FullRankFactorization out{GMatrix(a.rows(), r), detail::block(work, 0, 0, r, a.cols()), r};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k) out.F(i, k) = a(i, pivots[k]);
  return out;
}

// --- linear matrix equations -----------------------------------------------

enum class Side { left, right };

/// Proof that a linear system has no solution.
///
/// For a right solve A X = B, `combination` is a row vector y with
/// y A = 0 and y B != 0. For a left solve X A = B it is a column vector z
/// with A z = 0 and B z != 0. `row` is the offending row of the reduced
/// field system the solver eliminated.
template <StarRing S>
struct Inconsistency {
  std::size_t row = 0;
  Matrix<S> combination;
};

template <StarRing S>
struct LinearSolution {
  std::optional<Matrix<S>> solution;
  std::optional<Inconsistency<S>> inconsistency;

  explicit operator bool() const { return solution.has_value(); }
};

namespace detail {

struct FieldSolve {
  std::optional<GMatrix> x;
  std::size_t bad_row = 0;
  GMatrix y;  // 1 x rows(A): left combination killing A but not B
};

// A X = B over the field, tracking row operations so that an inconsistent
// row comes with its combination of the original equations.
inline FieldSolve solve_right_field(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: A is " + a.shape() + ", B is " + b.shape());
  const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
  GMatrix work = hconcat(hconcat(a, b), GMatrix::identity(n));
  auto pivots = reduce(work, m);
  for (std::size_t i = pivots.size(); i < n; ++i) {
    bool consistent = true;
    for (std::size_t j = 0; j < k; ++j)
      if (!work(i, m + j).is_zero()) consistent = false;
    if (!consistent) return {std::nullopt, i, block(work, i, m + k, 1, n)};
  }
  GMatrix x(m, k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = work(r, m + j);
  return {std::move(x), 0, {}};
}

// Right solve over the dual numbers: with A = A0 + A1ε and X = X0 + X1ε the
// system is A0 X0 = B0, A1 X0 + A0 X1 = B1, solved jointly as one field system.
inline FieldSolve solve_right_dual_block(const DMatrix& a, const DMatrix& b, std::size_t& rows_out) {
  const std::size_t n = a.rows(), m = a.cols(), k = b.cols();
  GMatrix a0 = const_part(a), a1 = eps_part(a);
  GMatrix big(2 * n, 2 * m), rhs(2 * n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      big(i, j) = a0(i, j);
      big(n + i, j) = a1(i, j);
      big(n + i, m + j) = a0(i, j);
    }
    for (std::size_t j = 0; j < k; ++j) {
      rhs(i, j) = b(i, j).const_part();
      rhs(n + i, j) = b(i, j).eps_part();
    }
  }
  rows_out = n;
  return solve_right_field(big, rhs);
}

template <StarRing S>
LinearSolution<S> solve_right(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: A is " + a.shape() + ", B is " + b.shape());
  if constexpr (is_field_v<S>) {
    auto r = solve_right_field(a, b);
    if (r.x) return {std::move(r.x), std::nullopt};
    return {std::nullopt, Inconsistency<S>{r.bad_row, std::move(r.y)}};
  } else {
    std::size_t n = 0;
    auto r = solve_right_dual_block(a, b, n);
    const std::size_t m = a.cols();
    if (r.x) return {make_dual(block(*r.x, 0, 0, m, b.cols()), block(*r.x, m, 0, m, b.cols())), std::nullopt};
    // y = [y0 | y1] kills the block system, so Y = y1 + y0 ε kills A.
    return {std::nullopt, Inconsistency<S>{r.bad_row, make_dual(block(r.y, 0, n, 1, n), block(r.y, 0, 0, 1, n))}};
  }
}

}  // namespace detail

/// Solves A X = B (`Side::right`) or X A = B (`Side::left`) exactly. Any
/// solution may be returned; when there is none, the result carries an
/// `Inconsistency` witness instead.
template <StarRing S>
LinearSolution<S> solve_linear(const Matrix<S>& a, const Matrix<S>& b, Side side) {
  if (side == Side::right) return detail::solve_right(a, b);
  if (a.cols() != b.cols()) throw DimensionMismatch("solve: A is " + a.shape() + ", B is " + b.shape());
  // X A = B  <=>  A^T X^T = B^T; the scalar rings are commutative.
  auto r = detail::solve_right(transpose(a), transpose(b));
  if (r.solution) return {transpose(*r.solution), std::nullopt};
  return {std::nullopt, Inconsistency<S>{r.inconsistency->row, transpose(r.inconsistency->combination)}};
}

}  // namespace ginv
