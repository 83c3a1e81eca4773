#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "ginv/gaussian.hpp"

namespace ginv {

/// Dual number a + b·e over the Gaussian rationals, with e² = 0 and e* = e.
///
/// A local *-ring: x is invertible exactly when its constant part is nonzero,
/// and the Jacobson radical is the ideal of values with zero constant part.
///
/// Text form: "<gr>+(<gr>)e", with the constant part or the whole e-term
/// omitted when zero, e.g. "1+(2/3i)e", "(1)e", "5".
class DualGaussian {
 public:
  DualGaussian() = default;
  DualGaussian(long c) : c_(c) {}  // NOLINT(google-explicit-constructor)
  DualGaussian(GaussianRational c) : c_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  DualGaussian(GaussianRational c, GaussianRational e) : c_(std::move(c)), e_(std::move(e)) {}

  static DualGaussian zero() { return {}; }
  static DualGaussian one() { return {GaussianRational::one()}; }
  /// The nilpotent generator.
  static DualGaussian eps() { return {GaussianRational::zero(), GaussianRational::one()}; }

  const GaussianRational& const_part() const { return c_; }
  const GaussianRational& eps_part() const { return e_; }

  bool is_zero() const { return c_.is_zero() && e_.is_zero(); }
  bool is_one() const { return c_.is_one() && e_.is_zero(); }
  bool in_radical() const { return c_.is_zero(); }

  DualGaussian operator-() const { return {-c_, -e_}; }
  DualGaussian& operator+=(const DualGaussian& o) {
    c_ += o.c_;
    e_ += o.e_;
    return *this;
  }
  DualGaussian& operator-=(const DualGaussian& o) {
    c_ -= o.c_;
    e_ -= o.e_;
    return *this;
  }
  // (a+be)(c+de) = ac + (ad+bc)e
  DualGaussian& operator*=(const DualGaussian& o) {
    GaussianRational e = c_ * o.e_ + e_ * o.c_;
    c_ *= o.c_;
    e_ = std::move(e);
    return *this;
  }

  friend DualGaussian operator+(DualGaussian a, const DualGaussian& b) { return a += b; }
  friend DualGaussian operator-(DualGaussian a, const DualGaussian& b) { return a -= b; }
  friend DualGaussian operator*(DualGaussian a, const DualGaussian& b) { return a *= b; }
  friend bool operator==(const DualGaussian& a, const DualGaussian& b) { return a.c_ == b.c_ && a.e_ == b.e_; }

  std::string to_string() const {
    if (e_.is_zero()) return c_.to_string();
    std::string tail = "(" + e_.to_string() + ")e";
    if (c_.is_zero()) return tail;
    return c_.to_string() + "+" + tail;
  }

  static DualGaussian parse(std::string_view text) {
    if (text.size() < 2 || text.substr(text.size() - 2) != ")e") return {GaussianRational::parse(text)};
    auto open = text.rfind('(');
    if (open == std::string_view::npos) throw ParseError("malformed dual scalar '" + std::string(text) + "'");
    auto inner = text.substr(open + 1, text.size() - open - 3);
    auto prefix = text.substr(0, open);
    GaussianRational c;
    if (!prefix.empty()) {
      if (prefix.back() != '+' || prefix.size() < 2) throw ParseError("malformed dual scalar '" + std::string(text) + "'");
      c = GaussianRational::parse(prefix.substr(0, prefix.size() - 1));
    }
    return {std::move(c), GaussianRational::parse(inner)};
  }

  friend std::ostream& operator<<(std::ostream& os, const DualGaussian& x) { return os << x.to_string(); }

 private:
  GaussianRational c_;
  GaussianRational e_;
};

inline DualGaussian conj(const DualGaussian& x) { return {conj(x.const_part()), conj(x.eps_part())}; }

inline bool is_invertible(const DualGaussian& x) { return !x.const_part().is_zero(); }

// (a+be)^-1 = a^-1 - a^-1 b a^-1 e
inline DualGaussian inverse(const DualGaussian& x) {
  if (x.const_part().is_zero()) throw NotInvertible("dual number in the radical has no inverse");
  GaussianRational a_inv = inverse(x.const_part());
  return {a_inv, -(a_inv * x.eps_part() * a_inv)};
}

}  // namespace ginv
