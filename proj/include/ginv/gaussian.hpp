#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "ginv/rational.hpp"

namespace ginv {

/// Complex number with exact rational real and imaginary parts.
///
/// Involution is complex conjugation. Every nonzero value is invertible, so
/// this is the field the factorization-based algorithms run over.
///
/// Text form: "p/q+r/si" with either part omitted when zero and a unit
/// imaginary coefficient written as a bare "i", e.g. "2", "1/2i", "-3+i".
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {Rational(1)}; }
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  /// |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    Rational mag = im_.sign() < 0 ? -im_ : im_;
    if (!mag.is_one()) imag = mag.to_string();
    imag += 'i';
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
  }

  static GaussianRational parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.back() != 'i') return {Rational::parse(text)};
    std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);
    Rational im;
    if (imag_text.empty() || imag_text == "+")
      im = Rational(1);
    else if (imag_text == "-")
      im = Rational(-1);
    else
      im = Rational::parse(imag_text);
    Rational re = real_text.empty() ? Rational() : Rational::parse(real_text);
    return {std::move(re), std::move(im)};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

inline bool is_invertible(const GaussianRational& z) { return !z.is_zero(); }

inline GaussianRational inverse(const GaussianRational& z) {
  if (z.is_zero()) throw NotInvertible("zero has no inverse");
  Rational n = z.norm();
  return {z.re() / n, -z.im() / n};
}

}  // namespace ginv
