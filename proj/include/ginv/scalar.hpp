#pragma once

#include <concepts>
#include <string_view>

#include "ginv/dual.hpp"
#include "ginv/gaussian.hpp"

namespace ginv {

/// A scalar *-ring the matrix code can run over: ring operations, an
/// involution `conj`, and decidable invertibility.
template <class S>
concept StarRing = std::regular<S> && requires(const S& a, const S& b, std::string_view text) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { conj(a) } -> std::same_as<S>;
  { is_invertible(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { S::zero() } -> std::same_as<S>;
  { S::one() } -> std::same_as<S>;
  { S::parse(text) } -> std::same_as<S>;
};

template <class S>
struct ring_traits;

template <>
struct ring_traits<GaussianRational> {
  static constexpr bool is_field = true;
  static constexpr std::string_view name = "gaussian_rational";
};

template <>
struct ring_traits<DualGaussian> {
  static constexpr bool is_field = false;
  static constexpr std::string_view name = "dual_gaussian";
};

template <class S>
inline constexpr bool is_field_v = ring_traits<S>::is_field;

static_assert(StarRing<GaussianRational>);
static_assert(StarRing<DualGaussian>);

}  // namespace ginv
