#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace ginv {

/// Why a computation produced no value. `code` is a stable identifier
/// (e.g. "NotGroupInvertible"), `detail` is free text for humans.
struct Failure {
  std::string code;
  std::string detail;
};

/// A value or a structured reason for its absence. Non-existence of an
/// inverse is an expected result, not an error, so it travels here rather
/// than as an exception.
template <class T>
class Outcome {
 public:
  Outcome(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Outcome(Failure failure) : state_(std::move(failure)) {}  // NOLINT(google-explicit-constructor)

  bool has_value() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return has_value(); }

  const T& value() const& {
    if (!has_value()) throw std::logic_error("Outcome has no value: " + failure().code);
    return std::get<T>(state_);
  }
  T&& value() && {
    if (!has_value()) throw std::logic_error("Outcome has no value: " + failure().code);
    return std::get<T>(std::move(state_));
  }
  const T& operator*() const& { return value(); }
  const T* operator->() const { return &value(); }

  const Failure& failure() const { return std::get<Failure>(state_); }

 private:
  std::variant<T, Failure> state_;
};

}  // namespace ginv
