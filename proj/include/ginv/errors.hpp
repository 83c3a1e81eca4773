#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ginv {

/// Operand shapes do not fit the operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar or square matrix has no two-sided inverse.
///
/// For matrices, `stage()` is the elimination column at which no invertible
/// pivot could be found.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what, std::size_t stage = 0)
      : std::domain_error(what), stage_(stage) {}

  std::size_t stage() const noexcept { return stage_; }

 private:
  std::size_t stage_;
};

/// The operation is only defined over a field and was called with a ring
/// that is not one.
class UnsupportedRing : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text or JSON input could not be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold exactly failed. Always an implementation bug
/// or a construction that disagrees with the oracle, never bad user data.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A documented precondition of an operation was not met by the caller.
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ginv
