#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mqdr {

/// Base of every error raised by the library. `name()` is the stable
/// identifier the CLI prints on failure.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  std::string_view name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Operand shapes do not conform.
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what)
      : Error("DimensionMismatch", what) {}
};

/// Out-of-range scalar argument (truncation rank, power, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error("InvalidArgument", what) {}
};

/// Malformed or unreadable input document.
class FormatError : public Error {
 public:
  FormatError(std::string name, const std::string& what)
      : Error(std::move(name), what) {}
  explicit FormatError(const std::string& what) : Error("FormatError", what) {}
};

/// Numerical or algebraic failure: the inputs are well formed but the
/// requested quantity does not exist (or cannot be computed reliably).
class MathError : public Error {
 public:
  using Error::Error;
};

class SingularSlice : public MathError {
 public:
  explicit SingularSlice(std::size_t slice)
      : MathError("SingularSlice",
                  "transform-domain slice " + std::to_string(slice) +
                      " is numerically singular"),
        slice_(slice) {}
  std::size_t slice() const noexcept { return slice_; }

 private:
  std::size_t slice_;
};

class SingularSystem : public MathError {
 public:
  explicit SingularSystem(const std::string& what)
      : MathError("SingularSystem", what) {}
};

class ExistenceViolated : public MathError {
 public:
  explicit ExistenceViolated(std::size_t slice)
      : MathError("ExistenceViolated",
                  "outer inverse with the prescribed range/null space does "
                  "not exist (rank guard failed on slice " +
                      std::to_string(slice) + ")"),
        slice_(slice) {}
  std::size_t slice() const noexcept { return slice_; }

 private:
  std::size_t slice_;
};

class SingularTransform : public MathError {
 public:
  explicit SingularTransform(const std::string& what)
      : MathError("SingularTransform", what) {}
};

class DivisionByZeroFunction : public MathError {
 public:
  DivisionByZeroFunction()
      : MathError("DivisionByZeroFunction",
                  "division by the zero rational function") {}
};

class PoleAtPoint : public MathError {
 public:
  explicit PoleAtPoint(const std::string& point)
      : MathError("PoleAtPoint",
                  "rational function has a pole at x = " + point) {}
};

class TooSmall : public MathError {
 public:
  explicit TooSmall(const std::string& what) : MathError("TooSmall", what) {}
};

}  // namespace mqdr
