#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace harmonid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A zero factor in a denominator: a harmonic term 1/(x+k), a jet divisor,
/// a Pochhammer denominator of a series, or a gamma argument.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::string value, std::optional<long> index = std::nullopt)
      : Error(what), value_(std::move(value)), index_(index) {}

  const std::string& value() const noexcept { return value_; }
  std::optional<long> index() const noexcept { return index_; }

 private:
  std::string value_;
  std::optional<long> index_;
};

/// Exact summation requested for a series that does not terminate.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Bad identity id, bad configuration.
class UsageError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonid
