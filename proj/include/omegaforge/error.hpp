#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omegaforge {

enum class ErrorKind {
  DivisionByZero,
  NegativeOrder,
  ShapeMismatch,
  SizeLimit,
  NotSubset,
  NotTight,
  NotADistribution,
  MissingValueBound,
  Infeasible,
  Unbounded,
  NoRoot,
  UnboundVariable,
  NotLocalBasis,
  BadParams,
  ParseError,
  Mismatch,
  SpanDeficit,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. `payload` carries an integer detail where the
/// error has one (the offending exponent for NegativeOrder, a rank for
/// SpanDeficit).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, long payload = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        payload_(payload) {}

  ErrorKind kind() const noexcept { return kind_; }
  long payload() const noexcept { return payload_; }

 private:
  ErrorKind kind_;
  long payload_;
};

}  // namespace omegaforge
