#pragma once

#include <stdexcept>
#include <string>

namespace decohere {

// Base of every error thrown by the library. kind() is a stable, machine
// readable tag used by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error("dimension", what) {}
};

// Argument outside the domain of a formula (non-positive mass, t < 0, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// A result would be NaN or infinite.
class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what) : Error("non-finite", what) {}
};

class SingularityError : public Error {
 public:
  explicit SingularityError(const std::string& what) : Error("singularity", what) {}
};

// Adaptive quadrature did not reach its tolerance. Carries the subinterval
// with the largest error estimate (metres) and that estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double lo, double hi, double error_estimate)
      : Error("convergence", what), lo_(lo), hi_(hi), error_estimate_(error_estimate) {}

  double worst_lo() const noexcept { return lo_; }
  double worst_hi() const noexcept { return hi_; }
  double worst_error() const noexcept { return error_estimate_; }

 private:
  double lo_;
  double hi_;
  double error_estimate_;
};

class NoCrossingError : public Error {
 public:
  explicit NoCrossingError(const std::string& what) : Error("no-crossing", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace decohere
