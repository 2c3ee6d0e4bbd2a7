#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

// Base for everything the numerics can throw. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double estimate = 0.0, double error = 0.0)
      : NumericalError(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error() const { return error_; }

 private:
  double estimate_;
  double error_;
};

class QuadratureError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

class GridError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace fracdiff
