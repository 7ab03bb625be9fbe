#pragma once

#include <stdexcept>
#include <string>

namespace shadowham {

/// Violated precondition on a mathematical argument (bad word length, nonzero
/// constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller combined arguments that cannot be used together (mismatched
/// truncation orders, malformed command-line values).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// F(x) was requested outside its disc of convergence |x| < 2.
class Divergent : public DomainError {
 public:
  explicit Divergent(double x);
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// The 2x2 map has no real logarithm with eigenvalues +-i*theta (|trace| >= 2).
class NoEllipticLog : public DomainError {
 public:
  explicit NoEllipticLog(double trace);
  double trace() const noexcept { return trace_; }

 private:
  double trace_;
};

/// An exact trajectory produced a rational wider than the configured limit.
class RationalOverflow : public std::runtime_error {
 public:
  RationalOverflow(std::size_t step, std::size_t bits);
  std::size_t step() const noexcept { return step_; }
  std::size_t bits() const noexcept { return bits_; }

 private:
  std::size_t step_;
  std::size_t bits_;
};

}  // namespace shadowham
