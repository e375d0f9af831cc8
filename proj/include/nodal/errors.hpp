#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite input, bad shapes, wrong counts.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  NotPSD(const std::string& what, double min_eig) : Error(what), min_eig_(min_eig) {}
  double min_eig() const noexcept { return min_eig_; }

 private:
  double min_eig_;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(const std::string& what, double condition) : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class ConditioningError : public Error {
 public:
  using Error::Error;
};

class NoAdmissibleOmega : public Error {
 public:
  using Error::Error;
};

}  // namespace nodal
