#pragma once

#include <stdexcept>
#include <string>

namespace gfc {

/// Argument outside the admissible range of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series ran out of terms before its truncation test fired.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A kernel or function produced a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, int node_index)
      : std::runtime_error(what), node_index_(node_index) {}
  int node_index() const noexcept { return node_index_; }

 private:
  int node_index_;
};

/// The input lacks something the operation needs (e.g. derivatives of
/// tabulated data).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gfc
