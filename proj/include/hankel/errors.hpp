#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Eigensolver ran out of sweeps before reaching the off-diagonal target.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double off_norm)
      : std::runtime_error(what), off_norm_(off_norm) {}
  double offDiagonalNorm() const { return off_norm_; }

 private:
  double off_norm_;
};

/// A pivot fell below the relative threshold during a linear solve.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, int pivot_index, double pivot_value)
      : std::runtime_error(what), pivot_index_(pivot_index), pivot_value_(pivot_value) {}
  int pivotIndex() const { return pivot_index_; }
  double pivotValue() const { return pivot_value_; }

 private:
  int pivot_index_;
  double pivot_value_;
};

/// A matrix required to be positive semidefinite has a significantly negative eigenvalue.
class NotPsdError : public std::runtime_error {
 public:
  NotPsdError(const std::string& what, double min_eigenvalue)
      : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
  double minEigenvalue() const { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

}  // namespace hankel
