#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <utility>

#include "hankel/linalg.hpp"

namespace hankel {

/// Length of the generating vector of an order-m, dimension-n Hankel tensor.
inline int generatorLength(int m, int n) { return (n - 1) * m + 1; }

/// A Hankel tensor of order m on R^n, stored by its generating vector v:
/// the tensor entry at (i_1,...,i_m) is v[i_1 + ... + i_m].
template <typename Scalar = double>
struct GeneratingVector {
  int m = 0;
  int n = 0;
  VectorX<Scalar> v;

  GeneratingVector(int order, int dim, VectorX<Scalar> gen)
      : m(order), n(dim), v(std::move(gen)) {
    if (m < 1 || n < 1) throw std::invalid_argument("GeneratingVector: m, n must be >= 1");
    if (v.size() != generatorLength(m, n))
      throw std::invalid_argument("GeneratingVector: expected length " +
                                  std::to_string(generatorLength(m, n)) + ", got " +
                                  std::to_string(v.size()));
  }

  /// Cone predicates (PSD/SOS membership) are defined for even order only.
  void requireEvenOrder() const {
    if (m % 2 != 0) throw std::invalid_argument("GeneratingVector: even order required");
  }
};

}  // namespace hankel
