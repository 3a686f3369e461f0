#pragma once

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hankel/config.hpp"

namespace hankel {

/// splitmix64 step; used to derive independent sub-seeds from (seed, stream).
inline std::uint64_t mixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seedable, cross-platform generator: mt19937-64 for bits, Box-Muller for
/// gaussians. std::*_distribution is avoided on purpose, its output differs
/// between standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd gaussianVector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian();
    return v;
  }

  Eigen::VectorXd unitVector(int n) {
    for (;;) {
      Eigen::VectorXd v = gaussianVector(n);
      const double norm = v.norm();
      if (norm > 1e-12) return v / norm;
    }
  }

  /// Uniform weights on the simplex. The last weight is defined as one minus
  /// the running sum of the others, so a plain left-to-right sum of the
  /// result is exactly 1.0.
  Eigen::VectorXd simplexWeights(int k) {
    Eigen::VectorXd w(k);
    if (k == 1) {
      w[0] = 1.0;
      return w;
    }
    double total = 0.0, comp = 0.0;  // Kahan accumulation of the exponentials
    for (int i = 0; i < k; ++i) {
      w[i] = -std::log(1.0 - uniform01());
      const double y = w[i] - comp;
      const double t = total + y;
      comp = (t - total) - y;
      total = t;
    }
    double partial = 0.0;
    for (int i = 0; i + 1 < k; ++i) {
      w[i] /= total;
      partial += w[i];
    }
    w[k - 1] = std::max(0.0, 1.0 - partial);
    return w;
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hankel
