#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hankel {

/// Default tolerances and limits. Every numeric threshold used by the library
/// lives here; functions take these as defaulted parameters so callers can
/// override per call or through RunConfig.
namespace defaults {

inline constexpr double kEpsConstraint = 1e-9;   // max residual for a certified Gram matrix
inline constexpr double kEpsPsd = 1e-9;          // eigenvalue slack for PSD membership
inline constexpr double kRankTol = 1e-10;        // eigenvalue cutoff for factor extraction
inline constexpr double kAsymmetryTol = 1e-13;   // allowed asymmetry on SymMatrix construction
inline constexpr double kEigOffTol = 1e-12;      // Jacobi off-diagonal target, relative to ||A||_F
inline constexpr int kMaxSweeps = 100;           // Jacobi sweep cap
inline constexpr double kPivotTol = 1e-12;       // LU pivot threshold, relative to max |A|
inline constexpr double kSolveTol = 1e-8;        // residual contract for linear solves
inline constexpr double kNodeGapWarn = 1e-10;    // node gap below which a frame is flagged
inline constexpr long kMaxIter = 50000;          // Dykstra iteration cap
inline constexpr long kRefuteSamples = 10000;    // sampling budget for refutation
inline constexpr std::uint64_t kSeed = 0x48414e4b454cULL;

}  // namespace defaults

enum class NodeScheme { Chebyshev, Custom };

/// One record holding every knob used by the solvers and samplers.
struct RunConfig {
  double eps_constraint = defaults::kEpsConstraint;
  double eps_psd = defaults::kEpsPsd;
  double rank_tol = defaults::kRankTol;
  long max_iter = defaults::kMaxIter;
  long refute_samples = defaults::kRefuteSamples;
  std::uint64_t seed = defaults::kSeed;
  NodeScheme nodes = NodeScheme::Chebyshev;

  void validate() const {
    if (!(eps_constraint > 0) || !(eps_psd > 0) || !(rank_tol > 0))
      throw std::invalid_argument("RunConfig: tolerances must be positive");
    if (max_iter < 1) throw std::invalid_argument("RunConfig: max_iter must be >= 1");
    if (refute_samples < 1) throw std::invalid_argument("RunConfig: refute_samples must be >= 1");
  }
};

/// Name of the random generator scheme; fixed so reports are reproducible
/// across implementations.
inline constexpr const char* kRngScheme = "mt19937-64/box-muller";

}  // namespace hankel
