#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/config.hpp"
#include "hankel/convolution.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/rng.hpp"

namespace hankel {

enum class SampleVerdict { Refuted, NoNegativeFound };

struct SamplingReport {
  long samples = 0;              // random unit vectors drawn (coordinate probes extra)
  double minValue = 0;           // smallest form value observed
  Eigen::VectorXd argmin;        // unit vector achieving it
  SampleVerdict verdict = SampleVerdict::NoNegativeFound;
  double epsConstraint = defaults::kEpsConstraint;
};

/// Minimum of a form over +-e_i and `count` random unit vectors. The signed
/// coordinate vectors come first so nested sample counts share a prefix and
/// the reported minimum is monotone in `count` for a fixed seed.
template <typename Form>
SamplingReport sampleFormMin(Form&& form, int n, long count, Rng& rng,
                             double epsConstraint = defaults::kEpsConstraint) {
  if (count < 1) throw std::invalid_argument("sampleFormMin: count must be >= 1");
  SamplingReport rep;
  rep.samples = count;
  rep.epsConstraint = epsConstraint;
  bool first = true;
  const auto consider = [&](const Eigen::VectorXd& x) {
    const double val = form(x);
    if (first || val < rep.minValue) {
      rep.minValue = val;
      rep.argmin = x;
      first = false;
    }
  };
  for (int i = 0; i < n; ++i) {
    consider(Eigen::VectorXd::Unit(n, i));
    consider(-Eigen::VectorXd::Unit(n, i));
  }
  for (long s = 0; s < count; ++s) consider(rng.unitVector(n));
  if (rep.minValue < -epsConstraint) rep.verdict = SampleVerdict::Refuted;
  return rep;
}

/// Refutation sampler for HPSD membership of a Hankel form. NoNegativeFound
/// is evidence, never a proof of membership.
inline SamplingReport samplePsd(const GeneratingVector<double>& gv, long count,
                                std::uint64_t seed,
                                double epsConstraint = defaults::kEpsConstraint) {
  Rng rng(seed);
  return sampleFormMin([&](const Eigen::VectorXd& x) { return hankelForm(gv, x); }, gv.n,
                       count, rng, epsConstraint);
}

/// Convex combination y = sum_j lambda_j (x^j)^{*m} of convolution powers:
/// a sample from U(m,n). weights are kept explicitly so reports can replay it.
struct UConeSample {
  int m = 0;
  int n = 0;
  std::vector<Eigen::VectorXd> bases;
  Eigen::VectorXd weights;
  Eigen::VectorXd y;
};

inline UConeSample makeUConeSample(int m, int n, std::vector<Eigen::VectorXd> bases,
                                   Eigen::VectorXd weights) {
  if (bases.empty() || static_cast<Eigen::Index>(bases.size()) != weights.size())
    throw std::invalid_argument("makeUConeSample: bases/weights mismatch");
  UConeSample s;
  s.m = m;
  s.n = n;
  s.bases = std::move(bases);
  s.weights = std::move(weights);
  s.y = Eigen::VectorXd::Zero(generatorLength(m, n));
  for (std::size_t j = 0; j < s.bases.size(); ++j) {
    if (s.bases[j].size() != n) throw std::invalid_argument("makeUConeSample: base length != n");
    s.y += s.weights[static_cast<Eigen::Index>(j)] * convPower(s.bases[j], m);
  }
  return s;
}

inline UConeSample sampleUCone(int m, int n, int terms, Rng& rng) {
  if (terms < 1) throw std::invalid_argument("sampleUCone: terms must be >= 1");
  std::vector<Eigen::VectorXd> bases;
  bases.reserve(static_cast<std::size_t>(terms));
  for (int j = 0; j < terms; ++j) bases.push_back(rng.gaussianVector(n));
  return makeUConeSample(m, n, std::move(bases), rng.simplexWeights(terms));
}

struct PairingReport {
  long pairs = 0;
  double minValue = 0;        // smallest raw inner product v . y
  double worstScaled = 0;     // smallest (v . y) / max(1, ||v|| ||y||)
  bool pass = true;           // worstScaled >= -tolerance
  double tolerance = 1e-9;
};

/// All pairwise inner products between HPSD members and U(m,n) samples; the
/// duality of the two cones predicts every product is nonnegative up to scale.
inline PairingReport pairingExperiment(const std::vector<GeneratingVector<double>>& members,
                                       const std::vector<UConeSample>& samples,
                                       double tolerance = 1e-9) {
  PairingReport rep;
  rep.tolerance = tolerance;
  bool first = true;
  for (const auto& v : members)
    for (const auto& s : samples) {
      if (s.y.size() != v.v.size())
        throw std::invalid_argument("pairingExperiment: shape mismatch");
      const double ip = v.v.dot(s.y);
      const double scaled = ip / std::max(1.0, v.v.norm() * s.y.norm());
      if (first || ip < rep.minValue) rep.minValue = ip;
      if (first || scaled < rep.worstScaled) rep.worstScaled = scaled;
      first = false;
      ++rep.pairs;
    }
  if (rep.pairs == 0) {
    rep.minValue = 0;
    rep.worstScaled = 0;
  }
  rep.pass = rep.worstScaled >= -tolerance;
  return rep;
}

}  // namespace hankel
