#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/config.hpp"
#include "hankel/convolution.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/gram.hpp"
#include "hankel/linalg.hpp"
#include "hankel/rng.hpp"
#include "hankel/sampling.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

namespace hankel {

enum class Feasibility { Certified, Refuted, Inconclusive };

inline const char* feasibilityName(Feasibility f) {
  switch (f) {
    case Feasibility::Certified: return "CERTIFIED";
    case Feasibility::Refuted: return "REFUTED";
    default: return "INCONCLUSIVE";
  }
}

struct SosCertificate {
  Eigen::MatrixXd Q;
  std::vector<Eigen::VectorXd> factors;  // columns c_i with Q = sum c_i c_i^T
  double residual = 0;                   // max_alpha |<A_alpha,Q> - c_alpha a_alpha|, recomputed
  double minEig = 0;                     // lambda_min(Q), recomputed
  long iterations = 0;
};

struct FeasibilityVerdict {
  Feasibility status = Feasibility::Inconclusive;
  std::optional<SosCertificate> certificate;  // Certified
  std::optional<Eigen::VectorXd> witness;     // Refuted: unit x with form(x) < -eps_c
  double witnessValue = 0;
  // Diagnostics (always filled for Inconclusive):
  double finalResidual = 0;
  double finalMinEig = 0;
  long iterations = 0;
  double sampleMin = 0;
  std::string note;
};

namespace detail {

/// Dykstra alternating projections between the PSD cone and the affine
/// constraint set {<A_alpha,Q> = g_alpha}. The affine set needs no correction
/// term; the PSD side keeps one. Returns the last PSD iterate, its recomputed
/// residual, and the iterations spent.
struct DykstraResult {
  Eigen::MatrixXd q;  // PSD by construction
  double residual = 0;
  long iterations = 0;
  bool converged = false;
};

inline DykstraResult dykstraFeasible(const GramFrame& frame, const Eigen::VectorXd& target,
                                     double epsConstraint, long maxIter) {
  const int d = frame.d();
  DykstraResult res;
  Eigen::MatrixXd y = frame.affineProject(Eigen::MatrixXd::Zero(d, d), target);
  Eigen::MatrixXd corr = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd x;
  for (long it = 1; it <= maxIter; ++it) {
    const Eigen::MatrixXd r = y - corr;
    x = projectPsd(r);
    corr = x - r;
    y = frame.affineProject(x, target);
    res.iterations = it;
    res.residual = (frame.constraintValues(x) - target).cwiseAbs().maxCoeff();
    if (res.residual <= epsConstraint) {
      res.converged = true;
      break;
    }
  }
  res.q = x;
  return res;
}

}  // namespace detail

/// Gram-matrix SOS feasibility for an even-order symmetric tensor.
/// CERTIFIED carries a recomputed certificate; REFUTED carries a sampled
/// witness with a negative form value; anything else is INCONCLUSIVE
/// (alternating projections cannot prove infeasibility).
template <typename Scalar>
FeasibilityVerdict checkSos(const SymmetricTensor<Scalar>& t,
                            const RunConfig& config = RunConfig{}) {
  config.validate();
  if (t.order() % 2 != 0)
    throw std::invalid_argument("checkSos: even order required");
  const int n = t.dimension();
  FeasibilityVerdict verdict;

  if (t.coeffs().isZero(0)) {
    SosCertificate cert;
    const GramFrame frame = buildGramFrame(t.order(), n);
    cert.Q = Eigen::MatrixXd::Zero(frame.d(), frame.d());
    verdict.status = Feasibility::Certified;
    verdict.certificate = std::move(cert);
    return verdict;
  }

  // Cheap refutation pass before any projection work.
  Rng rng(config.seed);
  const auto form = [&](const Eigen::VectorXd& x) {
    return double(evalForm(t, x.cast<Scalar>().eval()));
  };
  const SamplingReport rep =
      sampleFormMin(form, n, config.refute_samples, rng, config.eps_constraint);
  verdict.sampleMin = rep.minValue;
  if (rep.verdict == SampleVerdict::Refuted) {
    verdict.status = Feasibility::Refuted;
    verdict.witness = rep.argmin;
    verdict.witnessValue = form(rep.argmin);
    return verdict;
  }

  const GramFrame frame = buildGramFrame(t.order(), n);
  const Eigen::VectorXd target = constraintTargets(t, frame);
  const auto dyk =
      detail::dykstraFeasible(frame, target, config.eps_constraint, config.max_iter);
  verdict.iterations = dyk.iterations;

  const double residual = (frame.constraintValues(dyk.q) - target).cwiseAbs().maxCoeff();
  const double minEig = double(minEigenvalue(dyk.q));
  verdict.finalResidual = residual;
  verdict.finalMinEig = minEig;
  if (dyk.converged && residual <= config.eps_constraint && minEig >= -config.eps_psd) {
    SosCertificate cert;
    cert.Q = dyk.q;
    cert.factors = factorizePsd(dyk.q, config.rank_tol);
    cert.residual = residual;
    cert.minEig = minEig;
    cert.iterations = dyk.iterations;
    verdict.status = Feasibility::Certified;
    verdict.certificate = std::move(cert);
    return verdict;
  }

  verdict.status = Feasibility::Inconclusive;
  verdict.note = "no certificate within iteration budget and no negative sample";
  return verdict;
}

/// Value of the certified sum of squares sum_i (c_i . [x]_k)^2.
inline double evalCertificate(const SosCertificate& cert, const GramFrame& frame,
                              const Eigen::VectorXd& x) {
  const Eigen::VectorXd w = monomialVector(*frame.halfBasis, x);
  double s = 0;
  for (const auto& c : cert.factors) {
    const double f = c.dot(w);
    s += f * f;
  }
  return s;
}

/// SOS feasibility of the Hankel form of gv. A certificate is cross-checked
/// against the convolution-side evaluation at random points; a witness is
/// re-evaluated through both evaluation paths.
inline FeasibilityVerdict checkHsos(const GeneratingVector<double>& gv,
                                    const RunConfig& config = RunConfig{}) {
  gv.requireEvenOrder();
  const SymmetricTensor<double> t = hankelToSymmetric(gv);
  FeasibilityVerdict verdict = checkSos(t, config);

  if (verdict.status == Feasibility::Certified && !verdict.certificate->factors.empty()) {
    const GramFrame frame = buildGramFrame(gv.m, gv.n);
    Rng rng(mixSeed(config.seed, 0x43524f53u));  // independent cross-check stream
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::VectorXd x = rng.unitVector(gv.n);
      const double viaSquares = evalCertificate(*verdict.certificate, frame, x);
      const double viaConv = hankelForm(gv, x);
      worst = std::max(worst, std::abs(viaSquares - viaConv) / (1.0 + std::abs(viaConv)));
    }
    if (worst > 1e-8) {
      verdict.status = Feasibility::Inconclusive;
      verdict.note = "certificate failed convolution-side cross-check, rel err " +
                     std::to_string(worst);
      verdict.certificate.reset();
    }
  }
  if (verdict.status == Feasibility::Refuted) {
    verdict.witnessValue = hankelForm(gv, *verdict.witness);
  }
  return verdict;
}

/// Samples of the dual spectrahedron {b : sum b_alpha A_alpha PSD}, as
/// coefficient vectors plus their node-space images
/// (component k = sum_alpha c_alpha b_alpha u_k^alpha).
struct SgDualSamples {
  std::vector<Eigen::VectorXd> duals;
  std::vector<Eigen::VectorXd> images;
};

inline SgDualSamples sgDualSample(const GramFrame& gframe, const VandermondeFrame& vframe,
                                  int count, Rng& rng) {
  SgDualSamples out;
  for (int s = 0; s < count; ++s) {
    // Convex mixture of moment vectors: dual matrix is a sum of PSD matrices
    // [w]_k [w]_k^T, hence a guaranteed member.
    const int terms = 1 + static_cast<int>(rng.raw() % 3);
    const Eigen::VectorXd lambda = rng.simplexWeights(terms);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(gframe.constraintCount());
    for (int j = 0; j < terms; ++j)
      b += lambda[j] * momentDualVector(rng.gaussianVector(gframe.n), gframe);

    // Optional PSD perturbation projected onto span{A_alpha}; the projection
    // can leave the PSD cone, so shrink it until membership holds.
    Eigen::MatrixXd p = rng.gaussianVector(gframe.d() * gframe.d())
                            .reshaped(gframe.d(), gframe.d());
    p = projectPsd(symmetrize(p));
    Eigen::VectorXd db(gframe.constraintCount());
    for (int a = 0; a < gframe.constraintCount(); ++a)
      db[a] = gframe.constraintValue(p, a) / gframe.normSq(a);
    double scale = 0.1 * (b.norm() + 1.0) / (db.norm() + 1e-30);
    for (int tries = 0; tries < 20; ++tries, scale /= 2) {
      if (dualMembership(b + scale * db, gframe, 0.0).member) {
        b += scale * db;
        break;
      }
    }

    SymmetricTensor<double> bt(gframe.fullBasis, b);
    out.duals.push_back(std::move(b));
    out.images.push_back(dualImagePoint(bt, vframe));
  }
  return out;
}

/// Weighted dual pairing sum_alpha c_alpha b_alpha a_alpha; equals
/// <sum b_alpha A_alpha, Q> for any Gram representation Q of a.
template <typename Scalar>
double dualPairing(const Eigen::VectorXd& b, const SymmetricTensor<Scalar>& t) {
  const auto& basis = t.basis();
  if (b.size() != basis.size()) throw std::invalid_argument("dualPairing: length mismatch");
  double s = 0;
  for (int a = 0; a < basis.size(); ++a)
    s += double(basis.weights[a]) * b[a] * double(t.coeffs()[a]);
  return s;
}

}  // namespace hankel
