#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hankel/config.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/rng.hpp"
#include "hankel/sampling.hpp"
#include "hankel/sos.hpp"

namespace hankel {

enum class PsdDecision { Psd, NotPsd, BoundaryInconclusive };

inline const char* psdDecisionName(PsdDecision d) {
  switch (d) {
    case PsdDecision::Psd: return "PSD";
    case PsdDecision::NotPsd: return "NOT_PSD";
    default: return "BOUNDARY_INCONCLUSIVE";
  }
}

struct PsdReport {
  PsdDecision decision = PsdDecision::BoundaryInconclusive;
  std::optional<Eigen::VectorXd> witness;  // NotPsd
  double witnessValue = 0;
  FeasibilityVerdict sos;  // underlying SOS run
  long escalatedSamples = 0;
};

/// Exact-up-to-tolerance PSD decision for binary forms (n = 2), where PSD and
/// SOS coincide: a certificate decides PSD, a sampled negative decides NOT_PSD.
/// A miss on both escalates the sample count once, then reports
/// BOUNDARY_INCONCLUSIVE rather than guessing.
inline PsdReport decidePsdN2(const GeneratingVector<double>& gv,
                             const RunConfig& config = RunConfig{}) {
  if (gv.n != 2) throw std::invalid_argument("decidePsdN2: n must be 2");
  gv.requireEvenOrder();
  RunConfig tight = config;
  tight.eps_constraint = 1e-10;
  tight.eps_psd = 1e-10;

  PsdReport rep;
  rep.sos = checkHsos(gv, tight);
  if (rep.sos.status == Feasibility::Certified) {
    rep.decision = PsdDecision::Psd;
    return rep;
  }
  if (rep.sos.status == Feasibility::Refuted) {
    rep.decision = PsdDecision::NotPsd;
    rep.witness = rep.sos.witness;
    rep.witnessValue = rep.sos.witnessValue;
    return rep;
  }
  rep.escalatedSamples = 10 * config.refute_samples;
  const SamplingReport wide =
      samplePsd(gv, rep.escalatedSamples, mixSeed(config.seed, 1), tight.eps_constraint);
  if (wide.verdict == SampleVerdict::Refuted) {
    rep.decision = PsdDecision::NotPsd;
    rep.witness = wide.argmin;
    rep.witnessValue = wide.minValue;
    return rep;
  }
  rep.decision = PsdDecision::BoundaryInconclusive;
  return rep;
}

/// One candidate from the PSD-but-maybe-not-SOS search: a unit generating
/// vector that sampling could not refute and the SOS solver could not certify.
/// Explicitly labeled inconclusive; the search never claims a resolution.
struct PnsCandidate {
  long trial = 0;
  std::uint64_t subSeed = 0;
  GeneratingVector<double> gv;
  SamplingReport sampling;
  FeasibilityVerdict verdict;          // after escalation
  long escalatedMaxIter = 0;
  std::string label = "candidate (inconclusive)";
};

/// Flag decision for one vector: sampling finds no negative AND check_hsos
/// stays inconclusive even after a single 10x iteration-budget escalation.
inline std::optional<PnsCandidate> evaluatePnsTrial(const GeneratingVector<double>& gv,
                                                    long trial, std::uint64_t subSeed,
                                                    const RunConfig& config) {
  const long samples = std::max(config.refute_samples, defaults::kRefuteSamples);
  SamplingReport rep = samplePsd(gv, samples, mixSeed(subSeed, 1), config.eps_constraint);
  if (rep.verdict == SampleVerdict::Refuted) return std::nullopt;

  RunConfig local = config;
  local.seed = mixSeed(subSeed, 2);
  FeasibilityVerdict verdict = checkHsos(gv, local);
  if (verdict.status != Feasibility::Inconclusive) return std::nullopt;

  RunConfig escalated = local;
  escalated.max_iter = 10 * local.max_iter;
  verdict = checkHsos(gv, escalated);
  if (verdict.status != Feasibility::Inconclusive) return std::nullopt;

  PnsCandidate cand{trial, subSeed, gv, std::move(rep), std::move(verdict),
                    escalated.max_iter};
  return cand;
}

/// Random unit generating vector for one search trial.
inline GeneratingVector<double> randomUnitGv(int m, int n, std::uint64_t subSeed) {
  Rng rng(mixSeed(subSeed, 0));
  return GeneratingVector<double>(m, n, rng.unitVector(generatorLength(m, n)));
}

/// Heuristic search for PSD-but-not-SOS candidates. Each trial derives its
/// own sub-seed from (seed, trial), so any worker count produces the same
/// candidate list in trial order.
inline std::vector<PnsCandidate> searchPns(int m, int n, long trials,
                                           const RunConfig& config = RunConfig{},
                                           int jobs = 1) {
  if (m % 2 != 0) throw std::invalid_argument("searchPns: even order required");
  if (trials < 0) throw std::invalid_argument("searchPns: trials must be >= 0");
  jobs = std::max(1, jobs);

  std::vector<std::optional<PnsCandidate>> slots(static_cast<std::size_t>(trials));
  const auto worker = [&](int w) {
    for (long t = w; t < trials; t += jobs) {
      const std::uint64_t subSeed = mixSeed(config.seed, static_cast<std::uint64_t>(t));
      slots[static_cast<std::size_t>(t)] =
          evaluatePnsTrial(randomUnitGv(m, n, subSeed), t, subSeed, config);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  std::vector<PnsCandidate> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace hankel
