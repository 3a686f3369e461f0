// Acceptance suite: one line per criterion, exit 0 only if all pass.
// Each criterion enforces both its numeric tolerance and a wall-clock limit.

#include <hankel/hankel.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace hankel;

namespace {

struct Criterion {
  std::string description;
  double limitSeconds;
  std::function<bool()> body;
};

Eigen::MatrixXd randomPsd(int d, Rng& rng) {
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.gaussian();
  return symmetrize(g * g.transpose());
}

Eigen::MatrixXd unitMatrix(int d, std::initializer_list<std::pair<int, int>> ones) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (auto [i, j] : ones) m(i, j) = 1.0;
  return m;
}

MultiIndex mi(std::initializer_list<int> e) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(e.size()));
  Eigen::Index i = 0;
  for (int x : e) v[i++] = x;
  return MultiIndex(v);
}

const std::vector<std::pair<int, int>> kRoundTripShapes = {{2, 2}, {4, 2}, {4, 3}, {6, 3}};

// ---- criteria -------------------------------------------------------------

bool structuralConstants() {
  const auto f = buildGramFrame(6, 3);
  if (f.constraintCount() != 28 || f.d() != 10) return false;
  if (multinomial(mi({6, 0, 0})) != 1) return false;
  if (multinomial(mi({3, 2, 1})) != 60) return false;
  const auto a600 = f.constraintMatrix(f.fullBasis->rankOf(mi({6, 0, 0})));
  const auto a420 = f.constraintMatrix(f.fullBasis->rankOf(mi({4, 2, 0})));
  if (a600 != unitMatrix(10, {{0, 0}})) return false;
  if (a420 != unitMatrix(10, {{0, 3}, {1, 1}, {3, 0}})) return false;
  return true;
}

bool orthogonalPartition() {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {4, 3}, {6, 3}, {8, 3}}) {
    const auto f = buildGramFrame(m, n);
    Eigen::MatrixXd cover = Eigen::MatrixXd::Zero(f.d(), f.d());
    for (int a = 0; a < f.constraintCount(); ++a) cover += f.constraintMatrix(a);
    if (cover != Eigen::MatrixXd::Ones(f.d(), f.d())) return false;
    for (int a = 0; a < f.constraintCount(); ++a)
      for (int b = a + 1; b < f.constraintCount(); ++b)
        if (f.constraintMatrix(a).cwiseProduct(f.constraintMatrix(b)).sum() != 0.0)
          return false;
  }
  return true;
}

bool evaluationEquivalence() {
  Rng rng(101);
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 3}, {6, 3}}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const GeneratingVector<double> gv(m, n, rng.gaussianVector(generatorLength(m, n)));
      const Eigen::VectorXd x = rng.gaussianVector(n);
      const double conv = hankelForm(gv, x);
      const double tens = evalForm(hankelToSymmetric(gv), x);
      if (std::abs(conv - tens) > 1e-10 * (1 + std::abs(tens))) return false;
    }
  }
  return true;
}

bool vandermondeRoundTrip() {
  Rng rng(102);
  for (auto [m, n] : kRoundTripShapes) {
    const auto f = defaultFrame(m, n);
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXd alpha = rng.gaussianVector(f.size());
      const Eigen::VectorXd back = decompose(compose(alpha, f), f);
      if ((back - alpha).norm() > 1e-8 * (1 + alpha.norm())) return false;
    }
  }
  return true;
}

bool nodeImageIdentity() {
  Rng rng(103);
  for (auto [m, n] : kRoundTripShapes) {
    const auto f = defaultFrame(m, n);
    for (int trial = 0; trial < 200; ++trial) {
      const Eigen::VectorXd x = rng.gaussianVector(n);
      const Eigen::VectorXd lhs = utImage(convPower(x, m), f);
      const Eigen::VectorXd rhs = dualImagePoint(rankOne(x, m).toSymmetric(), f);
      for (int k = 0; k < f.size(); ++k)
        if (std::abs(lhs[k] - rhs[k]) > 1e-9 * (1 + std::abs(rhs[k]))) return false;
    }
  }
  return true;
}

bool certificateSoundness() {
  Rng rng(104);
  for (auto [m, n] : kRoundTripShapes) {
    const auto frame = buildGramFrame(m, n);
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = gramToTensor(randomPsd(frame.d(), rng), frame);
      const auto verdict = checkSos(t);
      if (verdict.status != Feasibility::Certified) return false;
      for (int j = 0; j < 100; ++j) {
        const Eigen::VectorXd x = rng.unitVector(n);
        const double viaSquares = evalCertificate(*verdict.certificate, frame, x);
        const double viaForm = evalForm(t, x);
        if (std::abs(viaSquares - viaForm) > 1e-7 * (1 + std::abs(viaForm))) return false;
      }
    }
  }
  return true;
}

bool dualPairingNonnegative() {
  Rng rng(105);
  const auto frame = buildGramFrame(6, 3);
  std::vector<SymmetricTensor<double>> certified;
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = gramToTensor(randomPsd(frame.d(), rng), frame);
    if (checkSos(t).status != Feasibility::Certified) return false;
    certified.push_back(t);
  }
  std::vector<Eigen::VectorXd> duals;
  for (int j = 0; j < 50; ++j) duals.push_back(momentDualVector(rng.gaussianVector(3), frame));
  for (const auto& t : certified)
    for (const auto& b : duals)
      if (dualPairing(b, t) < -1e-8) return false;
  return true;
}

bool primalPairingNonnegative() {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 3}, {6, 3}}) {
    const auto f = defaultFrame(m, n);
    Rng rng(mixSeed(106, static_cast<std::uint64_t>(m * 10 + n)));
    std::vector<GeneratingVector<double>> members;
    for (int j = 0; j < 20; ++j) {
      Eigen::VectorXd alpha(f.size());
      for (int i = 0; i < f.size(); ++i) alpha[i] = rng.uniform01();
      members.push_back(compose(alpha, f));
    }
    std::vector<UConeSample> samples;
    const int maxTerms = static_cast<int>(indexCount(m, n)) + 1;
    for (int i = 0; i < 500; ++i)
      samples.push_back(sampleUCone(m, n, 1 + static_cast<int>(rng.raw() % maxTerms), rng));
    const auto rep = pairingExperiment(members, samples, 1e-9);
    if (!rep.pass || rep.pairs != 20 * 500) return false;
  }
  return true;
}

bool normInequality() {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {4, 2}}) {
    const auto lc = lemmaConstant(m, n);
    Rng rng(mixSeed(107, static_cast<std::uint64_t>(m * 10 + n)));
    const auto slackOf = [&](const std::vector<Eigen::VectorXd>& xs) {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(generatorLength(m, n));
      double worst = 0;
      for (const auto& x : xs) {
        sum += convPower(x, m);
        worst = std::max(worst, std::pow(x.norm(), m));
      }
      return lc.c * sum.norm() - worst;
    };
    for (int trial = 0; trial < 500; ++trial)
      if (slackOf({rng.gaussianVector(n), rng.gaussianVector(n)}) < -1e-9) return false;
    for (int terms : {3, 5})
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<Eigen::VectorXd> xs;
        for (int j = 0; j < terms; ++j) xs.push_back(rng.gaussianVector(n));
        if (slackOf(xs) < -1e-9) return false;
      }
  }
  return true;
}

bool binaryOracle() {
  for (int m : {4, 6}) {
    const auto frame = buildGramFrame(m, 2);
    Rng rng(mixSeed(108, static_cast<std::uint64_t>(m)));

    // explicit sums of squares must certify
    for (int trial = 0; trial < 50; ++trial) {
      const auto t = gramToTensor(randomPsd(frame.d(), rng), frame);
      const GeneratingVector<double> gv(m, 2, t.coeffs());
      if (checkHsos(gv).status != Feasibility::Certified) return false;
    }

    // planting a dip at a known direction forces refutation
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::VectorXd v = rng.unitVector(generatorLength(m, 2));
      const Eigen::VectorXd xhat = rng.unitVector(2);
      const Eigen::VectorXd power = convPower(xhat, m);
      const double value = v.dot(power);
      v -= (value + 0.1) / power.squaredNorm() * power;
      const GeneratingVector<double> gv(m, 2, v);
      if (std::abs(hankelForm(gv, xhat) + 0.1) > 1e-12) return false;
      if (checkHsos(gv).status != Feasibility::Refuted) return false;
    }

    RunConfig config;
    config.seed = mixSeed(109, static_cast<std::uint64_t>(m));
    if (!searchPns(m, 2, 100, config, 2).empty()) return false;
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"Gram frame structural constants at (6,3)", 1.0, structuralConstants},
      {"constraint matrices are orthogonal and partition the ones matrix", 5.0,
       orthogonalPartition},
      {"convolution-side and tensor-side evaluation agree to 1e-10", 10.0,
       evaluationEquivalence},
      {"Vandermonde compose/decompose round trip to 1e-8", 5.0, vandermondeRoundTrip},
      {"node images of convolution powers match the dual image map to 1e-9", 5.0,
       nodeImageIdentity},
      {"SOS certificates for PSD Gram inputs re-sum to the form within 1e-7", 60.0,
       certificateSoundness},
      {"certified tensors pair nonnegatively with moment duals (>= -1e-8)", 30.0,
       dualPairingNonnegative},
      {"HPSD members pair nonnegatively with U-cone samples (>= -1e-9 scaled)", 10.0,
       primalPairingNonnegative},
      {"norm inequality holds with the constructed constant (slack >= -1e-9)", 10.0,
       normInequality},
      {"binary forms: explicit SOS certify, planted negatives refute, no PNS flags", 120.0,
       binaryOracle},
  };

  bool allPass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %zu threw: %s\n", i + 1, e.what());
      ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = ok && seconds < c.limitSeconds;
    allPass = allPass && pass;
    std::printf("[%s] %zu. %s (%.2f s < %.0f s)\n", pass ? "PASS" : "FAIL", i + 1,
                c.description.c_str(), seconds, c.limitSeconds);
    std::fflush(stdout);
  }
  return allPass ? 0 : 1;
}
