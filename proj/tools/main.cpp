// hankel-cones: command-line front end for the Hankel cone library.
// Results go to stdout as JSON (JSON-lines for candidate streams);
// diagnostics go to stderr. Exit codes for check-sos/check-hsos:
// 0 CERTIFIED, 1 REFUTED, 2 INCONCLUSIVE, 3 error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <hankel/hankel.hpp>

namespace {

using hankel::json;

constexpr int kExitError = 3;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw CliError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

hankel::GeneratingVector<double> readGv(const std::string& path) {
  return hankel::generatingVectorFromJson(readJsonFile(path));
}

Eigen::VectorXd toVec(const std::vector<double>& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = v[i];
  return out;
}

// --nodes chebyshev | custom:<file>; the file may be a bare array, a
// {"nodes": [...]} object, or a decompose output carrying a "frame".
hankel::VandermondeFrame resolveFrame(int m, int n, const std::string& nodesArg) {
  if (nodesArg.empty() || nodesArg == "chebyshev") return hankel::defaultFrame(m, n);
  const std::string prefix = "custom:";
  if (nodesArg.rfind(prefix, 0) != 0)
    throw CliError("unknown --nodes value (use chebyshev or custom:<file>): " + nodesArg);
  json j = readJsonFile(nodesArg.substr(prefix.size()));
  if (j.is_object() && j.contains("frame")) j = j.at("frame");
  const json& nodes = j.is_object() ? j.at("nodes") : j;
  return hankel::makeFrame(m, n, hankel::vectorFromJson(nodes));
}

struct CommonOptions {
  hankel::RunConfig config;
  bool quiet = false;

  void attach(CLI::App* cmd, bool withSolver = true) {
    cmd->add_flag("--quiet", quiet, "suppress progress diagnostics");
    cmd->add_option("--seed", config.seed, "random seed (echoed in the output)");
    if (withSolver) {
      cmd->add_option("--eps-c", config.eps_constraint, "constraint residual tolerance");
      cmd->add_option("--eps-p", config.eps_psd, "PSD eigenvalue tolerance");
      cmd->add_option("--rank-tol", config.rank_tol, "factor extraction rank cutoff");
      cmd->add_option("--max-iter", config.max_iter, "alternating projection cap");
      cmd->add_option("--samples", config.refute_samples, "refutation sample count");
    }
  }

  void note(const std::string& msg) const {
    if (!quiet) std::cerr << msg << "\n";
  }
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int verdictExitCode(const hankel::FeasibilityVerdict& v) {
  switch (v.status) {
    case hankel::Feasibility::Certified: return 0;
    case hankel::Feasibility::Refuted: return 1;
    default: return 2;
  }
}

// ---- subcommand bodies ----------------------------------------------------

int runEval(const std::string& gvPath, const std::vector<double>& xArg) {
  const auto gv = readGv(gvPath);
  const Eigen::VectorXd x = toVec(xArg);
  if (x.size() != gv.n) throw CliError("--x must have length n");
  const double conv = hankel::hankelForm(gv, x);
  const double tens = hankel::evalForm(hankel::hankelToSymmetric(gv), x);
  emit(json{{"command", "eval"},
            {"conv_side", conv},
            {"tensor_side", tens},
            {"abs_diff", std::abs(conv - tens)},
            {"rel_diff", std::abs(conv - tens) / (1.0 + std::abs(tens))},
            {"value", conv}});
  return 0;
}

int runTensorize(const std::string& gvPath) {
  emit(hankel::toJson(hankel::hankelToSymmetric(readGv(gvPath))));
  return 0;
}

int runDecompose(const std::string& gvPath, const std::string& nodesArg,
                 const CommonOptions& opts) {
  const auto gv = readGv(gvPath);
  const auto frame = resolveFrame(gv.m, gv.n, nodesArg);
  if (frame.gapWarning)
    std::cerr << "warning: node gap below " << hankel::defaults::kNodeGapWarn
              << ", decomposition may be ill-conditioned\n";
  const Eigen::VectorXd alpha = hankel::decompose(gv, frame);
  const double resid = (frame.U * alpha - gv.v).norm() / (1.0 + gv.v.norm());
  opts.note("decompose: residual " + std::to_string(resid));
  emit(json{{"command", "decompose"},
            {"frame", hankel::toJson(frame)},
            {"alpha", hankel::toJson(alpha)},
            {"reconstruction_residual", resid},
            {"gap_warning", frame.gapWarning}});
  return 0;
}

int runCheckSos(const std::string& tensorPath, const CommonOptions& opts) {
  const auto t = hankel::tensorFromJson(readJsonFile(tensorPath));
  if (t.order() % 2 != 0) throw CliError("check-sos: tensor order must be even");
  const auto verdict = hankel::checkSos(t, opts.config);
  opts.note(std::string("check-sos: ") + hankel::feasibilityName(verdict.status));
  json out = hankel::toJson(verdict, *hankel::monomialBasis(t.order() / 2, t.dimension()));
  out["command"] = "check-sos";
  out["seed"] = opts.config.seed;
  out["config"] = hankel::toJson(opts.config);
  emit(out);
  return verdictExitCode(verdict);
}

int runCheckHsos(const std::string& gvPath, const CommonOptions& opts) {
  const auto gv = readGv(gvPath);
  const auto verdict = hankel::checkHsos(gv, opts.config);
  opts.note(std::string("check-hsos: ") + hankel::feasibilityName(verdict.status));
  json out = hankel::toJson(verdict, *hankel::monomialBasis(gv.m / 2, gv.n));
  out["command"] = "check-hsos";
  out["seed"] = opts.config.seed;
  out["config"] = hankel::toJson(opts.config);
  emit(out);
  return verdictExitCode(verdict);
}

int runDualCheck(const std::string& bPath, int m, int n, const CommonOptions& opts) {
  json j = readJsonFile(bPath);
  const Eigen::VectorXd b = hankel::vectorFromJson(j.is_object() ? j.at("b") : j);
  const auto frame = hankel::buildGramFrame(m, n);
  if (b.size() != frame.constraintCount())
    throw CliError("dual-check: b must have one entry per degree-m exponent, here " +
                   std::to_string(frame.constraintCount()));
  const auto r = hankel::dualMembership(b, frame, opts.config.eps_psd);
  emit(json{{"command", "dual-check"},
            {"m", m},
            {"n", n},
            {"min_eig", r.minEig},
            {"member", r.member}});
  return 0;
}

int runPsdSample(const std::string& gvPath, long count, const CommonOptions& opts) {
  const auto gv = readGv(gvPath);
  const auto rep = hankel::samplePsd(gv, count, opts.config.seed, opts.config.eps_constraint);
  json out = hankel::toJson(rep);
  out["command"] = "psd-sample";
  out["seed"] = opts.config.seed;
  emit(out);
  return 0;
}

int runPairing(int m, int n, int members, int samples, int terms, int jobs,
               const CommonOptions& opts) {
  if (m % 2 != 0) throw CliError("pairing: m must be even");
  const auto frame = hankel::defaultFrame(m, n);
  std::vector<hankel::GeneratingVector<double>> psdMembers;
  for (int j = 0; j < members; ++j) {
    hankel::Rng rng(hankel::mixSeed(opts.config.seed, 1000u + static_cast<unsigned>(j)));
    Eigen::VectorXd alpha(frame.size());
    for (int i = 0; i < frame.size(); ++i) alpha[i] = rng.uniform01();
    psdMembers.push_back(hankel::compose(alpha, frame));
  }

  const int maxTerms =
      terms > 0 ? terms : static_cast<int>(hankel::indexCount(m, n)) + 1;
  std::vector<hankel::UConeSample> ucone(static_cast<std::size_t>(samples));
  const auto worker = [&](int w) {
    for (int i = w; i < samples; i += jobs) {
      hankel::Rng rng(hankel::mixSeed(opts.config.seed, 2000u + static_cast<unsigned>(i)));
      const int t = terms > 0 ? terms : 1 + static_cast<int>(rng.raw() % maxTerms);
      ucone[static_cast<std::size_t>(i)] = hankel::sampleUCone(m, n, t, rng);
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  const auto rep = hankel::pairingExperiment(psdMembers, ucone);
  opts.note("pairing: " + std::to_string(rep.pairs) + " pairs, worst scaled " +
            std::to_string(rep.worstScaled));
  json out = hankel::toJson(rep);
  out["command"] = "pairing";
  out["m"] = m;
  out["n"] = n;
  out["members"] = members;
  out["samples"] = samples;
  out["seed"] = opts.config.seed;
  emit(out);
  return 0;
}

int runLemmaConst(int m, int n, const std::vector<double>& pointsArg,
                  const CommonOptions& opts) {
  const Eigen::VectorXd points =
      pointsArg.empty() ? hankel::defaultLemmaPoints(n) : toVec(pointsArg);
  const auto lc = hankel::lemmaConstant(m, n, points);

  // Spot check: the defining inequality on random pairs.
  hankel::Rng rng(opts.config.seed);
  double minSlack = std::numeric_limits<double>::infinity();
  const int pairs = 100;
  for (int i = 0; i < pairs; ++i) {
    const Eigen::VectorXd x = rng.gaussianVector(n), y = rng.gaussianVector(n);
    const double lhs = lc.c * (hankel::convPower(x, m) + hankel::convPower(y, m)).norm();
    const double rhs = std::max(std::pow(x.norm(), m), std::pow(y.norm(), m));
    minSlack = std::min(minSlack, lhs - rhs);
  }
  json out = hankel::toJson(lc);
  out["command"] = "lemma-const";
  out["seed"] = opts.config.seed;
  out["spot_check"] =
      json{{"pairs", pairs}, {"min_slack", minSlack}, {"pass", minSlack >= -1e-9}};
  emit(out);
  return 0;
}

int runSearchPns(int m, int n, long trials, int jobs, const std::string& outPath,
                 const CommonOptions& opts) {
  emit(json{{"command", "search-pns"},
            {"m", m},
            {"n", n},
            {"trials", trials},
            {"jobs", jobs},
            {"seed", opts.config.seed},
            {"config", hankel::toJson(opts.config)}});
  const auto candidates = hankel::searchPns(m, n, trials, opts.config, jobs);
  const auto& halfBasis = *hankel::monomialBasis(m / 2, n);
  std::ofstream append;
  if (!outPath.empty()) {
    append.open(outPath, std::ios::app);
    if (!append) throw CliError("cannot open --out file: " + outPath);
  }
  for (const auto& c : candidates) {
    const json line = hankel::toJson(c, halfBasis);
    std::cout << line.dump() << "\n";
    if (append) append << line.dump() << "\n";
  }
  emit(json{{"command", "search-pns"}, {"candidates", candidates.size()}});
  opts.note("search-pns: flagged " + std::to_string(candidates.size()) + " of " +
            std::to_string(trials) + " trials");
  return 0;
}

int runIdentityCheck(int m, int n, const CommonOptions& opts) {
  if (m % 2 != 0) throw CliError("identity-check: m must be even");
  hankel::Rng rng(opts.config.seed);

  const auto vframe = hankel::defaultFrame(m, n);
  double cor2Max = 0;
  for (int i = 0; i < 200; ++i) {
    const Eigen::VectorXd x = rng.gaussianVector(n);
    const Eigen::VectorXd lhs = hankel::utImage(hankel::convPower(x, m), vframe);
    const Eigen::VectorXd rhs =
        hankel::dualImagePoint(hankel::rankOne(x, m).toSymmetric(), vframe);
    for (int k = 0; k < lhs.size(); ++k)
      cor2Max = std::max(cor2Max, std::abs(lhs[k] - rhs[k]) / (1.0 + std::abs(rhs[k])));
  }
  const bool cor2Pass = cor2Max <= 1e-9;

  const auto gframe = hankel::buildGramFrame(m, n);
  double gramMax = 0;
  for (int i = 0; i < 100; ++i) {
    const Eigen::MatrixXd g = Eigen::MatrixXd::NullaryExpr(
        gframe.d(), gframe.d(), [&](Eigen::Index, Eigen::Index) { return rng.gaussian(); });
    const Eigen::MatrixXd q = hankel::symmetrize(g);
    const auto t = hankel::gramToTensor(q, gframe);
    for (int j = 0; j < 20; ++j) {
      const Eigen::VectorXd w = rng.gaussianVector(n);
      const Eigen::VectorXd mono = hankel::monomialVector(*gframe.halfBasis, w);
      const double viaGram = mono.dot(q * mono);
      const double viaForm = hankel::evalForm(t, w);
      gramMax = std::max(gramMax, std::abs(viaForm - viaGram) / (1.0 + std::abs(viaGram)));
    }
  }
  const bool gramPass = gramMax <= 1e-9;

  emit(json{{"command", "identity-check"},
            {"m", m},
            {"n", n},
            {"constraints", gframe.constraintCount()},
            {"gram_size", gframe.d()},
            {"seed", opts.config.seed},
            {"cor2", json{{"max_rel_err", cor2Max}, {"pass", cor2Pass}}},
            {"gram_identity", json{{"max_rel_err", gramMax}, {"pass", gramPass}}},
            {"pass", cor2Pass && gramPass}});
  return cor2Pass && gramPass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel form cone toolkit: evaluation, Vandermonde decomposition, "
               "SOS certificates, dual spectrahedra, and sampling experiments"};
  app.require_subcommand(1);

  std::string gvPath, tensorPath, bPath, nodesArg = "chebyshev", outPath;
  std::vector<double> xArg, pointsArg;
  int m = 0, n = 0, members = 20, samples = 500, terms = 0, jobs = 1;
  long count = hankel::defaults::kRefuteSamples, trials = 100;

  CommonOptions evalOpts, decompOpts, sosOpts, hsosOpts, dualOpts, psdOpts, pairOpts,
      lemmaOpts, pnsOpts, idOpts;

  auto* cEval = app.add_subcommand("eval", "evaluate a Hankel form both ways");
  cEval->add_option("--gv", gvPath, "generating vector JSON file")->required();
  cEval->add_option("--x", xArg, "evaluation point, n numbers")->required()->expected(-1);
  evalOpts.attach(cEval, false);

  auto* cTens = app.add_subcommand("tensorize", "expand a generating vector to exponent form");
  cTens->add_option("--gv", gvPath, "generating vector JSON file")->required();

  auto* cDec = app.add_subcommand("decompose", "Vandermonde decomposition of a Hankel tensor");
  cDec->add_option("--gv", gvPath, "generating vector JSON file")->required();
  cDec->add_option("--nodes", nodesArg, "chebyshev or custom:<file>");
  decompOpts.attach(cDec, false);

  auto* cSos = app.add_subcommand("check-sos", "Gram-matrix SOS feasibility of a tensor");
  cSos->add_option("--tensor", tensorPath, "symmetric tensor JSON file")->required();
  sosOpts.attach(cSos);

  auto* cHsos = app.add_subcommand("check-hsos", "SOS feasibility of a Hankel form");
  cHsos->add_option("--gv", gvPath, "generating vector JSON file")->required();
  hsosOpts.attach(cHsos);

  auto* cDual = app.add_subcommand("dual-check", "dual spectrahedron membership of b");
  cDual->add_option("--b", bPath, "coefficient JSON file (canonical exponent order)")
      ->required();
  cDual->add_option("--m", m, "order")->required();
  cDual->add_option("--n", n, "dimension")->required();
  dualOpts.attach(cDual);

  auto* cPsd = app.add_subcommand("psd-sample", "sampling refutation report for HPSD");
  cPsd->add_option("--gv", gvPath, "generating vector JSON file")->required();
  cPsd->add_option("--count", count, "random unit samples");
  psdOpts.attach(cPsd, false);

  auto* cPair = app.add_subcommand("pairing", "HPSD x U(m,n) duality pairing experiment");
  cPair->add_option("--m", m, "order")->required();
  cPair->add_option("--n", n, "dimension")->required();
  cPair->add_option("--members", members, "HPSD members to build");
  cPair->add_option("--samples", samples, "U(m,n) samples to draw");
  cPair->add_option("--terms", terms, "fixed terms per sample (default: random)");
  cPair->add_option("--jobs", jobs, "worker threads (deterministic fan-out)");
  pairOpts.attach(cPair, false);

  auto* cLemma = app.add_subcommand("lemma-const", "constructive norm-inequality constant");
  cLemma->add_option("--m", m, "even order")->required();
  cLemma->add_option("--n", n, "dimension")->required();
  cLemma->add_option("--points", pointsArg, "n distinct evaluation points")->expected(-1);
  lemmaOpts.attach(cLemma, false);

  auto* cPns = app.add_subcommand("search-pns", "search for PSD-but-not-certified candidates");
  cPns->add_option("--m", m, "even order")->required();
  cPns->add_option("--n", n, "dimension")->required();
  cPns->add_option("--trials", trials, "random trials");
  cPns->add_option("--jobs", jobs, "worker threads (deterministic fan-out)");
  cPns->add_option("--out", outPath, "append candidates to this JSON-lines file");
  pnsOpts.attach(cPns);

  auto* cId = app.add_subcommand("identity-check", "node-image and Gram identity suites");
  cId->add_option("--m", m, "even order")->required();
  cId->add_option("--n", n, "dimension")->required();
  idOpts.attach(cId, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (cEval->parsed()) return runEval(gvPath, xArg);
    if (cTens->parsed()) return runTensorize(gvPath);
    if (cDec->parsed()) return runDecompose(gvPath, nodesArg, decompOpts);
    if (cSos->parsed()) return runCheckSos(tensorPath, sosOpts);
    if (cHsos->parsed()) return runCheckHsos(gvPath, hsosOpts);
    if (cDual->parsed()) return runDualCheck(bPath, m, n, dualOpts);
    if (cPsd->parsed()) return runPsdSample(gvPath, count, psdOpts);
    if (cPair->parsed()) return runPairing(m, n, members, samples, terms, jobs, pairOpts);
    if (cLemma->parsed()) return runLemmaConst(m, n, pointsArg, lemmaOpts);
    if (cPns->parsed()) return runSearchPns(m, n, trials, jobs, outPath, pnsOpts);
    if (cId->parsed()) return runIdentityCheck(m, n, idOpts);
    std::cerr << "error: no subcommand\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
