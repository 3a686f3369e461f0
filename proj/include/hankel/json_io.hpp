#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankel/config.hpp"
#include "hankel/convolution.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/psd.hpp"
#include "hankel/sampling.hpp"
#include "hankel/sos.hpp"
#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

namespace hankel {

using nlohmann::json;

inline json toJson(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

inline Eigen::VectorXd vectorFromJson(const json& a) {
  if (!a.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(a.size()));
  Eigen::Index i = 0;
  for (const auto& x : a) v[i++] = x.get<double>();
  return v;
}

inline json toJson(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(toJson(Eigen::VectorXd(m.row(i))));
  return rows;
}

inline Eigen::MatrixXd matrixFromJson(const json& a) {
  if (!a.is_array() || a.empty()) throw std::invalid_argument("expected a JSON array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
  Eigen::VectorXd first = vectorFromJson(a[0]);
  Eigen::MatrixXd m(rows, first.size());
  m.row(0) = first;
  for (Eigen::Index i = 1; i < rows; ++i) {
    Eigen::VectorXd r = vectorFromJson(a[static_cast<std::size_t>(i)]);
    if (r.size() != m.cols()) throw std::invalid_argument("ragged JSON matrix");
    m.row(i) = r;
  }
  return m;
}

inline json toJson(const GeneratingVector<double>& gv) {
  return json{{"m", gv.m}, {"n", gv.n}, {"v", toJson(gv.v)}};
}

inline GeneratingVector<double> generatingVectorFromJson(const json& j) {
  return GeneratingVector<double>(j.at("m").get<int>(), j.at("n").get<int>(),
                                  vectorFromJson(j.at("v")));
}

inline json toJson(const MultiIndex& a) {
  json arr = json::array();
  for (int i = 0; i < a.dimension(); ++i) arr.push_back(a[i]);
  return arr;
}

inline json toJson(const SymmetricTensor<double>& t) {
  json coeffs = json::array();
  for (int r = 0; r < t.basis().size(); ++r)
    coeffs.push_back(json{{"alpha", toJson(t.basis().indices[r])}, {"value", t.coeffs()[r]}});
  return json{{"m", t.order()}, {"n", t.dimension()}, {"coeffs", coeffs}};
}

inline SymmetricTensor<double> tensorFromJson(const json& j) {
  SymmetricTensor<double> t(j.at("m").get<int>(), j.at("n").get<int>());
  for (const auto& item : j.at("coeffs")) {
    const auto idx = item.at("alpha").get<std::vector<int>>();
    Eigen::VectorXi e(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) e[static_cast<Eigen::Index>(i)] = idx[i];
    t.coeffRef(MultiIndex(e)) = item.at("value").get<double>();
  }
  return t;
}

inline json toJson(const VandermondeFrame& f) {
  return json{{"m", f.m}, {"n", f.n}, {"nodes", toJson(f.nodes)}};
}

inline VandermondeFrame frameFromJson(const json& j) {
  return makeFrame(j.at("m").get<int>(), j.at("n").get<int>(), vectorFromJson(j.at("nodes")));
}

inline json toJson(const RunConfig& c) {
  return json{{"eps_constraint", c.eps_constraint},
              {"eps_psd", c.eps_psd},
              {"rank_tol", c.rank_tol},
              {"max_iter", c.max_iter},
              {"refute_samples", c.refute_samples},
              {"seed", c.seed},
              {"nodes", c.nodes == NodeScheme::Chebyshev ? "chebyshev" : "custom"},
              {"rng", kRngScheme}};
}

inline RunConfig runConfigFromJson(const json& j) {
  RunConfig c;
  if (j.contains("eps_constraint")) c.eps_constraint = j.at("eps_constraint").get<double>();
  if (j.contains("eps_psd")) c.eps_psd = j.at("eps_psd").get<double>();
  if (j.contains("rank_tol")) c.rank_tol = j.at("rank_tol").get<double>();
  if (j.contains("max_iter")) c.max_iter = j.at("max_iter").get<long>();
  if (j.contains("refute_samples")) c.refute_samples = j.at("refute_samples").get<long>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("nodes"))
    c.nodes = j.at("nodes").get<std::string>() == "custom" ? NodeScheme::Custom
                                                           : NodeScheme::Chebyshev;
  c.validate();
  return c;
}

inline json basisToJson(const MonomialBasis& b) {
  json arr = json::array();
  for (const auto& a : b.indices) arr.push_back(toJson(a));
  return arr;
}

inline json toJson(const SosCertificate& cert, const MonomialBasis& halfBasis) {
  json factors = json::array();
  for (const auto& c : cert.factors) factors.push_back(toJson(c));
  return json{{"status", "certified"},      {"Q", toJson(cert.Q)},
              {"factors", factors},         {"residual", cert.residual},
              {"min_eig", cert.minEig},     {"iterations", cert.iterations},
              {"basis", basisToJson(halfBasis)}};
}

inline json toJson(const FeasibilityVerdict& v, const MonomialBasis& halfBasis) {
  switch (v.status) {
    case Feasibility::Certified:
      return toJson(*v.certificate, halfBasis);
    case Feasibility::Refuted:
      return json{{"status", "refuted"},
                  {"witness", toJson(*v.witness)},
                  {"witness_value", v.witnessValue}};
    default:
      return json{{"status", "inconclusive"},
                  {"final_residual", v.finalResidual},
                  {"final_min_eig", v.finalMinEig},
                  {"iterations", v.iterations},
                  {"sample_min", v.sampleMin},
                  {"note", v.note}};
  }
}

inline json toJson(const SamplingReport& r) {
  return json{{"samples", r.samples},
              {"min_value", r.minValue},
              {"argmin", toJson(r.argmin)},
              {"verdict",
               r.verdict == SampleVerdict::Refuted ? "REFUTED" : "NO_NEGATIVE_FOUND"}};
}

inline json toJson(const UConeSample& s) {
  json bases = json::array();
  for (const auto& b : s.bases) bases.push_back(toJson(b));
  return json{{"m", s.m},
              {"n", s.n},
              {"bases", bases},
              {"weights", toJson(s.weights)},
              {"y", toJson(s.y)}};
}

inline json toJson(const PairingReport& r) {
  return json{{"pairs", r.pairs},
              {"min_value", r.minValue},
              {"worst_scaled", r.worstScaled},
              {"pass", r.pass},
              {"tolerance", r.tolerance}};
}

inline json toJson(const LemmaConstant& lc) {
  return json{{"m", lc.m},
              {"n", lc.n},
              {"points", toJson(lc.points)},
              {"point_norms", toJson(lc.pointNorms)},
              {"inv_operator_norm", lc.invOperatorNorm},
              {"c", lc.c}};
}

inline json toJson(const PsdReport& r, const MonomialBasis& halfBasis) {
  json j{{"decision", psdDecisionName(r.decision)},
         {"sos", toJson(r.sos, halfBasis)},
         {"escalated_samples", r.escalatedSamples}};
  if (r.witness) {
    j["witness"] = toJson(*r.witness);
    j["witness_value"] = r.witnessValue;
  }
  return j;
}

inline json toJson(const PnsCandidate& c, const MonomialBasis& halfBasis) {
  return json{{"label", c.label},
              {"trial", c.trial},
              {"sub_seed", c.subSeed},
              {"gv", toJson(c.gv)},
              {"sampling", toJson(c.sampling)},
              {"verdict", toJson(c.verdict, halfBasis)},
              {"escalated_max_iter", c.escalatedMaxIter}};
}

}  // namespace hankel
