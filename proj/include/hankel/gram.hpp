#pragma once

#include <Eigen/Core>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hankel/config.hpp"
#include "hankel/linalg.hpp"
#include "hankel/multi_index.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

/// Gram-matrix frame for degree m = 2k forms on R^n: the degree-k monomial
/// basis [w]_k of size d, and for each |alpha| = m the 0/1 constraint matrix
/// A_alpha with ones at the Gram positions (beta, gamma), beta + gamma = alpha.
/// The A_alpha are mutually orthogonal and partition the all-ones matrix, so
/// each is stored as its list of positions; dense copies are built on demand.
struct GramFrame {
  int m = 0;
  int n = 0;
  int k = 0;
  std::shared_ptr<const MonomialBasis> halfBasis;  // degree k, size d
  std::shared_ptr<const MonomialBasis> fullBasis;  // degree m, one entry per constraint
  std::vector<std::vector<std::pair<int, int>>> positions;  // per full-basis rank

  int d() const { return halfBasis->size(); }
  int constraintCount() const { return fullBasis->size(); }
  std::int64_t weight(int a) const { return fullBasis->weights[a]; }
  int normSq(int a) const { return static_cast<int>(positions[a].size()); }

  Eigen::MatrixXd constraintMatrix(int a) const {
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(d(), d());
    for (auto [i, j] : positions[a]) mat(i, j) = 1.0;
    return mat;
  }

  /// <A_alpha, Q> = sum of Q over the positions of alpha.
  template <typename Derived>
  double constraintValue(const Eigen::MatrixBase<Derived>& q, int a) const {
    double s = 0;
    for (auto [i, j] : positions[a]) s += double(q(i, j));
    return s;
  }

  template <typename Derived>
  Eigen::VectorXd constraintValues(const Eigen::MatrixBase<Derived>& q) const {
    Eigen::VectorXd vals(constraintCount());
    for (int a = 0; a < constraintCount(); ++a) vals[a] = constraintValue(q, a);
    return vals;
  }

  /// Orthogonal projection onto {Q : <A_alpha, Q> = target_alpha for all alpha}.
  /// Closed form because the A_alpha are mutually orthogonal:
  /// Q += sum_alpha ((target_alpha - <A_alpha,Q>) / ||A_alpha||^2) A_alpha.
  template <typename Derived>
  Eigen::MatrixXd affineProject(const Eigen::MatrixBase<Derived>& q,
                                const Eigen::VectorXd& target) const {
    if (target.size() != constraintCount())
      throw std::invalid_argument("affineProject: target length mismatch");
    Eigen::MatrixXd out = q;
    for (int a = 0; a < constraintCount(); ++a) {
      const double delta = (target[a] - constraintValue(out, a)) / normSq(a);
      for (auto [i, j] : positions[a]) out(i, j) += delta;
    }
    return out;
  }

  /// B = sum_alpha b_alpha A_alpha; entry (beta, gamma) is b_{beta+gamma}.
  Eigen::MatrixXd dualMatrix(const Eigen::VectorXd& b) const {
    if (b.size() != constraintCount())
      throw std::invalid_argument("dualMatrix: coefficient length mismatch");
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(d(), d());
    for (int a = 0; a < constraintCount(); ++a)
      for (auto [i, j] : positions[a]) mat(i, j) = b[a];
    return mat;
  }
};

inline GramFrame buildGramFrame(int m, int n) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("buildGramFrame: m must be even, >= 2");
  if (n < 1) throw std::invalid_argument("buildGramFrame: n must be >= 1");
  GramFrame f;
  f.m = m;
  f.n = n;
  f.k = m / 2;
  f.halfBasis = monomialBasis(f.k, n);
  f.fullBasis = monomialBasis(m, n);
  f.positions.resize(static_cast<std::size_t>(f.fullBasis->size()));
  const int d = f.halfBasis->size();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int a = f.fullBasis->rankOf(f.halfBasis->indices[i] + f.halfBasis->indices[j]);
      f.positions[static_cast<std::size_t>(a)].emplace_back(i, j);
    }
  return f;
}

/// Monomial vector [x]_k over a basis: component r is x^{alpha_r}.
template <typename Derived>
VectorX<typename Derived::Scalar> monomialVector(const MonomialBasis& basis,
                                                 const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  if (x.size() != basis.dimension)
    throw std::invalid_argument("monomialVector: dimension mismatch");
  MatrixX<Scalar> pow(basis.dimension, basis.degree + 1);
  for (int i = 0; i < basis.dimension; ++i) {
    pow(i, 0) = Scalar(1);
    for (int j = 1; j <= basis.degree; ++j) pow(i, j) = pow(i, j - 1) * x[i];
  }
  VectorX<Scalar> w(basis.size());
  for (int r = 0; r < basis.size(); ++r) {
    Scalar p = 1;
    for (int i = 0; i < basis.dimension; ++i) p *= pow(i, basis.indices[r][i]);
    w[r] = p;
  }
  return w;
}

/// Tensor whose form is [w]_k^T Q [w]_k: coefficients a_alpha = <A_alpha,Q>/c_alpha.
template <typename Derived>
SymmetricTensor<double> gramToTensor(const Eigen::MatrixBase<Derived>& q, const GramFrame& f) {
  if (q.rows() != f.d() || q.cols() != f.d())
    throw std::invalid_argument("gramToTensor: Gram matrix must be d x d");
  VectorX<double> coeffs(f.constraintCount());
  for (int a = 0; a < f.constraintCount(); ++a)
    coeffs[a] = f.constraintValue(q, a) / double(f.weight(a));
  return SymmetricTensor<double>(f.fullBasis, std::move(coeffs));
}

/// Right-hand sides of the Gram constraints for a target tensor: c_alpha a_alpha.
template <typename Scalar>
Eigen::VectorXd constraintTargets(const SymmetricTensor<Scalar>& t, const GramFrame& f) {
  if (t.order() != f.m || t.dimension() != f.n)
    throw std::invalid_argument("constraintTargets: tensor/frame shape mismatch");
  Eigen::VectorXd g(f.constraintCount());
  for (int a = 0; a < f.constraintCount(); ++a)
    g[a] = double(f.weight(a)) * double(t.coeffs()[a]);
  return g;
}

struct DualMembership {
  double minEig = 0;
  bool member = false;
};

/// Spectrahedral test b in SOS*: lambda_min(sum_alpha b_alpha A_alpha) >= -eps.
inline DualMembership dualMembership(const Eigen::VectorXd& b, const GramFrame& f,
                                     double epsPsd = defaults::kEpsPsd) {
  DualMembership r;
  r.minEig = double(minEigenvalue(f.dualMatrix(b)));
  r.member = r.minEig >= -epsPsd;
  return r;
}

/// Moment vector b_alpha = w^alpha; its dual matrix is [w]_k [w]_k^T, so it is
/// always a member of the dual spectrahedron.
template <typename Derived>
Eigen::VectorXd momentDualVector(const Eigen::MatrixBase<Derived>& w, const GramFrame& f) {
  return monomialVector(*f.fullBasis, w);
}

}  // namespace hankel
