#pragma once

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "hankel/config.hpp"
#include "hankel/convolution.hpp"
#include "hankel/generating_vector.hpp"
#include "hankel/linalg.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

/// (1, t, t^2, ..., t^{len-1}).
inline Eigen::VectorXd powerVector(double t, int len) {
  Eigen::VectorXd p(len);
  double x = 1;
  for (int i = 0; i < len; ++i) {
    p[i] = x;
    x *= t;
  }
  return p;
}

/// Chebyshev points u_k = cos(pi (2k+1) / (2N)): pairwise distinct and far
/// better conditioned than integer nodes at N around 13.
inline Eigen::VectorXd chebyshevNodes(int count) {
  Eigen::VectorXd u(count);
  for (int k = 0; k < count; ++k)
    u[k] = std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * count));
  return u;
}

/// Node frame for the Vandermonde decomposition of order-m Hankel tensors on
/// R^n: N = (n-1)m+1 distinct nodes, the short vectors (1,u_k,...,u_k^{n-1})
/// as columns, and the square matrix U whose k-th column is the long vector
/// (1,u_k,...,u_k^{N-1}).
struct VandermondeFrame {
  int m = 0;
  int n = 0;
  Eigen::VectorXd nodes;
  Eigen::MatrixXd shortVecs;  // n x N
  Eigen::MatrixXd U;          // N x N
  bool gapWarning = false;    // some pairwise gap fell below kNodeGapWarn

  int size() const { return static_cast<int>(nodes.size()); }
};

inline VandermondeFrame makeFrame(int m, int n, const Eigen::VectorXd& nodes) {
  if (m < 1 || n < 1) throw std::invalid_argument("makeFrame: m, n must be >= 1");
  const int count = generatorLength(m, n);
  if (nodes.size() != count)
    throw std::invalid_argument("makeFrame: expected " + std::to_string(count) + " nodes");
  requireDistinctNodes(nodes);
  VandermondeFrame f;
  f.m = m;
  f.n = n;
  f.nodes = nodes;
  f.gapWarning = count > 1 && minNodeGap(nodes) < defaults::kNodeGapWarn;
  f.shortVecs.resize(n, count);
  f.U.resize(count, count);
  for (int k = 0; k < count; ++k) {
    f.shortVecs.col(k) = powerVector(nodes[k], n);
    f.U.col(k) = powerVector(nodes[k], count);
  }
  return f;
}

inline VandermondeFrame defaultFrame(int m, int n) {
  return makeFrame(m, n, chebyshevNodes(generatorLength(m, n)));
}

inline void requireFrameShape(const VandermondeFrame& f, int m, int n, const char* who) {
  if (f.m != m || f.n != n) throw std::invalid_argument(std::string(who) + ": frame shape mismatch");
}

/// Coefficients alpha of the decomposition A = sum_k alpha_k u_k^{(x)m},
/// equivalently the solution of U alpha = v.
inline Eigen::VectorXd decompose(const GeneratingVector<double>& gv, const VandermondeFrame& f) {
  requireFrameShape(f, gv.m, gv.n, "decompose");
  return vandermondeSolveDual(f.nodes, gv.v);
}

/// Inverse map f(alpha) = U alpha: generating vector of sum_k alpha_k u_k^{(x)m}.
inline GeneratingVector<double> compose(const Eigen::VectorXd& alpha, const VandermondeFrame& f) {
  if (alpha.size() != f.size()) throw std::invalid_argument("compose: coefficient length mismatch");
  return GeneratingVector<double>(f.m, f.n, f.U * alpha);
}

/// (A u_0^m, A u_1^m, ..., A u_{(n-1)m}^m): the tensor's form evaluated at
/// every short node vector.
template <typename Scalar>
VectorX<Scalar> dualImagePoint(const SymmetricTensor<Scalar>& t, const VandermondeFrame& f) {
  requireFrameShape(f, t.order(), t.dimension(), "dualImagePoint");
  VectorX<Scalar> img(f.size());
  for (int k = 0; k < f.size(); ++k) img[k] = evalForm(t, f.shortVecs.col(k).template cast<Scalar>().eval());
  return img;
}

/// U^T y. For y = x^{*m} this lands on dualImagePoint(rankOne(x,m)):
/// component k is (u_k-short . x)^m.
inline Eigen::VectorXd utImage(const Eigen::VectorXd& y, const VandermondeFrame& f) {
  if (y.size() != f.size()) throw std::invalid_argument("utImage: length mismatch");
  return f.U.transpose() * y;
}

/// (U^T)^{-1} beta via the progressive primal Vandermonde solve; inverse of utImage.
inline Eigen::VectorXd hsosDualMap(const Eigen::VectorXd& beta, const VandermondeFrame& f) {
  if (beta.size() != f.size()) throw std::invalid_argument("hsosDualMap: length mismatch");
  return vandermondeSolvePrimal(f.nodes, beta);
}

}  // namespace hankel
