#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

#include "hankel/generating_vector.hpp"
#include "hankel/linalg.hpp"

namespace hankel {

/// z_i = sum_{i1+i2=i} x_{i1} y_{i2}: coefficient vector of the product of
/// the polynomials with coefficients x and y. Direct O(pq) summation.
template <typename DerivedA, typename DerivedB>
VectorX<typename DerivedA::Scalar> convolve(const Eigen::MatrixBase<DerivedA>& x,
                                            const Eigen::MatrixBase<DerivedB>& y) {
  using Scalar = typename DerivedA::Scalar;
  if (x.size() < 1 || y.size() < 1) throw std::invalid_argument("convolve: empty operand");
  VectorX<Scalar> z = VectorX<Scalar>::Zero(x.size() + y.size() - 1);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
  return z;
}

/// x^{*m}: the m-fold convolution power, i.e. the coefficients of
/// (sum_i x_i t^i)^m. Length (len(x)-1)m + 1.
template <typename Derived>
VectorX<typename Derived::Scalar> convPower(const Eigen::MatrixBase<Derived>& x, int m) {
  using Scalar = typename Derived::Scalar;
  if (m < 1) throw std::invalid_argument("convPower: m must be >= 1");
  VectorX<Scalar> p = x.eval();
  for (int i = 1; i < m; ++i) p = convolve(p, x);
  return p;
}

/// Convolution-side Hankel form: H(x) = v . x^{*m}.
template <typename Scalar, typename Derived>
Scalar hankelForm(const GeneratingVector<Scalar>& gv, const Eigen::MatrixBase<Derived>& x) {
  if (x.size() != gv.n) throw std::invalid_argument("hankelForm: x must have length n");
  return gv.v.dot(convPower(x, gv.m));
}

/// The constructive constant c = ||T^{-1}||^m * sum_k ||t_k-long|| bounding
/// max{||x||^m, ||y||^m} <= c ||x^{*m} + y^{*m}|| (and its s-term variant),
/// built from n distinct evaluation points.
struct LemmaConstant {
  int m = 0;
  int n = 0;
  Eigen::VectorXd points;      // t_0..t_{n-1}, pairwise distinct
  Eigen::VectorXd pointNorms;  // c_k = ||(1, t_k, ..., t_k^{(n-1)m})||
  double invOperatorNorm = 0;  // ||T^{-1}||
  double c = 0;                // ||T^{-1}||^m * sum_k c_k
};

/// Default evaluation points t_k = k (distinct integers, exactly representable).
inline Eigen::VectorXd defaultLemmaPoints(int n) {
  return Eigen::VectorXd::LinSpaced(n, 0.0, double(n - 1));
}

inline LemmaConstant lemmaConstant(int m, int n, const Eigen::VectorXd& points) {
  if (m < 1 || m % 2 != 0) throw std::invalid_argument("lemmaConstant: m must be even, >= 2");
  if (n < 1 || points.size() != n)
    throw std::invalid_argument("lemmaConstant: need n distinct points");
  requireDistinctNodes(points);

  // T has rows (1, t_k, ..., t_k^{n-1}); it maps x to the evaluations of the
  // polynomial with coefficients x at the points t_k.
  Eigen::MatrixXd t(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) t(k, i) = std::pow(points[k], i);
  Eigen::MatrixXd tinv(n, n);
  for (int i = 0; i < n; ++i)
    tinv.col(i) = solve(t, Eigen::VectorXd::Unit(n, i));

  LemmaConstant out;
  out.m = m;
  out.n = n;
  out.points = points;
  out.pointNorms.resize(n);
  const int longLen = generatorLength(m, n);
  for (int k = 0; k < n; ++k) {
    double s = 0;
    double p = 1;
    for (int i = 0; i < longLen; ++i) {
      s += p * p;
      p *= points[k];
    }
    out.pointNorms[k] = std::sqrt(s);
  }
  out.invOperatorNorm = operatorNorm(tinv);
  out.c = std::pow(out.invOperatorNorm, m) * out.pointNorms.sum();
  return out;
}

inline LemmaConstant lemmaConstant(int m, int n) {
  return lemmaConstant(m, n, defaultLemmaPoints(n));
}

}  // namespace hankel
