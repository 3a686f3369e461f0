#pragma once

#include <Eigen/Core>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/config.hpp"
#include "hankel/errors.hpp"

namespace hankel {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Derived>
MatrixX<typename Derived::Scalar> symmetrize(const Eigen::MatrixBase<Derived>& a) {
  return ((a + a.transpose()) / 2).eval();
}

/// Checks max asymmetry against tol * max(1, max|entry|), then returns the
/// symmetrized matrix. Throws std::invalid_argument on genuine asymmetry.
template <typename Derived>
MatrixX<typename Derived::Scalar> requireSymmetric(
    const Eigen::MatrixBase<Derived>& a, double tol = defaults::kAsymmetryTol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("requireSymmetric: matrix not square");
  const double scale = std::max(1.0, static_cast<double>(a.cwiseAbs().maxCoeff()));
  const double asym = static_cast<double>((a - a.transpose()).cwiseAbs().maxCoeff());
  if (asym > tol * scale)
    throw std::invalid_argument("requireSymmetric: asymmetry " + std::to_string(asym) +
                                " exceeds tolerance");
  return symmetrize(a);
}

template <typename Scalar>
struct EighResult {
  VectorX<Scalar> values;   // ascending
  MatrixX<Scalar> vectors;  // orthonormal columns, vectors.col(i) pairs with values[i]
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm falls below offTol * ||A||_F, throwing
/// ConvergenceError (with the final off-diagonal norm) after maxSweeps.
template <typename Derived>
EighResult<typename Derived::Scalar> eigh(const Eigen::MatrixBase<Derived>& a,
                                          double offTol = defaults::kEigOffTol,
                                          int maxSweeps = defaults::kMaxSweeps) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = a.rows();
  MatrixX<Scalar> w = requireSymmetric(a);
  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(d, d);
  const double normF = static_cast<double>(w.norm());

  const auto offNorm = [&]() {
    double s = 0;
    for (Eigen::Index p = 0; p < d; ++p)
      for (Eigen::Index q = p + 1; q < d; ++q) s += 2.0 * double(w(p, q)) * double(w(p, q));
    return std::sqrt(s);
  };

  double off = offNorm();
  if (normF > 0) {
    int sweep = 0;
    for (; sweep < maxSweeps && off > offTol * normF; ++sweep) {
      for (Eigen::Index p = 0; p < d; ++p) {
        for (Eigen::Index q = p + 1; q < d; ++q) {
          const Scalar apq = w(p, q);
          if (apq == Scalar(0)) continue;
          const Scalar app = w(p, p), aqq = w(q, q);
          const Scalar tau = (aqq - app) / (2 * apq);
          const Scalar t = (tau >= Scalar(0) ? Scalar(1) : Scalar(-1)) /
                           (std::abs(tau) + std::sqrt(1 + tau * tau));
          const Scalar c = 1 / std::sqrt(1 + t * t);
          const Scalar s = t * c;
          for (Eigen::Index i = 0; i < d; ++i) {
            if (i == p || i == q) continue;
            const Scalar wip = w(i, p), wiq = w(i, q);
            w(i, p) = w(p, i) = c * wip - s * wiq;
            w(i, q) = w(q, i) = s * wip + c * wiq;
          }
          w(p, p) = app - t * apq;
          w(q, q) = aqq + t * apq;
          w(p, q) = w(q, p) = Scalar(0);
          for (Eigen::Index i = 0; i < d; ++i) {
            const Scalar vip = v(i, p), viq = v(i, q);
            v(i, p) = c * vip - s * viq;
            v(i, q) = s * vip + c * viq;
          }
        }
      }
      off = offNorm();
    }
    if (off > offTol * normF)
      throw ConvergenceError("eigh: Jacobi sweeps exhausted", off);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Eigen::Index i, Eigen::Index j) { return w(i, i) < w(j, j); });
  EighResult<Scalar> r;
  r.values.resize(d);
  r.vectors.resize(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    r.values[i] = w(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    r.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return r;
}

template <typename Derived>
typename Derived::Scalar minEigenvalue(const Eigen::MatrixBase<Derived>& a) {
  return eigh(a).values[0];
}

/// Frobenius-nearest PSD matrix: clip negative eigenvalues to zero.
template <typename Derived>
MatrixX<typename Derived::Scalar> projectPsd(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto e = eigh(a);
  VectorX<Scalar> lam = e.values.cwiseMax(Scalar(0));
  return symmetrize(e.vectors * lam.asDiagonal() * e.vectors.transpose());
}

/// Rank-revealing PSD factorization Q = sum_i c_i c_i^T with factors ordered
/// by decreasing eigenvalue; keeps lambda > rankTol * lambda_max.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> factorizePsd(
    const Eigen::MatrixBase<Derived>& q, double rankTol = defaults::kRankTol) {
  using Scalar = typename Derived::Scalar;
  auto e = eigh(q);
  const Eigen::Index d = e.values.size();
  const Scalar lamMax = std::max(e.values[d - 1], Scalar(0));
  const Scalar negTol = Scalar(1e-8) * std::max(lamMax, Scalar(1));
  if (e.values[0] < -negTol)
    throw NotPsdError("factorizePsd: matrix is not PSD", double(e.values[0]));
  std::vector<VectorX<Scalar>> factors;
  for (Eigen::Index i = d - 1; i >= 0; --i) {
    if (e.values[i] > rankTol * lamMax && e.values[i] > Scalar(0))
      factors.push_back(std::sqrt(e.values[i]) * e.vectors.col(i));
  }
  return factors;
}

/// Dense linear solve by partial-pivot LU with an explicit pivot-magnitude
/// check; singular-to-tolerance systems raise SingularMatrixError naming
/// the offending pivot.
template <typename DerivedA, typename DerivedB>
VectorX<typename DerivedA::Scalar> solve(const Eigen::MatrixBase<DerivedA>& a,
                                         const Eigen::MatrixBase<DerivedB>& b,
                                         double pivotTol = defaults::kPivotTol) {
  using Scalar = typename DerivedA::Scalar;
  if (a.rows() != a.cols()) throw std::invalid_argument("solve: matrix not square");
  if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  Eigen::PartialPivLU<MatrixX<Scalar>> lu(a);
  const double scale = std::max(1.0, static_cast<double>(a.cwiseAbs().maxCoeff()));
  const auto& u = lu.matrixLU();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    if (std::abs(double(u(i, i))) <= pivotTol * scale)
      throw SingularMatrixError("solve: singular to working tolerance",
                                static_cast<int>(i), double(u(i, i)));
  }
  return lu.solve(b.eval());
}

inline void requireDistinctNodes(const Eigen::VectorXd& nodes) {
  for (Eigen::Index i = 0; i < nodes.size(); ++i)
    for (Eigen::Index j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j])
        throw SingularMatrixError("vandermonde: duplicate node", static_cast<int>(j), 0.0);
}

inline double minNodeGap(const Eigen::VectorXd& nodes) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < nodes.size(); ++i)
    for (Eigen::Index j = i + 1; j < nodes.size(); ++j)
      gap = std::min(gap, std::abs(nodes[i] - nodes[j]));
  return gap;
}

/// Progressive-elimination solve of U x = b where U has columns
/// (1, u_k, u_k^2, ...): the moment-matching (dual) Vandermonde problem.
template <typename Scalar>
VectorX<Scalar> vandermondeSolveDual(const Eigen::VectorXd& nodes, const VectorX<Scalar>& b) {
  const Eigen::Index n = nodes.size();
  if (b.size() != n) throw std::invalid_argument("vandermondeSolveDual: size mismatch");
  requireDistinctNodes(nodes);
  VectorX<Scalar> x = b;
  for (Eigen::Index k = 0; k + 1 < n; ++k)
    for (Eigen::Index j = n - 1; j > k; --j) x[j] -= Scalar(nodes[k]) * x[j - 1];
  for (Eigen::Index k = n - 2; k >= 0; --k) {
    for (Eigen::Index j = k + 1; j < n; ++j) x[j] /= Scalar(nodes[j] - nodes[j - k - 1]);
    for (Eigen::Index j = k; j + 1 < n; ++j) x[j] -= x[j + 1];
  }
  return x;
}

/// Progressive-elimination solve of U^T a = b (Newton interpolation through
/// the nodes): the primal Vandermonde problem.
template <typename Scalar>
VectorX<Scalar> vandermondeSolvePrimal(const Eigen::VectorXd& nodes, const VectorX<Scalar>& b) {
  const Eigen::Index n = nodes.size();
  if (b.size() != n) throw std::invalid_argument("vandermondeSolvePrimal: size mismatch");
  requireDistinctNodes(nodes);
  VectorX<Scalar> a = b;
  for (Eigen::Index k = 0; k + 1 < n; ++k)
    for (Eigen::Index j = n - 1; j > k; --j)
      a[j] = (a[j] - a[j - 1]) / Scalar(nodes[j] - nodes[j - k - 1]);
  for (Eigen::Index k = n - 2; k >= 0; --k)
    for (Eigen::Index j = k; j + 1 < n; ++j) a[j] -= Scalar(nodes[k]) * a[j + 1];
  return a;
}

/// Spectral operator norm ||M|| = sqrt(lambda_max(M^T M)).
template <typename Derived>
double operatorNorm(const Eigen::MatrixBase<Derived>& m) {
  auto gram = symmetrize(m.transpose() * m);
  auto e = eigh(gram);
  return std::sqrt(std::max(0.0, double(e.values[e.values.size() - 1])));
}

}  // namespace hankel
