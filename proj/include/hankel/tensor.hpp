#pragma once

#include <Eigen/Core>
#include <memory>
#include <stdexcept>
#include <utility>

#include "hankel/generating_vector.hpp"
#include "hankel/linalg.hpp"
#include "hankel/multi_index.hpp"

namespace hankel {

/// Symmetric tensor in compressed exponent form: one coefficient a_alpha per
/// multi-index of degree m, in canonical order. Dense index-tuple storage is
/// never materialized; the multinomial weight c_alpha carries the symmetry
/// count in every contraction.
template <typename Scalar = double>
class SymmetricTensor {
 public:
  SymmetricTensor(int m, int n)
      : basis_(monomialBasis(m, n)), coeffs_(VectorX<Scalar>::Zero(basis_->size())) {}

  SymmetricTensor(std::shared_ptr<const MonomialBasis> basis, VectorX<Scalar> coeffs)
      : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (!basis_) throw std::invalid_argument("SymmetricTensor: null basis");
    if (coeffs_.size() != basis_->size())
      throw std::invalid_argument("SymmetricTensor: coefficient count mismatch");
  }

  int order() const { return basis_->degree; }
  int dimension() const { return basis_->dimension; }
  const MonomialBasis& basis() const { return *basis_; }
  std::shared_ptr<const MonomialBasis> basisPtr() const { return basis_; }

  const VectorX<Scalar>& coeffs() const { return coeffs_; }
  VectorX<Scalar>& coeffs() { return coeffs_; }

  Scalar coeff(const MultiIndex& alpha) const { return coeffs_[basis_->rankOf(alpha)]; }
  Scalar& coeffRef(const MultiIndex& alpha) { return coeffs_[basis_->rankOf(alpha)]; }

  SymmetricTensor& operator+=(const SymmetricTensor& o) {
    requireSameShape(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  SymmetricTensor& operator-=(const SymmetricTensor& o) {
    requireSameShape(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  SymmetricTensor& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }

  friend SymmetricTensor operator+(SymmetricTensor a, const SymmetricTensor& b) { return a += b; }
  friend SymmetricTensor operator-(SymmetricTensor a, const SymmetricTensor& b) { return a -= b; }
  friend SymmetricTensor operator*(Scalar s, SymmetricTensor t) { return t *= s; }
  friend SymmetricTensor operator*(SymmetricTensor t, Scalar s) { return t *= s; }

 private:
  void requireSameShape(const SymmetricTensor& o) const {
    if (order() != o.order() || dimension() != o.dimension())
      throw std::invalid_argument("SymmetricTensor: order/dimension mismatch");
  }

  std::shared_ptr<const MonomialBasis> basis_;
  VectorX<Scalar> coeffs_;
};

/// Position of a_alpha inside the generating vector: sum_i i * alpha_i
/// (0-based variables, so alpha = (m,0,...,0) maps to v_0).
inline int hankelKey(const MultiIndex& alpha) {
  int key = 0;
  for (int i = 0; i < alpha.dimension(); ++i) key += i * alpha[i];
  return key;
}

template <typename Scalar>
SymmetricTensor<Scalar> hankelToSymmetric(const GeneratingVector<Scalar>& gv) {
  auto basis = monomialBasis(gv.m, gv.n);
  VectorX<Scalar> coeffs(basis->size());
  for (int r = 0; r < basis->size(); ++r) coeffs[r] = gv.v[hankelKey(basis->indices[r])];
  return SymmetricTensor<Scalar>(std::move(basis), std::move(coeffs));
}

/// Rank-one symmetric tensor u^{(x)m} with entries u_{i1} ... u_{im};
/// in exponent form the coefficient at alpha is u^alpha.
template <typename Scalar = double>
struct RankOneTensor {
  VectorX<Scalar> u;
  int m = 0;

  Scalar coeff(const MultiIndex& alpha) const {
    if (alpha.dimension() != u.size() || alpha.degree() != m)
      throw std::invalid_argument("RankOneTensor: index shape mismatch");
    Scalar p = 1;
    for (int i = 0; i < alpha.dimension(); ++i)
      for (int j = 0; j < alpha[i]; ++j) p *= u[i];
    return p;
  }

  SymmetricTensor<Scalar> toSymmetric() const {
    auto basis = monomialBasis(m, static_cast<int>(u.size()));
    VectorX<Scalar> coeffs(basis->size());
    for (int r = 0; r < basis->size(); ++r) coeffs[r] = coeff(basis->indices[r]);
    return SymmetricTensor<Scalar>(std::move(basis), std::move(coeffs));
  }
};

template <typename Derived>
RankOneTensor<typename Derived::Scalar> rankOne(const Eigen::MatrixBase<Derived>& u, int m) {
  if (m < 1) throw std::invalid_argument("rankOne: order must be >= 1");
  return RankOneTensor<typename Derived::Scalar>{u.eval(), m};
}

/// Tensor-side form evaluation: A x^m = sum_{|alpha|=m} c_alpha a_alpha x^alpha.
template <typename Scalar, typename Derived>
Scalar evalForm(const SymmetricTensor<Scalar>& t, const Eigen::MatrixBase<Derived>& x) {
  const int n = t.dimension();
  const int m = t.order();
  if (x.size() != n) throw std::invalid_argument("evalForm: x must have length n");
  // Power table x_i^j, j = 0..m, so each monomial is a short product of lookups.
  MatrixX<Scalar> pow(n, m + 1);
  for (int i = 0; i < n; ++i) {
    pow(i, 0) = Scalar(1);
    for (int j = 1; j <= m; ++j) pow(i, j) = pow(i, j - 1) * x[i];
  }
  const auto& basis = t.basis();
  Scalar acc = 0;
  for (int r = 0; r < basis.size(); ++r) {
    const MultiIndex& a = basis.indices[r];
    Scalar mono = Scalar(static_cast<double>(basis.weights[r])) * t.coeffs()[r];
    for (int i = 0; i < n; ++i) mono *= pow(i, a[i]);
    acc += mono;
  }
  return acc;
}

}  // namespace hankel
