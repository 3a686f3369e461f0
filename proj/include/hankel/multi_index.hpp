#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

/// Exponent tuple alpha = (alpha_0, ..., alpha_{n-1}) of a monomial
/// x_0^{alpha_0} ... x_{n-1}^{alpha_{n-1}}. Entries are non-negative; the
/// degree is their sum.
class MultiIndex {
 public:
  explicit MultiIndex(Eigen::VectorXi exponents) : e_(std::move(exponents)) {
    if (e_.size() < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    if ((e_.array() < 0).any()) throw std::invalid_argument("MultiIndex: exponents must be >= 0");
  }

  static MultiIndex zero(int n) { return MultiIndex(Eigen::VectorXi::Zero(n)); }

  int dimension() const { return static_cast<int>(e_.size()); }
  int degree() const { return e_.sum(); }
  int operator[](int i) const { return e_[i]; }
  const Eigen::VectorXi& exponents() const { return e_; }

  MultiIndex operator+(const MultiIndex& other) const {
    if (other.dimension() != dimension())
      throw std::invalid_argument("MultiIndex: dimension mismatch");
    return MultiIndex(e_ + other.e_);
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

  std::string str() const {
    std::string s = "(";
    for (int i = 0; i < dimension(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + ")";
  }

 private:
  Eigen::VectorXi e_;
};

/// Canonical monomial order: descending lexicographic on exponent vectors.
/// For degree 3 in 3 variables: 300, 210, 201, 120, 111, 102, 030, 021, 012, 003.
inline bool canonicalLess(const MultiIndex& a, const MultiIndex& b) {
  const int n = std::min(a.dimension(), b.dimension());
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.dimension() > b.dimension();
}

/// All multi-indices of the given degree and dimension, in canonical order.
inline std::vector<MultiIndex> enumerateIndices(int degree, int dimension) {
  if (degree < 0) throw std::invalid_argument("enumerateIndices: degree must be >= 0");
  if (dimension < 1) throw std::invalid_argument("enumerateIndices: dimension must be >= 1");
  std::vector<MultiIndex> out;
  Eigen::VectorXi cur(dimension);
  // Descending first coordinate, recursively; yields descending lex order.
  const auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == dimension - 1) {
      cur[slot] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      cur[slot] = a;
      self(self, slot + 1, remaining - a);
    }
  };
  rec(rec, 0, degree);
  return out;
}

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in combinatorial coefficient");
  return r;
}

/// Exact binomial coefficient; throws std::overflow_error if it exceeds int64.
inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t num = 1;
  for (int i = 0; i < k; ++i) {
    num = checkedMul(num, n - i);
    num /= (i + 1);  // exact: product of j consecutive integers divides by j!
  }
  return num;
}

/// Multinomial weight c_alpha = m! / (alpha_0! ... alpha_{n-1}!), computed as a
/// product of binomials so every intermediate stays integral.
inline std::int64_t multinomial(const MultiIndex& alpha) {
  std::int64_t c = 1;
  int remaining = alpha.degree();
  for (int i = 0; i < alpha.dimension(); ++i) {
    c = checkedMul(c, binomial(remaining, alpha[i]));
    remaining -= alpha[i];
  }
  return c;
}

/// Number of multi-indices of the given degree/dimension: C(n+m-1, m).
inline std::int64_t indexCount(int degree, int dimension) {
  return binomial(dimension + degree - 1, degree);
}

/// Degree-m basis over n variables in canonical order, with the multinomial
/// weight of each index. Shared and cached per (m, n).
struct MonomialBasis {
  int degree = 0;
  int dimension = 0;
  std::vector<MultiIndex> indices;
  std::vector<std::int64_t> weights;

  int size() const { return static_cast<int>(indices.size()); }

  /// Position of alpha in canonical order (binary search; the list is sorted).
  int rankOf(const MultiIndex& alpha) const {
    auto it = std::lower_bound(indices.begin(), indices.end(), alpha, canonicalLess);
    if (it == indices.end() || !(*it == alpha))
      throw std::invalid_argument("MonomialBasis: index " + alpha.str() + " not in basis");
    return static_cast<int>(it - indices.begin());
  }
};

inline std::shared_ptr<const MonomialBasis> monomialBasis(int degree, int dimension) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{degree, dimension}];
  if (!slot) {
    auto b = std::make_shared<MonomialBasis>();
    b->degree = degree;
    b->dimension = dimension;
    b->indices = enumerateIndices(degree, dimension);
    b->weights.reserve(b->indices.size());
    for (const auto& a : b->indices) b->weights.push_back(multinomial(a));
    slot = std::move(b);
  }
  return slot;
}

}  // namespace hankel
