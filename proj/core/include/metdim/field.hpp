#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace metdim {

/// GF(q), q = p^m <= 64. Elements are the integers 0..q-1, read as
/// polynomials over GF(p) in base p (digit i is the coefficient of x^i);
/// multiplication reduces modulo the least monic irreducible of degree m,
/// "least" meaning the smallest base-p integer formed by its lower
/// coefficients. Arithmetic goes through precomputed q x q tables.
class GaloisField {
 public:
  static constexpr int kMaxOrder = 64;

  using Element = int;

  /// Throws ParameterError when q is not a prime power or q > kMaxOrder.
  explicit GaloisField(int q);

  int order() const noexcept { return q_; }
  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  /// Coefficients c_0..c_{m-1} of the reduction polynomial x^m + ... (monic
  /// leading coefficient omitted).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element sub(Element a, Element b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element mul(Element a, Element b) const noexcept { return mul_[a * q_ + b]; }
  /// Throws ParameterError for a == 0.
  Element inv(Element a) const;

 private:
  int q_;
  int p_;
  int m_;
  std::vector<int> modulus_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// (p, m) with q = p^m, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q) noexcept;
bool is_prime(int x) noexcept;

}  // namespace metdim
