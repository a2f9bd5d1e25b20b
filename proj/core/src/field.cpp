#include "metdim/field.hpp"

#include <string>
#include <utility>

#include "metdim/error.hpp"

namespace metdim {

namespace {

using Poly = std::vector<int>;  // coefficients, index = degree

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  // b is monic
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = a.back();
    for (int i = 0; i <= db; ++i) a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly digits(int value, int p, int m) {
  Poly out(m, 0);
  for (int i = 0; i < m; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int undigits(const Poly& a, int p) {
  int v = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int x) noexcept {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) noexcept {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return {0, 0};
  return {p, m};
}

GaloisField::GaloisField(int q) : q_(q) {
  const auto [p, m] = prime_power(q);
  if (p == 0) throw ParameterError("field order " + std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) throw ParameterError("field order " + std::to_string(q) + " exceeds " + std::to_string(kMaxOrder));
  p_ = p;
  m_ = m;

  Poly f;
  {
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      f = digits(low, p, m);
      f.push_back(1);
      if (m == 1 || irreducible(f, p)) break;
    }
  }
  modulus_.assign(f.begin(), f.end() - 1);

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly pa = digits(a, p, m);
    Poly na(m);
    for (int i = 0; i < m; ++i) na[i] = (p - pa[i]) % p;
    neg_[a] = undigits(na, p);
    for (int b = 0; b < q; ++b) {
      const Poly pb = digits(b, p, m);
      Poly sum(m);
      for (int i = 0; i < m; ++i) sum[i] = (pa[i] + pb[i]) % p;
      add_[a * q + b] = undigits(sum, p);
      Poly prod(2 * m, 0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      Poly r = poly_mod(prod, f, p);
      r.resize(m, 0);
      mul_[a * q + b] = undigits(r, p);
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
}

GaloisField::Element GaloisField::inv(Element a) const {
  if (a == 0) throw ParameterError("zero has no multiplicative inverse");
  return inv_[a];
}

}  // namespace metdim
