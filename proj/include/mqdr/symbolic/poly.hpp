#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mqdr/symbolic/rational.hpp"

namespace mqdr::sym {

/// Univariate polynomial with rational coefficients, stored in ascending
/// degree. The leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list, degree -1).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const BigRational& c);
  /// c * x^d
  static Poly monomial(const BigRational& c, int d);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigRational>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^d (zero past the degree).
  BigRational coeff(int d) const;
  const BigRational& leading() const;

  BigRational eval(const BigRational& x) const;
  /// Divides by the leading coefficient; zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigRational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws DivisionByZeroFunction when b is zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Monic least common multiple; lcm with zero is zero.
Poly lcm(const Poly& a, const Poly& b);

}  // namespace mqdr::sym
