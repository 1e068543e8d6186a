#pragma once

#include <string>

#include "mqdr/symbolic/poly.hpp"

namespace mqdr::sym {

/// Element of Q(x) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1, so structural equality is mathematical equality.
class RatFun {
 public:
  RatFun() : den_(Poly::constant(1)) {}
  RatFun(long c) : RatFun(Poly::constant(c)) {}  // NOLINT(implicit)
  RatFun(const BigRational& c) : RatFun(Poly::constant(c)) {}  // NOLINT
  RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}  // NOLINT
  /// Throws DivisionByZeroFunction when den is zero.
  RatFun(Poly num, Poly den);

  static RatFun x() { return RatFun(Poly::monomial(1, 1)); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Throws PoleAtPoint when den(x0) = 0.
  BigRational eval(const BigRational& x0) const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  /// Throws DivisionByZeroFunction.
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(char var = 'x') const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

/// n1/d1 == n2/d2 tested as n1*d2 == n2*d1; neither side needs to be
/// reduced.
bool cross_equal(const Poly& n1, const Poly& d1, const Poly& n2,
                 const Poly& d2);

}  // namespace mqdr::sym
