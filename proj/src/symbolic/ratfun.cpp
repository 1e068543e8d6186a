#include "mqdr/symbolic/ratfun.hpp"

#include "mqdr/errors.hpp"

namespace mqdr::sym {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroFunction();
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
  }
  BigRational lead = den_.leading();
  if (lead != 1) {
    BigRational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

BigRational RatFun::eval(const BigRational& x0) const {
  BigRational d = den_.eval(x0);
  if (d == 0) throw PoleAtPoint(sym::to_string(x0));
  return num_.eval(x0) / d;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw DivisionByZeroFunction();
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

std::string RatFun::to_string(char var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

bool cross_equal(const Poly& n1, const Poly& d1, const Poly& n2,
                 const Poly& d2) {
  return n1 * d2 == n2 * d1;
}

}  // namespace mqdr::sym
