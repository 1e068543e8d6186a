#include "mqdr/symbolic/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mqdr/errors.hpp"

namespace mqdr::sym {

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

Poly Poly::constant(const BigRational& c) { return Poly(std::vector{c}); }

Poly Poly::monomial(const BigRational& c, int d) {
  if (d < 0) throw InvalidArgument("negative monomial degree");
  std::vector<BigRational> v(static_cast<std::size_t>(d) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational Poly::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return c_[static_cast<std::size_t>(d)];
}

const BigRational& Poly::leading() const {
  if (c_.empty()) throw InvalidArgument("zero polynomial has no leading term");
  return c_.back();
}

BigRational Poly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  BigRational inv = 1 / leading();
  return r *= inv;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZeroFunction();
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<BigRational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  std::vector<BigRational> r = a.c_;
  const BigRational lead_inv = 1 / b.leading();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    BigRational f = r[top] * lead_inv;
    q[top - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= f * b.c_[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    BigRational c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    bool neg = c < 0;
    BigRational mag = neg ? BigRational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (d == 0 || !unit) {
      os << sym::to_string(mag);
      if (d > 0) os << '*';
    }
    if (d >= 1) os << var;
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

namespace {

// Integer polynomials in ascending degree, trimmed.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
}

void make_primitive(ZPoly& z) {
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_part(const Poly& p) {
  mpz_class den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (den / c.get_den()));
  make_primitive(z);
  return z;
}

// Remainder of lc(b)^e a by b, with e just large enough to stay in Z[x].
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    const mpz_class f = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
  }
  return a;
}

}  // namespace

// Primitive remainder sequence: Euclid over Q lets coefficient sizes grow
// exponentially, while dropping the content at each step keeps them near
// the size of the inputs.
Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly x = primitive_part(a);
  ZPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<BigRational> c(x.begin(), x.end());
  return Poly(std::move(c)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return Poly::divmod(a * b, gcd(a, b)).first.monic();
}

}  // namespace mqdr::sym
