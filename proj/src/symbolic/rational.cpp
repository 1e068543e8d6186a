#include "mqdr/symbolic/rational.hpp"

#include <cctype>
#include <string>

#include "mqdr/errors.hpp"

namespace mqdr::sym {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInteger parse_integer(std::string_view s, std::string_view token) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw FormatError("invalid rational token '" + std::string(token) + "'");
  }
  BigInteger v(std::string(s), 10);
  return neg ? BigInteger(-v) : v;
}

BigInteger pow10(unsigned long e) {
  BigInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigRational parse_rational(std::string_view token) {
  if (token.empty()) throw FormatError("empty rational token");
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(token.substr(0, slash), token);
    std::string_view den_text = token.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw FormatError("signed denominator in '" + std::string(token) + "'");
    }
    BigInteger den = parse_integer(den_text, token);
    if (den == 0) {
      throw FormatError("zero denominator in '" + std::string(token) + "'");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal: [sign] digits [. digits] [e [sign] digits]
  std::string_view s = token;
  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    BigInteger ev = parse_integer(s.substr(e + 1), token);
    if (!ev.fits_slong_p() || abs(ev) > 100000) {
      throw FormatError("exponent out of range in '" + std::string(token) + "'");
    }
    exponent = ev.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw FormatError("invalid rational token '" + std::string(token) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) {
      throw FormatError("invalid rational token '" + std::string(token) + "'");
    }
    digits = std::string(s);
  }
  BigRational q{BigInteger(digits, 10)};
  if (exponent > 0) {
    q *= BigRational(pow10(static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    q /= BigRational(pow10(static_cast<unsigned long>(-exponent)));
  }
  q.canonicalize();
  return neg ? BigRational(-q) : q;
}

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace mqdr::sym
