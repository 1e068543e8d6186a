#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mqdr::sym {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Parses "a", "a/b", or a decimal such as "-1.25" or "3e-2" exactly.
/// Throws FormatError.
BigRational parse_rational(std::string_view token);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const BigRational& q);

}  // namespace mqdr::sym
