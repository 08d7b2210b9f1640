#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dw {

// mpq_class keeps every result in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (decimal). Throws ValidationError on malformed
/// text or a zero denominator. The result is canonical.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace dw
