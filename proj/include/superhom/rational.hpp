#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace superhom {

// mpq_class keeps numerator/denominator reduced with a positive denominator
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "7", "-3", "2/5", "-10/4" (reduced on return).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace superhom
