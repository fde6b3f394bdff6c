#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fgc {

using Rational = mpq_class;

// Accepts "p/q", integers and decimal literals ("1.25", "-3e-2").
// Decimals are converted exactly. Throws Error(Parse) on bad input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

int sign(const Rational& q);

// Rational power with integer exponent.
Rational pow_int(const Rational& q, long e);

// Number of bits in numerator plus denominator.
size_t bit_size(const Rational& q);

}  // namespace fgc
