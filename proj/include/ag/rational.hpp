#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace ag {

// Exact rational scalar. GMP keeps values in lowest terms with a positive
// denominator; the helpers below canonicalize on construction so the
// invariant holds everywhere.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q", "-p/q" with arbitrary-precision digits.
Rational rational_from_string(const std::string& text);

// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Combined numerator/denominator bit length; used as the pivot-selection
// weight in exact elimination.
std::size_t bit_size(const Rational& r);

Rational factorial(unsigned n);

}  // namespace ag
