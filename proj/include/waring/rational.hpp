#ifndef WARING_RATIONAL_HPP
#define WARING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waring {

// Exact rationals and integers. GMP keeps every mpq_class result in lowest
// terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Accepts only the canonical form produced by to_string: optional '-',
// no leading zeros, reduced fraction, denominator omitted when 1.
Rational parse_rational(std::string_view text);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace waring

#endif  // WARING_RATIONAL_HPP
