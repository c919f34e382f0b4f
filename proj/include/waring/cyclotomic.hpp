#ifndef WARING_CYCLOTOMIC_HPP
#define WARING_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "waring/rational.hpp"
#include "waring/tower.hpp"

namespace waring {

/// Univariate polynomial over Q, coefficients from low to high degree.
using UnivariatePoly = std::vector<Rational>;

/// The m-th cyclotomic polynomial, obtained by exact division of x^m - 1 by
/// the cyclotomic polynomials of the proper divisors of m.
UnivariatePoly cyclotomic_poly(unsigned m);

/// Euler's totient, equal to the degree of cyclotomic_poly(m).
unsigned totient(unsigned m);

/// Adjoins a primitive m-th root of unity through its cyclotomic polynomial.
/// Requires m >= 3 (for m = 1, 2 the root is rational).
Tower adjoin_root_of_unity(const Tower& base, unsigned m, std::string name);

/// Lifts a polynomial over Q to defining-polynomial coefficients over `base`.
std::vector<RingElement> lift(const Tower& base, const UnivariatePoly& poly);

std::string to_string(const UnivariatePoly& poly, const std::string& var = "x");

}  // namespace waring

#endif  // WARING_CYCLOTOMIC_HPP
