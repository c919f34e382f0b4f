#include "waring/cyclotomic.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

// Exact quotient of num by a monic divisor; the remainder must vanish.
UnivariatePoly divide_exact(UnivariatePoly num, const UnivariatePoly& den) {
  const std::size_t dn = den.size() - 1;
  UnivariatePoly quot(num.size() - dn, Rational(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Rational c = num[i];
    quot[i - dn] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (sgn(num[i]) != 0) throw Error("cyclotomic: inexact division");
  }
  return quot;
}

UnivariatePoly multiply(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

UnivariatePoly cyclotomic_poly(unsigned m) {
  if (m == 0) throw InvalidArgument("cyclotomic_poly: m must be >= 1");
  UnivariatePoly divisor_product{Rational(1)};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) divisor_product = multiply(divisor_product, cyclotomic_poly(d));
  }
  UnivariatePoly xm_minus_one(m + 1, Rational(0));
  xm_minus_one[0] = -1;
  xm_minus_one[m] = 1;
  return divide_exact(std::move(xm_minus_one), divisor_product);
}

unsigned totient(unsigned m) {
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<RingElement> lift(const Tower& base, const UnivariatePoly& poly) {
  std::vector<RingElement> out;
  out.reserve(poly.size());
  for (const auto& c : poly) out.emplace_back(base, c);
  return out;
}

Tower adjoin_root_of_unity(const Tower& base, unsigned m, std::string name) {
  if (m < 3) throw InvalidArgument("adjoin_root_of_unity: m must be >= 3");
  return ExtensionTower::extend(base, std::move(name), lift(base, cyclotomic_poly(m)));
}

std::string to_string(const UnivariatePoly& poly, const std::string& var) {
  std::string out;
  for (std::size_t i = poly.size(); i-- > 0;) {
    if (sgn(poly[i]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(poly[i]) + ")";
    if (i > 0) out += "*" + var + "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace waring
