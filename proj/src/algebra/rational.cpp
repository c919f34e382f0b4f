#include "waring/rational.hpp"

#include <cctype>

#include "waring/error.hpp"

namespace waring {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

// Parses a canonical unsigned integer: "0" or a digit string without
// leading zeros.
bool is_canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_canonical_digits(num) || (slash != std::string_view::npos && !is_canonical_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(1);
  if (slash != std::string_view::npos) {
    d = Integer(std::string(den), 10);
    if (d <= 1) throw ParseError("non-canonical denominator in '" + std::string(text) + "'");
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw ParseError("unreduced fraction '" + std::string(text) + "'");
  }
  if (negative && n == 0) throw ParseError("negative zero '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace waring
