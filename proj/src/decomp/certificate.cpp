#include "waring/certificate.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "waring/error.hpp"

namespace waring {

void validate_structure(const Certificate& cert) {
  if (!cert.variables || !cert.tower) throw MalformedCertificate("missing variable set or tower");
  if (cert.k < 1) throw MalformedCertificate("k must be positive");
  if (cert.target.size() != cert.variables->size()) {
    throw MalformedCertificate("target has " + std::to_string(cert.target.size()) + " exponents for " +
                               std::to_string(cert.variables->size()) + " variables");
  }
  const unsigned degree = cert.target.degree();
  if (degree % cert.k != 0) throw MalformedCertificate("k does not divide the target degree");
  const unsigned d = degree / cert.k;
  for (std::size_t j = 0; j < cert.summands.size(); ++j) {
    const auto& s = cert.summands[j];
    if (!same_tower(s.scalar.tower(), cert.tower) || !same_tower(s.form.tower(), cert.tower)) {
      throw MalformedCertificate("summand " + std::to_string(j) + " is over a different tower");
    }
    if (!same_variables(s.form.variables(), cert.variables)) {
      throw MalformedCertificate("summand " + std::to_string(j) + " is over a different variable set");
    }
    // The zero form is a form of every degree; specializations produce it.
    if (s.form.is_zero()) continue;
    const auto deg = s.form.homogeneous_degree();
    if (!deg || *deg != d) {
      throw MalformedCertificate("summand " + std::to_string(j) + " is not a form of degree " +
                                 std::to_string(d));
    }
  }
}

namespace {

// Adds scalar * form^k to sum for a linear form via the multinomial theorem,
// avoiding the repeated squaring of dense intermediate powers.
void add_linear_power(Polynomial& sum, const RingElement& scalar, const Polynomial& form, unsigned k) {
  std::vector<std::size_t> index;
  std::vector<std::vector<RingElement>> powers;
  for (const auto& [m, c] : form.terms()) {
    const auto& e = m.exponents();
    index.push_back(static_cast<std::size_t>(std::find(e.begin(), e.end(), 1U) - e.begin()));
    std::vector<RingElement> row{RingElement(c.tower(), 1)};
    for (unsigned j = 1; j <= k; ++j) row.push_back(row.back() * c);
    powers.push_back(std::move(row));
  }
  std::vector<Integer> fact;
  for (unsigned j = 0; j <= k; ++j) fact.push_back(factorial(j));
  std::vector<unsigned> exps(form.variable_count(), 0);
  // Distribute the remaining degree over terms t.., carrying the running
  // product of coefficient powers and the multinomial denominator.
  auto rec = [&](auto& self, std::size_t t, unsigned left, const RingElement& coeff, const Integer& denom) -> void {
    if (t + 1 == index.size()) {
      exps[index[t]] = left;
      const Rational multinomial(Integer(fact[k] / (denom * fact[left])));
      sum.add_term(Monomial(exps), coeff * powers[t][left] * RingElement(coeff.tower(), multinomial));
      exps[index[t]] = 0;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[index[t]] = e;
      self(self, t + 1, left - e, coeff * powers[t][e], denom * fact[e]);
    }
    exps[index[t]] = 0;
  };
  rec(rec, 0, k, scalar, Integer(1));
}

}  // namespace

Polynomial expand(const Certificate& cert) {
  validate_structure(cert);
  Polynomial sum(cert.variables, cert.tower);
  for (const auto& s : cert.summands) {
    if (s.form.is_zero()) continue;  // k >= 1, so 0^k contributes nothing
    if (s.form.homogeneous_degree() == 1U) {
      add_linear_power(sum, s.scalar, s.form, cert.k);
    } else {
      sum += s.form.pow(cert.k).scaled(s.scalar);
    }
  }
  return sum;
}

bool check(const Certificate& cert) {
  const Polynomial sum = expand(cert);
  const Polynomial want = Polynomial::term(cert.variables, cert.target, RingElement(cert.tower, 1));
  return sum == want;
}

bool verify(Certificate& cert) {
  cert.verified = check(cert);
  return cert.verified;
}

std::string to_string(const Certificate& cert) {
  std::ostringstream os;
  os << "target: " << to_text(cert.target, *cert.variables) << '\n';
  os << "k: " << cert.k << '\n';
  os << "tower:";
  if (cert.tower->generator_count() == 0) os << " Q";
  os << '\n';
  for (std::size_t i = 0; i < cert.tower->generator_count(); ++i) {
    const auto& lower = cert.tower->defining_lower(i);
    const unsigned deg = cert.tower->degrees()[i];
    os << "  " << cert.tower->names()[i] << "^" << deg;
    for (std::size_t j = lower.size(); j-- > 0;) {
      if (lower[j].is_zero()) continue;
      os << " + [" << lower[j].to_string() << "]";
      if (j > 0) os << "*" << cert.tower->names()[i] << "^" << j;
    }
    os << " = 0\n";
  }
  os << "summands: " << cert.summands.size() << '\n';
  for (const auto& s : cert.summands) {
    os << "  [" << s.scalar.to_string() << "] * (" << s.form.to_string() << ")^" << cert.k << '\n';
  }
  os << "verified: " << (cert.verified ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace waring
