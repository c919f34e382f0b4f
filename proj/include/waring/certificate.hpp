#ifndef WARING_CERTIFICATE_HPP
#define WARING_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "waring/monomial.hpp"
#include "waring/polynomial.hpp"
#include "waring/rank_rules.hpp"
#include "waring/tower.hpp"

namespace waring {

struct Summand {
  RingElement scalar;
  Polynomial form;
};

/// Explicit decomposition target = sum_j scalar_j * form_j^k.
///
/// Over C every scalar has a k-th root, so scalar * form^k can be rewritten
/// as (scalar^(1/k) * form)^k; a certificate with s summands therefore
/// witnesses k-th rank <= s. Keeping the scalar separate avoids adjoining
/// k-th roots of every weight.
struct Certificate {
  Variables variables;
  unsigned k = 2;
  Monomial target;
  Tower tower;
  std::vector<Summand> summands;
  bool verified = false;
  std::vector<RuleRecord> provenance;

  std::size_t size() const { return summands.size(); }
};

/// Throws MalformedCertificate if the certificate is not well formed: form
/// degrees differ from deg(target)/k, k does not divide the degree, or a
/// variable set or tower disagrees.
void validate_structure(const Certificate& cert);

/// sum_j scalar_j * form_j^k, exactly.
Polynomial expand(const Certificate& cert);

/// True iff the exact expansion equals the target monomial with coefficient
/// one. Throws MalformedCertificate for structural problems.
bool check(const Certificate& cert);

/// check() that also records the outcome in cert.verified.
bool verify(Certificate& cert);

/// Human-readable canonical rendering.
std::string to_string(const Certificate& cert);

}  // namespace waring

#endif  // WARING_CERTIFICATE_HPP
