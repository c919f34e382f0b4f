#ifndef WARING_CERTIFICATE_IO_HPP
#define WARING_CERTIFICATE_IO_HPP

#include <string>
#include <string_view>

#include "waring/certificate.hpp"
#include "waring/monomial.hpp"

namespace waring {

inline constexpr int kCertificateFormatVersion = 1;

/// Certificate file: pretty-printed JSON with fields in a fixed order.
///
///   format, formatVersion, variables, k, target,
///   tower      [{name, degree, definingPoly: [c_0, ..., c_{degree-1}]}]
///              (monic; c_i are ring elements over the preceding generators)
///   summands   [{scalar, form: [{exponents, coefficient}, ...]}]
///              (form terms in grlex order)
///   verified, provenance [{rule, statement, kind, bound}]
///
/// Every coefficient is a ring element in canonical text form, e.g.
/// "(1/6)*u^1*v^0". Serialization is canonical: parsing a serialized
/// certificate and serializing it again reproduces the same bytes.
std::string serialize(const Certificate& cert);

/// Throws ParseError for anything that is not a canonical certificate file.
/// Structural problems that parse cleanly (form degrees and the like) are
/// left for validate_structure / verify.
Certificate parse_certificate(std::string_view text);

/// "x0^4 x1 x2" (also accepts '*' between factors) or "4,1,1".
/// Throws ParseError on malformed tokens and negative exponents.
Monomial parse_monomial(std::string_view text);

}  // namespace waring

#endif  // WARING_CERTIFICATE_IO_HPP
