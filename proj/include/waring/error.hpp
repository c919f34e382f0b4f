#ifndef WARING_ERROR_HPP
#define WARING_ERROR_HPP

#include <stdexcept>
#include <string>

namespace waring {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Two ring elements or polynomials live over different extension towers.
class TowerMismatch : public Error {
 public:
  using Error::Error;
};

// Two polynomials are declared over different variable sets.
class VariableMismatch : public Error {
 public:
  using Error::Error;
};

// Structurally invalid certificate (form degree, variable count, tower).
// Distinct from a well-formed certificate that simply fails to verify.
class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

// Text that does not follow the canonical grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace waring

#endif  // WARING_ERROR_HPP
