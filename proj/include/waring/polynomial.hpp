#ifndef WARING_POLYNOMIAL_HPP
#define WARING_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "waring/monomial.hpp"
#include "waring/tower.hpp"

namespace waring {

/// Sparse multivariate polynomial with coefficients in an ExtensionTower.
///
/// Terms are kept in grlex order and zero coefficients are never stored, so
/// two polynomials are equal exactly when their term maps are equal.
class Polynomial {
 public:
  using Terms = std::map<Monomial, RingElement, GrlexOrder>;

  Polynomial(Variables vars, Tower tower);

  static Polynomial constant(const Variables& vars, const RingElement& c);
  static Polynomial term(const Variables& vars, const Monomial& m, const RingElement& c);
  static Polynomial variable(const Variables& vars, const Tower& tower, std::size_t index);

  const Variables& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_->size(); }
  const Tower& tower() const { return tower_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Degree shared by every term, or nullopt for the zero polynomial and for
  /// non-homogeneous polynomials.
  std::optional<unsigned> homogeneous_degree() const;
  RingElement coefficient(const Monomial& m) const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const RingElement& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  Polynomial scaled(const RingElement& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  /// Binary exponentiation; pow(0) is the constant 1.
  Polynomial pow(unsigned k) const;

  /// Same polynomial with coefficients re-expressed over an extension tower.
  Polynomial embed(const Tower& larger) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point,
                                std::span<const std::complex<double>> generator_values) const;
  /// Exact value at a rational point.
  RingElement evaluate(std::span<const Rational> point) const;

  /// Canonical text: grlex order, `[coefficient]*x0^e0*x1^e1...` joined by
  /// " + ", every variable printed; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Variables vars_;
  Tower tower_;
  Terms terms_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_pow(const Polynomial& p, unsigned k);

/// Composes p(X) with X_name -> images[name]. Every variable occurring in p
/// needs an image; all images share one variable set and p's tower.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images);

/// Identifies variables: each (from -> to) pair replaces x_from by x_to.
/// Targets must not themselves be identified away. The variable set is kept.
Polynomial specialize(const Polynomial& p, const std::map<std::size_t, std::size_t>& identifications);

/// Monomial-level counterpart of specialize.
Monomial specialize(const Monomial& m, const std::map<std::size_t, std::size_t>& identifications);

}  // namespace waring

#endif  // WARING_POLYNOMIAL_HPP
