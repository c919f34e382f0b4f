#ifndef WARING_TOWER_HPP
#define WARING_TOWER_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

class ExtensionTower;
class RingElement;

using Tower = std::shared_ptr<const ExtensionTower>;

/// Q adjoined with a sequence of algebraic generators g_0, ..., g_{m-1}.
///
/// Generator i satisfies a monic polynomial
///   g_i^{deg_i} + c_{deg_i - 1} g_i^{deg_i - 1} + ... + c_0 = 0
/// whose coefficients c_j are elements of the sub-tower on g_0..g_{i-1}.
/// Elements are kept in normal form: every exponent of g_i is below deg_i.
///
/// The defining polynomials are not required to be irreducible. Any identity
/// that holds in the quotient also holds in C after sending each generator to
/// a root of its defining polynomial, which is all certificate checking needs.
///
/// Towers are immutable and shared; extending a tower creates a new node that
/// points at its parent, so elements of the parent embed by zero padding.
class ExtensionTower : public std::enable_shared_from_this<ExtensionTower> {
 public:
  /// The empty tower, i.e. Q itself.
  static Tower rationals();

  /// Adjoins a root of `defining` (coefficients low to high, leading one
  /// included). Throws InvalidArgument when the polynomial is not monic, has
  /// degree below two, uses a foreign tower, or the name is taken.
  static Tower extend(const Tower& base, std::string name,
                      const std::vector<RingElement>& defining);

  std::size_t generator_count() const { return names_.size(); }
  /// Dimension of the tower as a Q-vector space (product of degrees).
  std::size_t dimension() const { return dimension_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Sub-tower made of the first `count` generators.
  Tower prefix(std::size_t count) const;
  const Tower& parent() const { return parent_; }

  /// Lower coefficients c_0..c_{deg-1} of the defining polynomial of the
  /// generator at `index`, as elements of prefix(index).
  const std::vector<RingElement>& defining_lower(std::size_t index) const;

  /// Numerical values for every generator, chosen level by level as roots of
  /// the defining polynomials. `choice[i]` (taken modulo the degree) picks
  /// among the roots of level i sorted by argument; missing entries pick 0.
  std::vector<std::complex<double>> numeric_roots(
      std::span<const std::size_t> choice = {}) const;

  bool structurally_equal(const ExtensionTower& other) const;

 private:
  ExtensionTower() = default;

  Tower parent_;
  std::vector<std::string> names_;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 1;
  std::vector<RingElement> lower_;  // top generator only; empty for Q
  // lower_ of every level, outermost last; owned by the ancestors.
  std::vector<const std::vector<RingElement>*> level_lower_;

  friend class RingElement;
  friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);
};

bool same_tower(const Tower& a, const Tower& b);

/// Element of an ExtensionTower in normal form.
///
/// Stored densely in the monomial basis g_0^{e_0} ... g_{m-1}^{e_{m-1}},
/// e_i < deg_i, with g_0 varying fastest. The sparse view `terms()` lists the
/// non-zero coefficients only.
class RingElement {
 public:
  using Exponents = std::vector<unsigned>;

  explicit RingElement(Tower tower);
  RingElement(Tower tower, const Rational& value);
  RingElement(Tower tower, long value) : RingElement(std::move(tower), Rational(value)) {}

  static RingElement generator(const Tower& tower, std::size_t index);
  /// Builds an element from (exponents -> coefficient) pairs. Exponents must
  /// already be reduced.
  static RingElement from_terms(const Tower& tower,
                                const std::map<Exponents, Rational>& terms);

  const Tower& tower() const { return tower_; }
  bool is_zero() const;
  bool is_one() const;
  /// The value if the element lies in Q.
  std::optional<Rational> as_rational() const;
  std::map<Exponents, Rational> terms() const;
  const std::vector<Rational>& dense() const { return coeffs_; }

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
  friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
  friend RingElement operator*(const RingElement& lhs, const RingElement& rhs);
  friend bool operator==(const RingElement& lhs, const RingElement& rhs);

  RingElement pow(unsigned exponent) const;
  RingElement scaled(const Rational& factor) const;

  /// Re-expresses the element over `larger`, which must extend this tower.
  RingElement embed(const Tower& larger) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> generator_values) const;

  /// Canonical text: terms in basis order joined by " + ", each printed as
  /// `(c)*g0^e0*g1^e1...`; "0" for zero. Over Q a term is just `(c)`.
  std::string to_string() const;
  static RingElement parse(const Tower& tower, std::string_view text);

 private:
  RingElement(Tower tower, std::vector<Rational> coeffs)
      : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {}

  Tower tower_;
  std::vector<Rational> coeffs_;

  friend class ExtensionTower;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_mul(const RingElement& a, const RingElement& b);
bool ring_eq(const RingElement& a, const RingElement& b);

}  // namespace waring

#endif  // WARING_TOWER_HPP
