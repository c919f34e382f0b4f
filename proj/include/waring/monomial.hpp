#ifndef WARING_MONOMIAL_HPP
#define WARING_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace waring {

/// Exponent vector over a fixed, ordered set of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}
  Monomial(std::initializer_list<unsigned> exponents) : exps_(exponents) {}

  static Monomial one(std::size_t variable_count) {
    return Monomial(std::vector<unsigned>(variable_count, 0));
  }
  static Monomial variable(std::size_t variable_count, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& rhs) const;
  Monomial pow(unsigned e) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  /// Plain lexicographic comparison of the exponent vectors.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// Graded lexicographic order: larger total degree first, ties broken by
/// lexicographic comparison with x0 most significant.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// Every monomial of total degree `degree` in `variable_count` variables, in
/// grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t variable_count, unsigned degree);

/// Ordered variable names shared by the polynomials built over them.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::size_t count, std::string_view prefix = "x");
Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& a, const Variables& b);

/// "x0^4 x1 x2" style; "1" for the empty product.
std::string to_text(const Monomial& m, const std::vector<std::string>& names);
std::string to_text(const Monomial& m);

}  // namespace waring

#endif  // WARING_MONOMIAL_HPP
