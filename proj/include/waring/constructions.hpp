#ifndef WARING_CONSTRUCTIONS_HPP
#define WARING_CONSTRUCTIONS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "waring/certificate.hpp"

namespace waring {

// Every constructor below re-verifies its result and throws Error if the
// exact expansion does not reproduce the target.

/// N^k written as the single summand 1 * N^k. Requires k | every exponent.
Certificate pure_power_cert(const Variables& vars, const Monomial& target, unsigned k);

/// Greedy split of a monomial into two factors of equal degree: exponent
/// units are assigned in variable order to the first factor until it holds
/// half the degree.
std::pair<Monomial, Monomial> greedy_split(const Monomial& m);

/// M = X*Y = 1/4 (X+Y)^2 - 1/4 (X-Y)^2 over Q(i), where -1/4 = (i/2)^2.
/// Throws InvalidArgument for odd degree, a perfect square without a split,
/// a split X * X, or a split that does not multiply back to M with equal
/// degrees.
Certificate two_square(const Variables& vars, const Monomial& m,
                       std::optional<std::pair<Monomial, Monomial>> split = std::nullopt);
Certificate two_square(const Monomial& m,
                       std::optional<std::pair<Monomial, Monomial>> split = std::nullopt);

/// k! 2^(k-1) X_1...X_k = sum over signs e of (prod e_i)(X_1 + e_2 X_2 + ... + e_k X_k)^k
/// over variables X1..Xk, 2^(k-1) summands with rational scalars.
Certificate product_linear(unsigned k);

/// Root-of-unity averaging for x_0^{a_0}...x_n^{a_n}, all a_i >= 1:
///   c M = sum_{j} (prod_i z_i^{-j_i a_i}) (x_p + sum_i z_i^{j_i} x_i)^D
/// where x_p carries the smallest exponent, z_i is a primitive (a_i+1)-th
/// root of unity, j_i ranges over [0, a_i], D = deg M and
/// c = multinomial(D; a) * prod (a_i + 1). The number of summands is
/// prod_{i != p} (a_i + 1), which is the Waring rank of M.
/// Roots of order >= 3 are adjoined once per distinct order ("z3", "z4", ...);
/// order 2 uses -1.
Certificate ccg_linear_decomp(std::span<const unsigned> exponents);
Certificate ccg_linear_decomp(const Variables& vars, std::span<const unsigned> exponents);

/// Grouping: replaces variable X_i of the certificate by the monomial
/// images[i] over `new_vars`. All images must have the same degree >= 1.
Certificate group_substitute(const Certificate& cert, const Variables& new_vars,
                             const std::vector<Monomial>& images);

/// Specialization x_from -> x_to applied to the target and to every summand.
Certificate specialize_cert(const Certificate& cert,
                            const std::map<std::size_t, std::size_t>& identifications);

/// M -> M N^k, multiplying every form by N.
Certificate multiply_cert(const Certificate& cert, const Monomial& n);

/// Candidate (a x0^2 + x1x2)^3 + (b x0^2 + x1x2)^3 + (c x1x2)^3 for x0^4 x1 x2
/// with coefficients taken over `tower`. Not verified.
Certificate x04x1x2_candidate(const Tower& tower, const RingElement& a, const RingElement& b,
                              const RingElement& c);

/// The tower u^2 = 1/6, v^3 = -2 used by special_x04x1x2.
Tower x04x1x2_tower();

/// Three cubes for x0^4 x1 x2: a = u, b = -u, c = v with u^2 = 1/6, v^3 = -2.
Certificate special_x04x1x2();

}  // namespace waring

#endif  // WARING_CONSTRUCTIONS_HPP
