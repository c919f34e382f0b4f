#ifndef WARING_RANK_RULES_HPP
#define WARING_RANK_RULES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "waring/monomial.hpp"

namespace waring {

/// A monomial of degree k*d together with the power k.
struct KInstance {
  Monomial monomial;
  unsigned k = 2;

  unsigned form_degree() const { return monomial.degree() / k; }
};

/// Validates k >= 2 and k | deg(monomial); throws InvalidArgument otherwise.
KInstance make_instance(Monomial monomial, unsigned k);

enum class BoundKind { lower, upper };

/// Which explicit construction realizes an upper-bound rule.
enum class Construction {
  none,            // lower-bound rules
  pure_power,      // M = N^k
  two_square,      // k = 2
  linear_forms,    // averaging decomposition of the reduced monomial, times N^k
  grouping_xy2,    // k = 3: reduced monomial grouped as X*Y^2
  x04x1x2_route,   // k = 3, residues (1,1,1) with an exponent >= 4
  product_linear,  // generic 2^(k-1) bound
};

struct RuleRecord {
  std::string rule;       // short machine name
  std::string statement;  // the fact the bound rests on
  BoundKind kind = BoundKind::upper;
  unsigned bound = 0;
  Construction construction = Construction::none;
};

/// Interval for the k-th Waring rank of a monomial, with the rules used.
/// `upper` is the minimum of the upper-rule bounds, `lower` the maximum of
/// the lower-rule bounds.
struct RankBounds {
  unsigned lower = 1;
  unsigned upper = 1;
  bool exact = true;
  std::vector<RuleRecord> trace;
};

/// Sorted exponent residues modulo k.
struct ResidueClass {
  std::vector<unsigned> residues;
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  friend auto operator<=>(const ResidueClass&, const ResidueClass&) = default;
};

struct ModReduction {
  Monomial reduced;   // exponents a_i mod k
  Monomial cofactor;  // exponents floor(a_i / k); monomial = cofactor^k * reduced
};

/// Waring rank of a monomial in linear forms: prod(a_i + 1) / (min a_i + 1).
/// Every exponent must be >= 1.
std::uint64_t ccg_rank(std::span<const unsigned> exponents);

ModReduction reduce_mod_k(const KInstance& inst);

/// Non-decreasing residue tuples of length n+1 with entries in [0, k-1] and
/// sum divisible by k, in lexicographic order.
std::vector<ResidueClass> residue_classes(unsigned n, unsigned k);

/// 1 for pure k-th powers, 2 when k = 2, 3 otherwise.
unsigned lower_bound(const KInstance& inst);

std::pair<unsigned, std::vector<RuleRecord>> upper_bound(const KInstance& inst);

RankBounds classify(const KInstance& inst);

/// Largest k with 2^(k-1) <= k^n, by exact integer comparison.
unsigned compare_bounds(unsigned n);

/// The upper-bound record a decomposition should follow: the first record in
/// trace order attaining the final upper bound.
const RuleRecord& decisive_upper_rule(const RankBounds& bounds);

/// Text table "rule | statement | bound" with one row per trace record.
std::string render_trace(const std::vector<RuleRecord>& trace);

/// "exact 3" or "bounds [3,4] (open)".
std::string summary(const RankBounds& bounds);

}  // namespace waring

#endif  // WARING_RANK_RULES_HPP
