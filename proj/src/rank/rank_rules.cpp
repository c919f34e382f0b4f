#include "waring/rank_rules.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "waring/error.hpp"
#include "waring/rational.hpp"

namespace waring {

namespace {

std::vector<unsigned> nonzero_sorted(const Monomial& m) {
  std::vector<unsigned> out;
  for (unsigned e : m.exponents()) {
    if (e > 0) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pure_power(const Monomial& m, unsigned k) {
  return std::all_of(m.exponents().begin(), m.exponents().end(), [k](unsigned e) { return e % k == 0; });
}

// Binary monomials whose 4th rank was found by direct computation.
bool in_k4_fact_table(const std::vector<unsigned>& stripped) {
  static const std::vector<std::vector<unsigned>> facts = {{1, 3}, {1, 7}, {3, 5}};
  return std::find(facts.begin(), facts.end(), stripped) != facts.end();
}

RuleRecord record(std::string rule, std::string statement, BoundKind kind, unsigned bound,
                  Construction c = Construction::none) {
  return RuleRecord{std::move(rule), std::move(statement), kind, bound, c};
}

}  // namespace

KInstance make_instance(Monomial monomial, unsigned k) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (monomial.degree() % k != 0) {
    throw InvalidArgument("k = " + std::to_string(k) + " does not divide the degree " +
                          std::to_string(monomial.degree()));
  }
  return KInstance{std::move(monomial), k};
}

std::uint64_t ccg_rank(std::span<const unsigned> exponents) {
  if (exponents.empty()) throw InvalidArgument("ccg_rank: empty exponent list");
  unsigned smallest = std::numeric_limits<unsigned>::max();
  for (unsigned e : exponents) {
    if (e == 0) throw InvalidArgument("ccg_rank: exponents must be >= 1");
    smallest = std::min(smallest, e);
  }
  Integer product = 1;
  for (unsigned e : exponents) product *= e + 1;
  product /= smallest + 1;
  if (!product.fits_ulong_p()) throw InvalidArgument("ccg_rank: result overflows 64 bits");
  return product.get_ui();
}

ModReduction reduce_mod_k(const KInstance& inst) {
  std::vector<unsigned> reduced;
  std::vector<unsigned> cofactor;
  for (unsigned e : inst.monomial.exponents()) {
    reduced.push_back(e % inst.k);
    cofactor.push_back(e / inst.k);
  }
  return {Monomial(std::move(reduced)), Monomial(std::move(cofactor))};
}

std::vector<ResidueClass> residue_classes(unsigned n, unsigned k) {
  if (k < 2) throw InvalidArgument("residue_classes: k must be at least 2");
  std::vector<ResidueClass> out;
  std::vector<unsigned> cur(n + 1, 0);
  // Enumerate non-decreasing tuples in lexicographic order.
  while (true) {
    unsigned sum = 0;
    for (unsigned r : cur) sum += r;
    if (sum % k == 0) out.push_back(ResidueClass{cur});
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == k - 1) --i;
    if (i == 0) break;
    const unsigned next = cur[i - 1] + 1;
    for (std::size_t j = i - 1; j < cur.size(); ++j) cur[j] = next;
  }
  return out;
}

unsigned lower_bound(const KInstance& inst) {
  if (is_pure_power(inst.monomial, inst.k)) return 1;
  return inst.k == 2 ? 2 : 3;
}

std::pair<unsigned, std::vector<RuleRecord>> upper_bound(const KInstance& inst) {
  const unsigned k = inst.k;
  const Monomial& m = inst.monomial;
  std::vector<RuleRecord> trace;

  if (is_pure_power(m, k)) {
    trace.push_back(record("pure-power", "a pure k-th power N^k is a single k-th power",
                           BoundKind::upper, 1, Construction::pure_power));
    return {1, trace};
  }

  const std::vector<unsigned> stripped = nonzero_sorted(m);
  std::vector<unsigned> residues;
  for (unsigned e : stripped) {
    if (e % k != 0) residues.push_back(e % k);
  }
  unsigned residue_degree = 0;
  for (unsigned r : residues) residue_degree += r;

  if (k == 2) {
    trace.push_back(record("two-squares", "XY = ((X+Y)/2)^2 + (i(X-Y)/2)^2",
                           BoundKind::upper, 2, Construction::two_square));
  }
  if (m.degree() == k) {
    const auto r = static_cast<unsigned>(ccg_rank(stripped));
    trace.push_back(record("linear-forms",
                           "d = 1: k-th rank is the Waring rank prod(a_i+1)/(a_0+1)",
                           BoundKind::upper, r, Construction::linear_forms));
  } else if (residues.size() == 2 && stripped.size() == 2) {
    trace.push_back(record("binary-residue",
                           "binary: rank <= max(a_0 mod k, a_1 mod k) + 1",
                           BoundKind::upper, *std::max_element(residues.begin(), residues.end()) + 1,
                           Construction::linear_forms));
  } else if (residue_degree == k) {
    const auto r = ccg_rank(residues);
    if (r <= std::numeric_limits<unsigned>::max()) {
      trace.push_back(record("reduced-linear-forms",
                             "rank(M) <= rank([M]) with deg [M] = k, Waring rank of [M]",
                             BoundKind::upper, static_cast<unsigned>(r), Construction::linear_forms));
    }
  }

  if (k == 3) {
    static const std::vector<std::vector<unsigned>> xy2_classes = {
        {2, 2, 2}, {1, 1, 2, 2}, {1, 2, 2, 2, 2}};
    std::vector<unsigned> sorted_res = residues;
    std::sort(sorted_res.begin(), sorted_res.end());
    if (std::find(xy2_classes.begin(), xy2_classes.end(), sorted_res) != xy2_classes.end()) {
      trace.push_back(record("cubic-grouping", "[M] groups as X*Y^2 and X*Y^2 has cubic rank 3",
                             BoundKind::upper, 3, Construction::grouping_xy2));
    }
    if (sorted_res == std::vector<unsigned>{1, 1, 1} && m.degree() > 3) {
      const bool has_big = std::any_of(stripped.begin(), stripped.end(),
                                       [](unsigned e) { return e % 3 == 1 && e >= 4; });
      if (has_big) {
        trace.push_back(record("cubic-x0^4x1x2",
                               "M = N^3 * x_a^4 x_b x_c and x0^4 x1 x2 is a sum of three cubes",
                               BoundKind::upper, 3, Construction::x04x1x2_route));
      }
    }
  }

  const unsigned generic = k >= 32 ? std::numeric_limits<unsigned>::max() : (1U << (k - 1));
  trace.push_back(record("product-bound",
                         "X_1...X_k is a sum of 2^(k-1) k-th powers; M is a grouped specialization of it",
                         BoundKind::upper, generic, Construction::product_linear));

  unsigned best = generic;
  for (const auto& r : trace) best = std::min(best, r.bound);
  return {best, trace};
}

RankBounds classify(const KInstance& raw) {
  const KInstance inst = make_instance(raw.monomial, raw.k);
  RankBounds out;
  auto [upper, trace] = upper_bound(inst);
  const std::vector<unsigned> stripped = nonzero_sorted(inst.monomial);

  std::vector<RuleRecord> lowers;
  if (is_pure_power(inst.monomial, inst.k)) {
    lowers.push_back(record("pure-power", "every non-zero form has rank at least 1", BoundKind::lower, 1));
  } else {
    lowers.push_back(record("rank-two-dichotomy",
                            inst.k == 2 ? "k = 2: a non-square is not a single square"
                                        : "rank 2 occurs only for k = 2; non-powers need at least 3",
                            BoundKind::lower, inst.k == 2 ? 2 : 3));
    if (inst.monomial.degree() == inst.k) {
      lowers.push_back(record("linear-forms",
                              "d = 1: k-th rank is the Waring rank prod(a_i+1)/(a_0+1)",
                              BoundKind::lower, static_cast<unsigned>(ccg_rank(stripped))));
    }
    if (inst.k == 4 && in_k4_fact_table(stripped)) {
      lowers.push_back(record("computed-k4", "computed: x0 x1^3, x0 x1^7 and x0^3 x1^5 have 4th rank 4",
                              BoundKind::lower, 4));
    }
  }
  unsigned lower = 0;
  for (const auto& r : lowers) lower = std::max(lower, r.bound);

  if (lower > upper) throw Error("classify: inconsistent bounds for " + to_text(inst.monomial));
  out.lower = lower;
  out.upper = upper;
  out.exact = lower == upper;
  out.trace = std::move(lowers);
  out.trace.insert(out.trace.end(), trace.begin(), trace.end());
  return out;
}

unsigned compare_bounds(unsigned n) {
  if (n == 0) throw InvalidArgument("compare_bounds: n must be >= 1");
  auto holds = [n](unsigned k) {
    Integer lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), 2, k - 1);
    Integer rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), k, n);
    return lhs <= rhs;
  };
  // 2^(k-1)/k^n grows once 2 k^n > (k+1)^n, and that condition persists for
  // larger k; past that point the first failure is final.
  auto ratio_increasing = [n](unsigned k) {
    Integer a;
    mpz_ui_pow_ui(a.get_mpz_t(), k, n);
    Integer b;
    mpz_ui_pow_ui(b.get_mpz_t(), k + 1, n);
    return 2 * a > b;
  };
  unsigned best = 1;
  for (unsigned k = 1;; ++k) {
    if (holds(k)) {
      best = k;
    } else if (ratio_increasing(k)) {
      return best;
    }
  }
}

const RuleRecord& decisive_upper_rule(const RankBounds& bounds) {
  for (const auto& r : bounds.trace) {
    if (r.kind == BoundKind::upper && r.bound == bounds.upper) return r;
  }
  throw Error("decisive_upper_rule: no upper rule attains the bound");
}

std::string render_trace(const std::vector<RuleRecord>& trace) {
  std::size_t w_rule = 4;
  std::size_t w_stmt = 9;
  for (const auto& r : trace) {
    w_rule = std::max(w_rule, r.rule.size() + 8);
    w_stmt = std::max(w_stmt, r.statement.size());
  }
  std::ostringstream os;
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    os << a << std::string(w_rule - a.size(), ' ') << " | " << b << std::string(w_stmt - b.size(), ' ')
       << " | " << c << '\n';
  };
  row("rule", "statement", "bound");
  os << std::string(w_rule, '-') << "-+-" << std::string(w_stmt, '-') << "-+------\n";
  for (const auto& r : trace) {
    row(r.rule + (r.kind == BoundKind::lower ? " (lower)" : " (upper)"), r.statement,
        std::to_string(r.bound));
  }
  return os.str();
}

std::string summary(const RankBounds& bounds) {
  if (bounds.exact) return "exact " + std::to_string(bounds.upper);
  return "bounds [" + std::to_string(bounds.lower) + "," + std::to_string(bounds.upper) + "] (open)";
}

}  // namespace waring
