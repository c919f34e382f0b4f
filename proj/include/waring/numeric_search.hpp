#ifndef WARING_NUMERIC_SEARCH_HPP
#define WARING_NUMERIC_SEARCH_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "waring/certificate.hpp"
#include "waring/monomial.hpp"

namespace waring {

using Complex = std::complex<double>;

/// Find s forms G_1..G_s of degree d with sum G_j^k = target.
///
/// Parameter layout: s consecutive blocks, block j holding the coefficients
/// of G_j on monomials_of_degree(num_variables, d) (grlex order).
struct SearchProblem {
  Monomial target;
  unsigned k = 2;
  unsigned s = 1;
  unsigned d = 1;
  std::size_t num_variables = 0;

  std::size_t block_size() const;
  std::size_t parameter_count() const { return s * block_size(); }
};

/// Throws InvalidArgument unless k >= 1 divides deg(target) and s >= 1.
SearchProblem make_search_problem(const Monomial& target, unsigned k, unsigned s);

/// Sum of squared moduli of the coefficients of sum_j G_j^k - target.
double residual(std::span<const Complex> params, const SearchProblem& problem);

/// Gradient of residual() with the real and imaginary part of every
/// parameter treated as independent real variables: entry j is
/// d f / d Re p_j + i d f / d Im p_j. Moving against it decreases the
/// residual. With J the (holomorphic) Jacobian of the coefficient map and r
/// the mismatch vector this equals 2 J^H r.
std::vector<Complex> gradient(std::span<const Complex> params, const SearchProblem& problem);

struct SearchOptions {
  unsigned restarts = 50;
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  unsigned max_iterations = 500;
  unsigned stagnation_window = 25;
  double stagnation_improvement = 1e-14;
  unsigned threads = 1;
};

struct SearchResult {
  double best_residual = 0.0;
  std::vector<Complex> best_params;
  bool converged = false;
  unsigned restarts_used = 0;
  unsigned best_restart = 0;
};

/// Multi-start damped least squares (Levenberg-Marquardt with backtracking).
///
/// Restart r starts from coefficients with real and imaginary parts drawn
/// uniformly from [-1, 1] and scaled by 1/(1+d), using a generator seeded
/// from (seed, r) alone, so results are reproducible and a run with more
/// restarts extends a run with fewer. A restart stops after max_iterations,
/// when the residual improves by less than stagnation_improvement over
/// stagnation_window iterations, or once it is far below the tolerance.
/// The search stops early at the first converged restart. Restarts may run
/// on several threads; the best is the minimum residual, ties broken by the
/// lower restart index.
SearchResult search(const SearchProblem& problem, const SearchOptions& options);

struct ProbeRow {
  unsigned s = 0;
  bool converged = false;
  double best_residual = 0.0;
  unsigned restarts_used = 0;
};

/// Search outcomes for s from lower_bound to classify().upper. Purely
/// heuristic: a failed search proves nothing about the rank.
struct ProbeReport {
  Monomial monomial;
  unsigned k = 2;
  double tolerance = 0.0;
  bool heuristic = true;
  std::vector<ProbeRow> rows;
};

ProbeReport probe_open_case(const Monomial& monomial, unsigned k, const SearchOptions& options);

/// Parameters reproducing a certificate numerically, generators sent to the
/// given roots. Each scalar is absorbed into its form through a k-th root.
std::vector<Complex> certificate_parameters(const Certificate& cert,
                                            std::span<const Complex> generator_values);

std::string to_text(const SearchResult& result, const SearchProblem& problem);
std::string to_json(const SearchResult& result, const SearchProblem& problem);
std::string to_text(const ProbeReport& report);
std::string to_json(const ProbeReport& report);

}  // namespace waring

#endif  // WARING_NUMERIC_SEARCH_HPP
