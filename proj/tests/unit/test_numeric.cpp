#include <gtest/gtest.h>

#include <json.hpp>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "waring/constructions.hpp"
#include "waring/decompose.hpp"
#include "waring/error.hpp"
#include "waring/numeric_search.hpp"

namespace waring {
namespace {

using testing::Gen;

std::vector<Complex> random_params(Gen& gen, const SearchProblem& p) {
  std::vector<Complex> x(p.parameter_count());
  for (auto& v : x) v = gen.complex_unit();
  return x;
}

/// Central differences on the real and imaginary parts separately.
std::vector<Complex> finite_difference_gradient(std::vector<Complex> x, const SearchProblem& p) {
  std::vector<Complex> g(x.size());
  const double h = 1e-6;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex orig = x[i];
    double parts[2];
    for (int part = 0; part < 2; ++part) {
      const Complex dir = part == 0 ? Complex(h, 0) : Complex(0, h);
      x[i] = orig + dir;
      const double plus = residual(x, p);
      x[i] = orig - dir;
      const double minus = residual(x, p);
      parts[part] = (plus - minus) / (2 * h);
    }
    x[i] = orig;
    g[i] = {parts[0], parts[1]};
  }
  return g;
}

double norm(const std::vector<Complex>& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

TEST(SearchProblem, Shape) {
  const SearchProblem p = make_search_problem(Monomial{4, 1, 1}, 3, 3);
  EXPECT_EQ(p.d, 2U);
  EXPECT_EQ(p.num_variables, 3U);
  EXPECT_EQ(p.block_size(), 6U);
  EXPECT_EQ(p.parameter_count(), 18U);
  EXPECT_THROW(make_search_problem(Monomial{1, 1}, 3, 1), InvalidArgument);
  EXPECT_THROW(make_search_problem(Monomial{1, 2}, 3, 0), InvalidArgument);
  EXPECT_THROW(residual(std::vector<Complex>(3), p), InvalidArgument);
}

TEST(Residual, ZeroParametersLeaveTheTarget) {
  const SearchProblem p = make_search_problem(Monomial{1, 1}, 2, 2);
  EXPECT_EQ(residual(std::vector<Complex>(p.parameter_count()), p), 1.0);
}

TEST(Residual, ExactCertificatesHaveNegligibleResidual) {
  const Certificate c = special_x04x1x2();
  const SearchProblem p = make_search_problem(c.target, c.k, static_cast<unsigned>(c.size()));
  const auto x = certificate_parameters(c, c.tower->numeric_roots());
  EXPECT_LT(residual(x, p), 1e-20);
}

TEST(Residual, ConsistentWithEveryDecomposition) {
  for (unsigned k : {2U, 3U, 4U}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (unsigned deg = k; deg <= 12; deg += k) {
        for (const auto& m : testing::all_monomials(n, deg)) {
          const Certificate c = decompose(make_instance(m, k));
          const SearchProblem p = make_search_problem(m, k, static_cast<unsigned>(c.size()));
          std::vector<std::size_t> choice(c.tower->generator_count(), 1);
          for (const auto& roots : {c.tower->numeric_roots(), c.tower->numeric_roots(choice)}) {
            EXPECT_LT(residual(certificate_parameters(c, roots), p), 1e-12) << to_text(m) << " k=" << k;
          }
        }
      }
    }
  }
}

TEST(Gradient, MatchesCentralDifferences) {
  Gen gen(51);
  for (int t = 0; t < 100; ++t) {
    const unsigned k = static_cast<unsigned>(gen.integer(2, 4));
    const unsigned d = static_cast<unsigned>(gen.integer(1, 3));
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const unsigned s = static_cast<unsigned>(gen.integer(1, 4));
    const SearchProblem p = make_search_problem(gen.monomial_of_degree(n, k * d), k, s);
    const auto x = random_params(gen, p);
    const auto g = gradient(x, p);
    const auto fd = finite_difference_gradient(x, p);
    std::vector<Complex> diff(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) diff[i] = g[i] - fd[i];
    EXPECT_LT(norm(diff) / std::max(norm(fd), 1e-12), 1e-6) << "trial " << t;
  }
}

TEST(Gradient, IsADescentDirection) {
  Gen gen(52);
  for (int t = 0; t < 30; ++t) {
    const SearchProblem p = make_search_problem(gen.monomial_of_degree(3, 6), 3, 2);
    auto x = random_params(gen, p);
    const auto g = gradient(x, p);
    const double before = residual(x, p);
    const double h = 1e-4 / std::max(1.0, norm(g));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= h * g[i];
    EXPECT_LT(residual(x, p), before);
  }
}

TEST(Search, FindsKnownDecompositions) {
  SearchOptions opt;
  const SearchResult a = search(make_search_problem(Monomial{4, 1, 1}, 3, 3), opt);
  EXPECT_TRUE(a.converged);
  EXPECT_LT(a.best_residual, 1e-10);
  const SearchResult b = search(make_search_problem(Monomial{2, 2}, 4, 3), opt);
  EXPECT_TRUE(b.converged);
}

TEST(Search, SoundnessOfSuccess) {
  const SearchProblem p = make_search_problem(Monomial{2, 2}, 4, 3);
  const SearchResult r = search(p, SearchOptions{});
  ASSERT_TRUE(r.converged);
  EXPECT_LT(residual(r.best_params, p), 1e-10);
  EXPECT_EQ(residual(r.best_params, p), r.best_residual);
}

TEST(Search, NoRankTwoCubicForTheTernaryProduct) {
  // x0 x1 x2 has border rank above two, so no sequence of two cubes of
  // linear forms approaches it.
  SearchOptions opt;
  opt.restarts = 100;
  const SearchResult r = search(make_search_problem(Monomial{1, 1, 1}, 3, 2), opt);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.best_residual, 1e-3);
  EXPECT_EQ(r.restarts_used, 100U);
}

TEST(Search, DeterministicAndThreadIndependent) {
  const SearchProblem p = make_search_problem(Monomial{1, 1, 1}, 3, 3);
  SearchOptions opt;
  opt.restarts = 12;
  opt.seed = 7;
  const SearchResult a = search(p, opt), b = search(p, opt);
  opt.threads = 4;
  const SearchResult c = search(p, opt);
  for (const SearchResult* r : {&b, &c}) {
    EXPECT_EQ(a.best_residual, r->best_residual);
    EXPECT_EQ(a.best_params, r->best_params);
    EXPECT_EQ(a.converged, r->converged);
    EXPECT_EQ(a.restarts_used, r->restarts_used);
    EXPECT_EQ(a.best_restart, r->best_restart);
  }
}

TEST(Search, BestResidualIsMonotoneInRestarts) {
  const SearchProblem p = make_search_problem(Monomial{1, 1, 1, 1, 2}, 3, 3);
  SearchOptions opt;
  opt.max_iterations = 60;
  double previous = std::numeric_limits<double>::infinity();
  for (unsigned r = 1; r <= 6; ++r) {
    opt.restarts = r;
    const double now = search(p, opt).best_residual;
    EXPECT_LE(now, previous);
    previous = now;
  }
}

TEST(Search, RejectsBadOptions) {
  const SearchProblem p = make_search_problem(Monomial{1, 1}, 2, 2);
  SearchOptions opt;
  opt.restarts = 0;
  EXPECT_THROW(search(p, opt), InvalidArgument);
  opt.restarts = 1;
  opt.tolerance = 0;
  EXPECT_THROW(search(p, opt), InvalidArgument);
}

TEST(Probe, Reports) {
  SearchOptions opt;
  const ProbeReport cube = probe_open_case(Monomial{3, 6}, 3, opt);
  ASSERT_EQ(cube.rows.size(), 1U);
  EXPECT_EQ(cube.rows[0].s, 1U);
  EXPECT_TRUE(cube.rows[0].converged);

  opt.restarts = 20;
  const ProbeReport open = probe_open_case(Monomial{3, 1, 1, 1}, 3, opt);
  EXPECT_TRUE(open.heuristic);
  ASSERT_EQ(open.rows.size(), 2U);
  EXPECT_EQ(open.rows[0].s, 3U);
  EXPECT_EQ(open.rows[1].s, 4U);
  EXPECT_TRUE(open.rows[1].converged);
}

TEST(Reports, TextAndJson) {
  const SearchProblem p = make_search_problem(Monomial{1, 1}, 2, 2);
  const SearchResult r = search(p, SearchOptions{});
  const auto j = nlohmann::json::parse(to_json(r, p));
  EXPECT_EQ(j.at("k"), 2);
  EXPECT_EQ(j.at("s"), 2);
  EXPECT_EQ(j.at("converged"), true);
  EXPECT_TRUE(j.at("best_residual").is_number());
  EXPECT_NE(to_text(r, p).find("converged: true"), std::string::npos);

  SearchOptions opt;
  opt.restarts = 3;
  const ProbeReport rep = probe_open_case(Monomial{1, 2}, 3, opt);
  const auto pj = nlohmann::json::parse(to_json(rep));
  EXPECT_EQ(pj.at("heuristic"), true);
  EXPECT_EQ(pj.at("rows").size(), rep.rows.size());
}

}  // namespace
}  // namespace waring
