#include "waring/numeric_search.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "waring/error.hpp"
#include "waring/rank_rules.hpp"

namespace waring {

namespace {

// Index tables for products of dense homogeneous polynomials.
struct Layout {
  std::vector<Monomial> form_basis;                   // degree d
  std::vector<std::vector<Monomial>> basis;           // basis[j]: degree j*d, j = 0..k
  std::vector<std::vector<std::size_t>> mul;          // mul[j][beta * B + alpha] -> index in basis[j+1]
  std::size_t target_index = 0;

  explicit Layout(const SearchProblem& p) {
    form_basis = monomials_of_degree(p.num_variables, p.d);
    const std::size_t b = form_basis.size();
    for (unsigned j = 0; j <= p.k; ++j) basis.push_back(monomials_of_degree(p.num_variables, j * p.d));
    for (unsigned j = 0; j < p.k; ++j) {
      std::map<Monomial, std::size_t> index;
      for (std::size_t i = 0; i < basis[j + 1].size(); ++i) index.emplace(basis[j + 1][i], i);
      std::vector<std::size_t> table(basis[j].size() * b);
      for (std::size_t beta = 0; beta < basis[j].size(); ++beta) {
        for (std::size_t alpha = 0; alpha < b; ++alpha) {
          table[beta * b + alpha] = index.at(basis[j][beta] * form_basis[alpha]);
        }
      }
      mul.push_back(std::move(table));
    }
    const auto& top = basis[p.k];
    target_index = static_cast<std::size_t>(std::find(top.begin(), top.end(), p.target) - top.begin());
  }

  std::size_t rows() const { return basis.back().size(); }
};

// powers[j] = G^j as dense coefficients over basis[j].
std::vector<std::vector<Complex>> form_powers(const Layout& layout, std::span<const Complex> g, unsigned k) {
  const std::size_t b = layout.form_basis.size();
  std::vector<std::vector<Complex>> powers(k + 1);
  powers[0] = {Complex(1.0)};
  for (unsigned j = 0; j < k; ++j) {
    powers[j + 1].assign(layout.basis[j + 1].size(), Complex(0.0));
    const auto& table = layout.mul[j];
    for (std::size_t beta = 0; beta < powers[j].size(); ++beta) {
      const Complex c = powers[j][beta];
      if (c == Complex(0.0)) continue;
      for (std::size_t alpha = 0; alpha < b; ++alpha) powers[j + 1][table[beta * b + alpha]] += c * g[alpha];
    }
  }
  return powers;
}

void check_dimension(std::span<const Complex> params, const SearchProblem& problem) {
  if (params.size() != problem.parameter_count()) {
    throw InvalidArgument("parameter vector has " + std::to_string(params.size()) + " entries, expected " +
                          std::to_string(problem.parameter_count()));
  }
}

Eigen::VectorXcd mismatch(const Layout& layout, std::span<const Complex> params, const SearchProblem& p) {
  const std::size_t b = layout.form_basis.size();
  Eigen::VectorXcd r = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(layout.rows()));
  for (unsigned j = 0; j < p.s; ++j) {
    const auto powers = form_powers(layout, params.subspan(j * b, b), p.k);
    for (std::size_t i = 0; i < powers[p.k].size(); ++i) r[static_cast<Eigen::Index>(i)] += powers[p.k][i];
  }
  r[static_cast<Eigen::Index>(layout.target_index)] -= 1.0;
  return r;
}

// Holomorphic Jacobian of the coefficient map together with the mismatch.
void mismatch_and_jacobian(const Layout& layout, std::span<const Complex> params, const SearchProblem& p,
                           Eigen::VectorXcd& r, Eigen::MatrixXcd& jac) {
  const std::size_t b = layout.form_basis.size();
  const auto rows = static_cast<Eigen::Index>(layout.rows());
  r = Eigen::VectorXcd::Zero(rows);
  jac = Eigen::MatrixXcd::Zero(rows, static_cast<Eigen::Index>(p.parameter_count()));
  const auto& table = layout.mul[p.k - 1];
  for (unsigned j = 0; j < p.s; ++j) {
    const auto powers = form_powers(layout, params.subspan(j * b, b), p.k);
    for (std::size_t i = 0; i < powers[p.k].size(); ++i) r[static_cast<Eigen::Index>(i)] += powers[p.k][i];
    // d(G^k)/d g_alpha = k G^{k-1} x^alpha
    const auto& prev = powers[p.k - 1];
    for (std::size_t beta = 0; beta < prev.size(); ++beta) {
      const Complex c = static_cast<double>(p.k) * prev[beta];
      if (c == Complex(0.0)) continue;
      for (std::size_t alpha = 0; alpha < b; ++alpha) {
        jac(static_cast<Eigen::Index>(table[beta * b + alpha]), static_cast<Eigen::Index>(j * b + alpha)) += c;
      }
    }
  }
  r[static_cast<Eigen::Index>(layout.target_index)] -= 1.0;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Complex> initial_point(const SearchProblem& p, std::uint64_t seed, unsigned restart) {
  std::uint64_t state = seed ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(restart) + 1));
  const double scale = 1.0 / (1.0 + p.d);
  auto uniform = [&] {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return (2.0 * u - 1.0) * scale;
  };
  std::vector<Complex> out(p.parameter_count());
  for (auto& c : out) {
    const double re = uniform();
    const double im = uniform();
    c = Complex(re, im);
  }
  return out;
}

struct RestartOutcome {
  double residual = 0.0;
  std::vector<Complex> params;
};

RestartOutcome run_restart(const Layout& layout, const SearchProblem& p, const SearchOptions& opt,
                           unsigned restart) {
  std::vector<Complex> x = initial_point(p, opt.seed, restart);
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::VectorXcd r;
  Eigen::MatrixXcd jac;
  mismatch_and_jacobian(layout, x, p, r, jac);
  double f = r.squaredNorm();
  double mu = -1.0;
  std::vector<double> history{f};
  const double stop_at = opt.tolerance * 1e-4;

  for (unsigned it = 0; it < opt.max_iterations && f > stop_at; ++it) {
    const Eigen::MatrixXcd normal = jac.adjoint() * jac;
    const Eigen::VectorXcd grad = jac.adjoint() * r;
    if (mu < 0.0) {
      const double dmax = normal.diagonal().real().maxCoeff();
      mu = dmax > 0.0 ? 1e-3 * dmax : 1e-3;
    }
    bool accepted = false;
    std::vector<Complex> trial(x.size());
    for (int attempt = 0; attempt < 30; ++attempt) {
      Eigen::MatrixXcd damped = normal;
      damped.diagonal().array() += mu;
      const Eigen::VectorXcd step = damped.ldlt().solve(-grad);
      for (Eigen::Index i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + step[i];
      Eigen::VectorXcd r_trial;
      Eigen::MatrixXcd jac_trial;
      mismatch_and_jacobian(layout, trial, p, r_trial, jac_trial);
      const double f_trial = r_trial.squaredNorm();
      if (std::isfinite(f_trial) && f_trial < f) {
        x.swap(trial);
        r = std::move(r_trial);
        jac = std::move(jac_trial);
        f = f_trial;
        mu = std::max(mu / 3.0, 1e-20);
        accepted = true;
        break;
      }
      mu *= 4.0;
      if (!std::isfinite(mu) || mu > 1e30) break;
    }
    if (!accepted) break;
    history.push_back(f);
    if (history.size() > opt.stagnation_window &&
        history[history.size() - 1 - opt.stagnation_window] - f < opt.stagnation_improvement) {
      break;
    }
  }
  return {f, std::move(x)};
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

}  // namespace

std::size_t SearchProblem::block_size() const {
  return static_cast<std::size_t>(binomial(static_cast<unsigned>(num_variables + d - 1), d).get_ui());
}

SearchProblem make_search_problem(const Monomial& target, unsigned k, unsigned s) {
  if (k < 2) throw InvalidArgument("search: k must be at least 2");
  if (s < 1) throw InvalidArgument("search: s must be at least 1");
  if (target.size() == 0) throw InvalidArgument("search: target needs at least one variable");
  if (target.degree() % k != 0) throw InvalidArgument("search: k does not divide the target degree");
  return SearchProblem{target, k, s, target.degree() / k, target.size()};
}

double residual(std::span<const Complex> params, const SearchProblem& problem) {
  check_dimension(params, problem);
  const Layout layout(problem);
  return mismatch(layout, params, problem).squaredNorm();
}

std::vector<Complex> gradient(std::span<const Complex> params, const SearchProblem& problem) {
  check_dimension(params, problem);
  const Layout layout(problem);
  Eigen::VectorXcd r;
  Eigen::MatrixXcd jac;
  mismatch_and_jacobian(layout, params, problem, r, jac);
  const Eigen::VectorXcd g = 2.0 * (jac.adjoint() * r);
  return {g.data(), g.data() + g.size()};
}

SearchResult search(const SearchProblem& problem, const SearchOptions& options) {
  if (options.restarts < 1) throw InvalidArgument("search: restarts must be >= 1");
  if (!(options.tolerance > 0.0)) throw InvalidArgument("search: tolerance must be positive");
  const Layout layout(problem);
  const unsigned threads = std::max(1U, options.threads);

  SearchResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  std::vector<RestartOutcome> batch;
  for (unsigned first = 0; first < options.restarts; first += threads) {
    const unsigned count = std::min(threads, options.restarts - first);
    batch.assign(count, {});
    if (count == 1) {
      batch[0] = run_restart(layout, problem, options, first);
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < count; ++t) {
        workers.emplace_back([&, t] { batch[t] = run_restart(layout, problem, options, first + t); });
      }
    }
    for (unsigned t = 0; t < count; ++t) {
      result.restarts_used = first + t + 1;
      if (batch[t].residual < result.best_residual) {
        result.best_residual = batch[t].residual;
        result.best_params = std::move(batch[t].params);
        result.best_restart = first + t;
      }
      if (batch[t].residual < options.tolerance) {
        result.converged = true;
        return result;
      }
    }
  }
  return result;
}

ProbeReport probe_open_case(const Monomial& monomial, unsigned k, const SearchOptions& options) {
  const KInstance inst = make_instance(monomial, k);
  const unsigned lo = lower_bound(inst);
  const unsigned hi = classify(inst).upper;
  ProbeReport report{monomial, k, options.tolerance, true, {}};
  for (unsigned s = lo; s <= hi; ++s) {
    const SearchResult r = search(make_search_problem(monomial, k, s), options);
    report.rows.push_back({s, r.converged, r.best_residual, r.restarts_used});
  }
  return report;
}

std::vector<Complex> certificate_parameters(const Certificate& cert, std::span<const Complex> generator_values) {
  const SearchProblem p = make_search_problem(cert.target, cert.k, static_cast<unsigned>(cert.summands.size()));
  const std::vector<Monomial> basis = monomials_of_degree(p.num_variables, p.d);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::vector<Complex> out(p.parameter_count(), Complex(0.0));
  for (std::size_t j = 0; j < cert.summands.size(); ++j) {
    const auto& s = cert.summands[j];
    const Complex root = std::pow(s.scalar.evaluate(generator_values), 1.0 / cert.k);
    for (const auto& [m, c] : s.form.terms()) {
      out[j * basis.size() + index.at(m)] = root * c.evaluate(generator_values);
    }
  }
  return out;
}

std::string to_text(const SearchResult& result, const SearchProblem& problem) {
  std::ostringstream os;
  os << "target: " << to_text(problem.target) << '\n'
     << "k: " << problem.k << '\n'
     << "s: " << problem.s << '\n'
     << "d: " << problem.d << '\n'
     << "converged: " << (result.converged ? "true" : "false") << '\n'
     << "best_residual: " << fmt_double(result.best_residual) << '\n'
     << "restarts_used: " << result.restarts_used << '\n'
     << "best_restart: " << result.best_restart << '\n';
  const auto basis = monomials_of_degree(problem.num_variables, problem.d);
  for (std::size_t j = 0; j < problem.s && !result.best_params.empty(); ++j) {
    os << "form " << j + 1 << ":";
    for (std::size_t a = 0; a < basis.size(); ++a) {
      const Complex c = result.best_params[j * basis.size() + a];
      os << " (" << fmt_double(c.real()) << "," << fmt_double(c.imag()) << ")*" << to_text(basis[a]);
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const SearchResult& result, const SearchProblem& problem) {
  nlohmann::ordered_json j;
  j["target"] = problem.target.exponents();
  j["k"] = problem.k;
  j["s"] = problem.s;
  j["d"] = problem.d;
  j["converged"] = result.converged;
  j["best_residual"] = result.best_residual;
  j["restarts_used"] = result.restarts_used;
  j["best_restart"] = result.best_restart;
  auto params = nlohmann::ordered_json::array();
  for (const auto& c : result.best_params) params.push_back({c.real(), c.imag()});
  j["params"] = params;
  return j.dump(2) + "\n";
}

std::string to_text(const ProbeReport& report) {
  std::ostringstream os;
  os << "target: " << to_text(report.monomial) << '\n'
     << "k: " << report.k << '\n'
     << "tolerance: " << fmt_double(report.tolerance) << '\n'
     << "heuristic: true (a search that does not converge proves nothing)\n"
     << "s | converged | best_residual | restarts\n";
  for (const auto& row : report.rows) {
    os << row.s << " | " << (row.converged ? "yes" : "no ") << "       | " << fmt_double(row.best_residual)
       << "  | " << row.restarts_used << '\n';
  }
  return os.str();
}

std::string to_json(const ProbeReport& report) {
  nlohmann::ordered_json j;
  j["target"] = report.monomial.exponents();
  j["k"] = report.k;
  j["tolerance"] = report.tolerance;
  j["heuristic"] = report.heuristic;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"s", r.s}, {"converged", r.converged}, {"best_residual", r.best_residual},
                    {"restarts_used", r.restarts_used}});
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace waring
