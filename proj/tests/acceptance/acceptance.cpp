// Acceptance suite: one PASS/FAIL line per criterion, with indented detail
// lines underneath. Exit status is non-zero if any criterion fails.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "waring/certificate_io.hpp"
#include "waring/cli.hpp"
#include "waring/constructions.hpp"
#include "waring/decompose.hpp"
#include "waring/numeric_search.hpp"
#include "waring/rank_rules.hpp"

namespace {

using namespace waring;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      details.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1. Rank formula values, each under a millisecond.
Outcome rank_formula() {
  Outcome o;
  std::vector<std::pair<std::vector<unsigned>, unsigned>> cases{{{1, 1, 1}, 4}, {{1, 2}, 3}};
  for (unsigned k = 2; k <= 10; ++k) cases.push_back({{1, k - 1}, k});
  double worst = 0;
  for (const auto& [e, want] : cases) {
    const auto t0 = Clock::now();
    const auto got = ccg_rank(e);
    worst = std::max(worst, seconds_since(t0));
    std::ostringstream s;
    for (unsigned x : e) s << x << ' ';
    o.require(got == want, "ccg_rank(" + s.str() + ") = " + std::to_string(got) + ", expected " + std::to_string(want));
  }
  o.require(worst < 1e-3, "slowest call took " + fmt(worst) + " s");
  o.note(std::to_string(cases.size()) + " values, slowest " + fmt(worst * 1e6) + " us");
  return o;
}

// 2. Averaging decomposition for every tuple with <= 4 parts, entries <= 3.
Outcome ccg_oracle() {
  Outcome o;
  const auto t0 = Clock::now();
  int count = 0;
  for (std::size_t parts = 1; parts <= 4; ++parts) {
    std::vector<unsigned> e(parts, 1);
    while (true) {
      const Certificate c = ccg_linear_decomp(e);
      Certificate copy = c;
      o.require(verify(copy), "tuple of " + std::to_string(parts) + " parts failed verification");
      o.require(c.size() == ccg_rank(e) && c.size() == testing::ccg_rank_oracle(e), "summand count differs from rank");
      ++count;
      std::size_t i = 0;
      while (i < e.size() && ++e[i] == 4) e[i++] = 1;
      if (i == e.size()) break;
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60, "took " + fmt(secs) + " s");
  o.note(std::to_string(count) + " tuples verified in " + fmt(secs) + " s");
  return o;
}

// 3. Product of k linear forms with 2^(k-1) summands, 2 <= k <= 8.
Outcome product_identity() {
  Outcome o;
  for (unsigned k = 2; k <= 8; ++k) {
    const auto t0 = Clock::now();
    Certificate c = product_linear(k);
    const bool ok = verify(c);
    const double secs = seconds_since(t0);
    o.require(ok && c.size() == (1U << (k - 1)), "k=" + std::to_string(k));
    if (k == 8) {
      o.require(secs < 120, "k=8 took " + fmt(secs) + " s");
      o.note("k=8: 128 summands verified in " + fmt(secs) + " s");
    }
  }
  return o;
}

// 4. k = 2: every non-square monomial in two or three variables, degree <= 12.
Outcome k2_completeness() {
  Outcome o;
  int count = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (unsigned deg = 2; deg <= 12; deg += 2) {
      for (const auto& m : testing::all_monomials(n, deg)) {
        if (testing::is_kth_power(m, 2)) continue;
        const KInstance inst = make_instance(m, 2);
        const RankBounds b = classify(inst);
        Certificate c = decompose(inst);
        o.require(b.exact && b.upper == 2, to_text(m) + ": " + summary(b));
        o.require(c.size() == 2 && check(c), to_text(m) + ": certificate");
        ++count;
      }
    }
  }
  o.note(std::to_string(count) + " non-square monomials");
  return o;
}

std::vector<Certificate> binary_cubic_certificates(Outcome& o) {
  std::vector<Certificate> certs;
  for (unsigned deg = 3; deg <= 30; deg += 3) {
    for (const auto& m : testing::all_monomials(2, deg)) {
      const KInstance inst = make_instance(m, 3);
      const RankBounds b = classify(inst);
      const unsigned want = testing::is_kth_power(m, 3) ? 1 : 3;
      o.require(b.exact && b.upper == want, to_text(m) + ": " + summary(b));
      Certificate c = decompose(inst);
      o.require(c.size() == want && check(c), to_text(m) + ": certificate");
      certs.push_back(std::move(c));
    }
  }
  return certs;
}

// 5. Binary cubics of degree <= 30.
Outcome binary_cubics() {
  Outcome o;
  const auto certs = binary_cubic_certificates(o);
  o.note(std::to_string(certs.size()) + " binary monomials");
  return o;
}

// 6. Ternary cubics of degree <= 18, and the three-cube certificate.
Outcome ternary_cubics() {
  Outcome o;
  int count = 0;
  for (unsigned deg = 3; deg <= 18; deg += 3) {
    for (const auto& m : testing::all_monomials(3, deg)) {
      const KInstance inst = make_instance(m, 3);
      const RankBounds b = classify(inst);
      const unsigned want = testing::cubic_rank_oracle(m);
      o.require(b.exact && b.upper == want, to_text(m) + ": " + summary(b));
      Certificate c = decompose(inst);
      o.require(c.size() == want && check(c), to_text(m) + ": certificate");
      ++count;
    }
  }
  const Certificate special = decompose(make_instance(Monomial{4, 1, 1}, 3));
  o.require(special.tower->names() == std::vector<std::string>{"u", "v"}, "x0^4 x1 x2 certificate not over (u, v)");
  o.require(check(special) && special.size() == 3, "x0^4 x1 x2 certificate");
  const Tower t = x04x1x2_tower();
  const RingElement u = RingElement::generator(t, 0), v = RingElement::generator(t, 1);
  const bool literal = check(x04x1x2_candidate(t, u, RingElement(t, Rational(-1, 6)), v));
  const bool corrected = check(x04x1x2_candidate(t, u, -u, v));
  o.require(!literal, "coefficient -1/6 unexpectedly verifies");
  o.require(corrected, "coefficient -sqrt(1/6) fails");
  o.note(std::to_string(count) + " ternary monomials; -1/6 fails, -sqrt(1/6) verifies");
  return o;
}

// 7. Binary quartic classes.
Outcome k4_binary() {
  Outcome o;
  const std::set<std::vector<unsigned>> facts{{1, 3}, {1, 7}, {3, 5}};
  int open = 0;
  for (unsigned deg = 4; deg <= 24; deg += 4) {
    for (const auto& m : testing::all_monomials(2, deg)) {
      const KInstance inst = make_instance(m, 4);
      const RankBounds b = classify(inst);
      std::vector<unsigned> res{m[0] % 4, m[1] % 4};
      std::sort(res.begin(), res.end());
      if (res == std::vector<unsigned>{2, 2}) {
        Certificate c = decompose(inst);
        o.require(b.exact && b.upper == 3 && c.size() == 3 && check(c), to_text(m) + ": " + summary(b));
      } else if (res == std::vector<unsigned>{1, 3}) {
        if (facts.contains(testing::stripped(m))) {
          Certificate c = decompose(inst);
          o.require(b.exact && b.upper == 4 && c.size() == 4 && check(c), to_text(m) + ": " + summary(b));
        } else {
          o.require(!b.exact && b.lower == 3 && b.upper == 4, to_text(m) + ": " + summary(b));
          ++open;
        }
      }
    }
  }
  o.note(std::to_string(open) + " open (1,3) monomials reported as [3,4]");
  return o;
}

// 8. Printed residue-class lists.
Outcome residue_lists() {
  Outcome o;
  using S = std::set<std::vector<unsigned>>;
  auto as_set = [](const std::vector<ResidueClass>& v) {
    S s;
    for (const auto& c : v) s.insert(c.residues);
    return s;
  };
  o.require(as_set(residue_classes(1, 4)) == S{{0, 0}, {1, 3}, {2, 2}}, "n=1 k=4");
  o.require(as_set(residue_classes(2, 3)) == S{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, "n=2 k=3");
  o.require(as_set(residue_classes(3, 3)) == S{{0, 0, 0, 0}, {0, 0, 1, 2}, {0, 1, 1, 1}, {0, 2, 2, 2}, {1, 1, 2, 2}},
            "n=3 k=3");
  return o;
}

// 9. Threshold of 2^(k-1) <= k^n against a full-scan big-integer oracle.
Outcome thresholds() {
  Outcome o;
  o.require(compare_bounds(2) == 6, "n=2 gives " + std::to_string(compare_bounds(2)));
  for (unsigned n : {3U, 10U}) {
    const unsigned got = compare_bounds(n), want = testing::compare_bounds_oracle(n);
    o.require(got == want, "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " + std::to_string(want));
    o.note("n=" + std::to_string(n) + ": " + std::to_string(got) + (n == 3 ? " (text states 9)" : " (text states 59)"));
  }
  return o;
}

// 10. Numeric search.
Outcome numeric_search() {
  Outcome o;
  testing::Gen gen(2024);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const unsigned k = static_cast<unsigned>(gen.integer(2, 4));
    const unsigned d = static_cast<unsigned>(gen.integer(1, 3));
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
    const unsigned s = static_cast<unsigned>(gen.integer(1, 4));
    const SearchProblem p = make_search_problem(gen.monomial_of_degree(n, k * d), k, s);
    std::vector<Complex> x(p.parameter_count());
    for (auto& v : x) v = gen.complex_unit();
    const auto g = gradient(x, p);
    double num = 0, den = 0;
    const double h = 1e-6;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Complex orig = x[i];
      double parts[2];
      for (int part = 0; part < 2; ++part) {
        const Complex dir = part == 0 ? Complex(h, 0) : Complex(0, h);
        x[i] = orig + dir;
        const double plus = residual(x, p);
        x[i] = orig - dir;
        parts[part] = (plus - residual(x, p)) / (2 * h);
      }
      x[i] = orig;
      num += std::norm(g[i] - Complex(parts[0], parts[1]));
      den += parts[0] * parts[0] + parts[1] * parts[1];
    }
    worst = std::max(worst, std::sqrt(num) / std::max(std::sqrt(den), 1e-12));
  }
  o.require(worst < 1e-6, "gradient relative error " + fmt(worst));
  o.note("gradient: worst relative error " + fmt(worst) + " over 100 problems");

  for (const auto& [m, k] : std::vector<std::pair<Monomial, unsigned>>{{Monomial{4, 1, 1}, 3}, {Monomial{2, 2}, 4}}) {
    SearchOptions opt;
    opt.restarts = 50;
    const auto t0 = Clock::now();
    const SearchResult r = search(make_search_problem(m, k, 3), opt);
    const double secs = seconds_since(t0);
    o.require(r.converged && r.best_residual < 1e-10 && secs < 60,
              to_text(m) + " k=" + std::to_string(k) + " s=3: residual " + fmt(r.best_residual));
    o.note(to_text(m) + " k=" + std::to_string(k) + " s=3: residual " + fmt(r.best_residual) + " after " +
           std::to_string(r.restarts_used) + " restarts, " + fmt(secs) + " s");
  }

  for (const Monomial& m : {Monomial{1, 2}, Monomial{1, 1, 1}, Monomial{4, 1, 1}, Monomial{2, 2, 2}}) {
    SearchOptions opt;
    opt.restarts = 100;
    const SearchResult r = search(make_search_problem(m, 3, 2), opt);
    o.require(!r.converged, to_text(m) + " k=3 s=2 converged (residual " + fmt(r.best_residual) + ", restart " +
                                std::to_string(r.best_restart) + ")");
    if (!r.converged) o.note(to_text(m) + " k=3 s=2: no convergence, best residual " + fmt(r.best_residual));
  }
  return o;
}

// 11. Randomized transformer pipelines.
Outcome pipelines() {
  Outcome o;
  testing::Gen gen(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<unsigned> e(static_cast<std::size_t>(gen.integer(1, 3)));
    for (auto& x : e) x = static_cast<unsigned>(gen.integer(1, 3));
    const Certificate base = ccg_linear_decomp(e);
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
    const Variables vars = make_variables(n);
    const unsigned l = static_cast<unsigned>(gen.integer(1, 2));
    std::vector<Monomial> images;
    for (std::size_t i = 0; i < e.size(); ++i) images.push_back(gen.monomial_of_degree(n, l));
    std::map<std::size_t, std::size_t> ident;
    const std::size_t from = static_cast<std::size_t>(gen.integer(1, static_cast<int>(n) - 1));
    if (gen.coin()) ident[from] = 0;
    Certificate c = multiply_cert(specialize_cert(group_substitute(base, vars, images), ident), gen.monomial(n, 2));
    o.require(c.verified && check(c) && c.size() == base.size(), "pipeline " + std::to_string(t));
  }
  o.note("50 pipelines");
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

// 12. Certificate files and CLI stability.
Outcome cli_contract() {
  Outcome o;
  Outcome scratch;
  const auto certs = binary_cubic_certificates(scratch);
  for (const auto& c : certs) {
    const std::string text = serialize(c);
    bool same = false;
    try {
      same = serialize(parse_certificate(text)) == text;
    } catch (const std::exception&) {
    }
    o.require(same, "round trip of " + to_text(c.target));
  }
  o.note(std::to_string(certs.size()) + " certificates round-trip byte for byte");

  const auto dir = std::filesystem::temp_directory_path() / ("waring_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cert.json").string();
  int corruptions = 0, tower_valid = 0;
  for (const Certificate& c : {certs[1], certs[5], decompose(make_instance(Monomial{4, 1, 1}, 3))}) {
    const std::string text = serialize(c);
    std::ofstream(path, std::ios::binary) << text;
    o.require(run_cli({"verify", path}).code == 0, "verify of an untouched certificate");
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) continue;
      const auto ls = text.rfind('\n', pos) + 1;
      const std::string line = text.substr(ls, text.find('\n', pos) - ls);
      const auto defining = text.rfind("\"definingPoly\"", pos);
      const bool in_defining = defining != std::string::npos && text.find(']', defining) > pos;
      if (line.find("\"scalar\"") == std::string::npos && line.find("\"coefficient\"") == std::string::npos &&
          !in_defining) {
        continue;
      }
      for (char d = '0'; d <= '9'; ++d) {
        if (d == text[pos]) continue;
        std::string bad = text;
        bad[pos] = d;
        std::ofstream(path, std::ios::binary) << bad;
        const int code = run_cli({"verify", path}).code;
        if (in_defining && code == 0) {
          // The certificate may not depend on that generator; then the
          // corrupted file is still a valid certificate.
          testing::Gen gen(pos);
          o.require(testing::numeric_certificate_check(parse_certificate(bad), gen),
                    "accepted an invalid tower corruption at offset " + std::to_string(pos));
          ++tower_valid;
        } else {
          o.require(code == 1 || code == 2, "undetected corruption at offset " + std::to_string(pos));
        }
        ++corruptions;
      }
    }
  }
  std::filesystem::remove_all(dir);
  o.note(std::to_string(corruptions) + " single-digit corruptions; " + std::to_string(tower_valid) +
         " tower edits left an independently valid certificate, every other one was rejected");

  for (const auto& args : std::vector<std::vector<std::string>>{{"rank", "-k", "3", "x0 x1 x2"},
                                                                {"rank", "-k", "3", "x0^3 x1 x2 x3"},
                                                                {"classes", "-n", "3", "-k", "3"},
                                                                {"compare-bounds", "-n", "10"}}) {
    const CliRun a = run_cli(args), b = run_cli(args);
    o.require(a.code == 0 && a.out == b.out && !a.out.empty(), "unstable output for " + args[0]);
  }
  o.require(run_cli({"rank", "-k", "3", "x0 x1 x2"}).out.find("exact 4") != std::string::npos, "rank x0 x1 x2");
  o.require(run_cli({"rank", "-k", "3", "x0^3 x1 x2 x3"}).out.find("bounds [3,4] (open)") != std::string::npos,
            "rank x0^3 x1 x2 x3");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"rank formula values", rank_formula},
      {"averaging decompositions match the rank formula", ccg_oracle},
      {"product of k linear forms, 2 <= k <= 8", product_identity},
      {"k=2 completeness", k2_completeness},
      {"binary cubics", binary_cubics},
      {"ternary cubics and the three-cube certificate", ternary_cubics},
      {"binary quartic classes", k4_binary},
      {"residue-class lists", residue_lists},
      {"2^(k-1) <= k^n thresholds", thresholds},
      {"numeric search", numeric_search},
      {"certificate transformer pipelines", pipelines},
      {"CLI round trip, corruption detection, stable output", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.details.push_back(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << "  ("
              << fmt(secs) << " s)\n";
    for (const auto& d : o.details) std::cout << "        " << d << '\n';
    std::cout.flush();
    if (!o.pass) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
