#include "waring/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "waring/certificate_io.hpp"
#include "waring/decompose.hpp"
#include "waring/error.hpp"
#include "waring/numeric_search.hpp"
#include "waring/rank_rules.hpp"

namespace waring::cli {

namespace {

std::string join(const std::vector<unsigned>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string describe(const RankBounds& b) {
  std::string s = summary(b);
  if (!b.trace.empty()) s += "  [" + decisive_upper_rule(b).rule + "]";
  return s;
}

int cmd_rank(std::ostream& out, unsigned k, const std::string& text) {
  const KInstance inst = make_instance(parse_monomial(text), k);
  const RankBounds b = classify(inst);
  const ModReduction red = reduce_mod_k(inst);
  out << "monomial: " << to_text(inst.monomial) << '\n';
  out << "k: " << k << '\n';
  out << "reduced: " << to_text(red.reduced) << "  cofactor: " << to_text(red.cofactor) << '\n';
  out << "result: " << summary(b) << '\n';
  out << render_trace(b.trace);
  return kOk;
}

int cmd_decompose(std::ostream& out, std::ostream& err, unsigned k, const std::string& text,
                  const std::string& path) {
  const KInstance inst = make_instance(parse_monomial(text), k);
  Certificate cert;
  try {
    cert = decompose(inst);
  } catch (const InvalidArgument&) {
    throw;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  if (!check(cert)) {
    err << "error: constructed certificate failed verification\n";
    return kInternal;
  }
  const std::string body = serialize(cert);
  if (path.empty()) {
    out << body;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  file << body;
  if (!file.flush()) {
    err << "error: cannot write " << path << '\n';
    return kUsageOrParse;
  }
  out << "wrote " << cert.size() << "-summand certificate for " << to_text(inst.monomial) << " (k=" << k
      << ") to " << path << '\n';
  return kOk;
}

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << path << '\n';
    return kUsageOrParse;
  }
  const std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  Certificate cert;
  bool ok = false;
  try {
    cert = parse_certificate(text);
    ok = check(cert);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const MalformedCertificate& e) {
    err << "malformed certificate: " << e.what() << '\n';
    return kUsageOrParse;
  }
  out << (ok ? "verified" : "NOT verified") << ": " << cert.size() << " summands, k=" << cert.k << ", target "
      << to_text(cert.target, *cert.variables) << '\n';
  return ok ? kOk : kFalse;
}

SearchOptions search_options(unsigned restarts, double tol, std::uint64_t seed, unsigned threads) {
  SearchOptions opt;
  opt.restarts = restarts;
  opt.tolerance = tol;
  opt.seed = seed;
  opt.threads = std::max(1U, threads);
  return opt;
}

int cmd_search(std::ostream& out, unsigned k, unsigned s, const std::string& text, const SearchOptions& opt,
               bool json) {
  const SearchProblem problem = make_search_problem(parse_monomial(text), k, s);
  const SearchResult result = search(problem, opt);
  out << (json ? to_json(result, problem) : to_text(result, problem));
  return result.converged ? kOk : kFalse;
}

int cmd_probe(std::ostream& out, unsigned k, const std::string& text, const SearchOptions& opt, bool json) {
  const ProbeReport report = probe_open_case(parse_monomial(text), k, opt);
  out << (json ? to_json(report) : to_text(report));
  return kOk;
}

int cmd_classes(std::ostream& out, unsigned n, unsigned k) {
  if (k < 2) throw InvalidArgument("classes: k must be at least 2");
  const auto classes = residue_classes(n, k);
  out << "residue classes for n=" << n << ", k=" << k << ": " << classes.size() << '\n';
  out << "residues | representative | result\n";
  for (const auto& c : classes) {
    std::vector<unsigned> rep = c.residues;
    if (std::all_of(rep.begin(), rep.end(), [](unsigned r) { return r == 0; })) rep.back() = k;
    const RankBounds b = classify(make_instance(Monomial(rep), k));
    out << "(" << join(c.residues, ",") << ") | " << to_text(Monomial(rep)) << " | " << describe(b) << '\n';
  }
  return kOk;
}

int cmd_compare_bounds(std::ostream& out, unsigned n) {
  const unsigned k = compare_bounds(n);
  const Integer two_pow = Integer(1) << k;  // 2^((k+1)-1)
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), k + 1, n);
  out << "n = " << n << ": 2^(k-1) <= k^n holds for every k <= " << k << '\n';
  out << "first failure: k = " << (k + 1) << ", 2^" << k << " = " << two_pow.get_str() << " > " << (k + 1)
      << "^" << n << " = " << power.get_str() << '\n';
  return kOk;
}

void non_decreasing(std::size_t len, unsigned total, unsigned min_value, std::vector<unsigned>& cur,
                    const std::function<void(const std::vector<unsigned>&)>& emit) {
  if (cur.size() == len) {
    if (total == 0) emit(cur);
    return;
  }
  const std::size_t left = len - cur.size();
  for (unsigned v = min_value; v * left <= total; ++v) {
    cur.push_back(v);
    non_decreasing(len, total - v, v, cur, emit);
    cur.pop_back();
  }
}

int cmd_table(std::ostream& out, unsigned k, unsigned n, unsigned max_degree) {
  if (k < 2) throw InvalidArgument("table: k must be at least 2");
  out << "k=" << k << ", " << (n + 1) << " variables, degree <= " << max_degree << '\n';
  out << "exponents | residues | result | decisive rule\n";
  for (unsigned deg = k; deg <= max_degree; deg += k) {
    std::vector<unsigned> cur;
    non_decreasing(n + 1, deg, 0, cur, [&](const std::vector<unsigned>& e) {
      const KInstance inst = make_instance(Monomial(e), k);
      const RankBounds b = classify(inst);
      std::vector<unsigned> res;
      for (unsigned a : e) res.push_back(a % k);
      std::sort(res.begin(), res.end());
      out << "(" << join(e, ",") << ") | (" << join(res, ",") << ") | " << summary(b) << " | "
          << decisive_upper_rule(b).rule << '\n';
    });
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Waring ranks of monomials: exact bounds, verified decompositions, numeric search", "waring"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  unsigned k = 0, n = 0, s = 0, max_degree = 0, restarts = 50, threads = 1;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  bool json = false;
  std::string monomial, path;

  auto* rank = app.add_subcommand("rank", "Rank bounds and the rule trace for a monomial");
  rank->add_option("-k", k, "Power k")->required();
  rank->add_option("MONOMIAL", monomial, "e.g. \"x0^4 x1 x2\" or 4,1,1")->required();

  auto* dec = app.add_subcommand("decompose", "Build and verify an explicit certificate");
  dec->add_option("-k", k, "Power k")->required();
  dec->add_option("MONOMIAL", monomial, "e.g. \"x0^4 x1 x2\" or 4,1,1")->required();
  dec->add_option("--out", path, "Write the certificate here instead of standard output");

  auto* ver = app.add_subcommand("verify", "Re-check a certificate file exactly");
  ver->add_option("FILE", path, "Certificate file")->required();

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", restarts, "Number of random restarts")->capture_default_str();
    cmd->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
    cmd->add_option("--seed", seed, "Random seed (default: $WARING_SEED or 0)");
    cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    cmd->add_flag("--json", json, "Machine-readable output");
  };
  auto* srch = app.add_subcommand("search", "Numeric search for s summands");
  srch->add_option("-k", k, "Power k")->required();
  srch->add_option("-s", s, "Number of summands")->required();
  srch->add_option("MONOMIAL", monomial, "e.g. \"x0^4 x1 x2\" or 4,1,1")->required();
  add_search_flags(srch);

  auto* probe = app.add_subcommand("probe", "Numeric search for every s between the rank bounds");
  probe->add_option("-k", k, "Power k")->required();
  probe->add_option("MONOMIAL", monomial, "e.g. \"x0^3 x1 x2 x3\"")->required();
  add_search_flags(probe);

  auto* cls = app.add_subcommand("classes", "Residue classes of exponents modulo k");
  cls->add_option("-n", n, "Number of variables minus one")->required();
  cls->add_option("-k", k, "Power k")->required();

  auto* cmp = app.add_subcommand("compare-bounds", "Largest k with 2^(k-1) <= k^n");
  cmp->add_option("-n", n, "Exponent n")->required();

  auto* tbl = app.add_subcommand("table", "Classification of monomials up to permutation");
  tbl->add_option("-k", k, "Power k")->required();
  tbl->add_option("-n", n, "Number of variables minus one")->required();
  tbl->add_option("--max-degree", max_degree, "Largest total degree")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    err << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kUsageOrParse;
  }

  const bool seed_given = (srch->parsed() && srch->count("--seed") > 0) ||
                          (probe->parsed() && probe->count("--seed") > 0);
  if (!seed_given) {
    if (const char* env = std::getenv("WARING_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        seed = std::stoull(env, &used);
        if (used != std::string(env).size() || env[0] == '-') throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        err << "error: WARING_SEED must be a non-negative integer\n";
        return kUsageOrParse;
      }
    }
  }

  try {
    if (rank->parsed()) return cmd_rank(out, k, monomial);
    if (dec->parsed()) return cmd_decompose(out, err, k, monomial, path);
    if (ver->parsed()) return cmd_verify(out, err, path);
    if (srch->parsed()) return cmd_search(out, k, s, monomial, search_options(restarts, tol, seed, threads), json);
    if (probe->parsed()) return cmd_probe(out, k, monomial, search_options(restarts, tol, seed, threads), json);
    if (cls->parsed()) return cmd_classes(out, n, k);
    if (cmp->parsed()) return cmd_compare_bounds(out, n);
    if (tbl->parsed()) return cmd_table(out, k, n, max_degree);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsageOrParse;
}

}  // namespace waring::cli
