#include "waring/decompose.hpp"

#include "waring/constructions.hpp"
#include "waring/error.hpp"

namespace waring {

namespace {

std::vector<std::size_t> positions_with_residue(const Monomial& reduced, unsigned r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] == r) out.push_back(i);
  }
  return out;
}

Monomial unit(std::size_t n, std::initializer_list<std::pair<std::size_t, unsigned>> parts) {
  std::vector<unsigned> e(n, 0);
  for (const auto& [i, p] : parts) e[i] += p;
  return Monomial(std::move(e));
}

// Certificate for the reduced monomial via the averaging decomposition over
// the variables that actually occur.
Certificate linear_forms_route(const Variables& vars, const Monomial& reduced) {
  std::vector<std::size_t> live;
  std::vector<unsigned> exps;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (reduced[i] > 0) {
      live.push_back(i);
      exps.push_back(reduced[i]);
    }
  }
  const Certificate base = ccg_linear_decomp(exps);
  std::vector<Monomial> images;
  for (std::size_t i : live) images.push_back(Monomial::variable(vars->size(), i));
  return group_substitute(base, vars, images);
}

// k = 3 classes whose reduced monomial is X * Y^2 for monomials X, Y.
Certificate grouping_route(const Variables& vars, const Monomial& reduced) {
  const std::size_t n = vars->size();
  const auto ones = positions_with_residue(reduced, 1);
  const auto twos = positions_with_residue(reduced, 2);
  Monomial x, y;
  if (ones.empty() && twos.size() == 3) {
    x = unit(n, {{twos[0], 2}});
    y = unit(n, {{twos[1], 1}, {twos[2], 1}});
  } else if (ones.size() == 2 && twos.size() == 2) {
    x = unit(n, {{ones[0], 1}, {ones[1], 1}});
    y = unit(n, {{twos[0], 1}, {twos[1], 1}});
  } else if (ones.size() == 1 && twos.size() == 4) {
    x = unit(n, {{ones[0], 1}, {twos[0], 2}});
    y = unit(n, {{twos[1], 1}, {twos[2], 1}, {twos[3], 1}});
  } else {
    throw Error("decompose: residue class has no X*Y^2 grouping");
  }
  const unsigned xy2[] = {1, 2};
  return group_substitute(ccg_linear_decomp(xy2), vars, {x, y});
}

// k = 3, residues (1,1,1) and some residue-1 exponent >= 4:
// M = N^3 * x_a^4 x_b x_c.
Certificate x04_route(const Variables& vars, const Monomial& m) {
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] % 3 == 1) ones.push_back(i);
  }
  if (ones.size() != 3) throw Error("decompose: x0^4 x1 x2 route needs three residue-1 exponents");
  std::size_t lead = ones.size();
  for (std::size_t t = 0; t < ones.size(); ++t) {
    if (m[ones[t]] >= 4) {
      lead = t;
      break;
    }
  }
  if (lead == ones.size()) throw Error("decompose: x0^4 x1 x2 route needs an exponent >= 4");
  std::vector<std::size_t> order{ones[lead]};
  for (std::size_t t = 0; t < ones.size(); ++t) {
    if (t != lead) order.push_back(ones[t]);
  }
  const std::size_t n = vars->size();
  const Certificate base = group_substitute(
      special_x04x1x2(), vars,
      {Monomial::variable(n, order[0]), Monomial::variable(n, order[1]), Monomial::variable(n, order[2])});
  std::vector<unsigned> rest = m.exponents();
  rest[order[0]] -= 4;
  rest[order[1]] -= 1;
  rest[order[2]] -= 1;
  for (auto& e : rest) e /= 3;
  return multiply_cert(base, Monomial(std::move(rest)));
}

// Splits the exponent units of `reduced` (in variable order) into k blocks of
// equal degree and substitutes them into X_1 ... X_k.
Certificate product_route(const Variables& vars, const Monomial& reduced, unsigned k) {
  const unsigned d = reduced.degree() / k;
  std::vector<Monomial> blocks;
  std::vector<unsigned> cur(vars->size(), 0);
  unsigned filled = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    for (unsigned u = 0; u < reduced[i]; ++u) {
      ++cur[i];
      if (++filled == d) {
        blocks.emplace_back(cur);
        std::fill(cur.begin(), cur.end(), 0U);
        filled = 0;
      }
    }
  }
  return group_substitute(product_linear(k), vars, blocks);
}

}  // namespace

Certificate decompose(const KInstance& raw) {
  const KInstance inst = make_instance(raw.monomial, raw.k);
  const RankBounds bounds = classify(inst);
  const RuleRecord& rule = decisive_upper_rule(bounds);
  const Variables vars = make_variables(inst.monomial.size());
  const auto [reduced, cofactor] = reduce_mod_k(inst);

  Certificate cert = [&]() -> Certificate {
    switch (rule.construction) {
      case Construction::pure_power:
        return pure_power_cert(vars, inst.monomial, inst.k);
      case Construction::two_square:
        return multiply_cert(two_square(vars, reduced), cofactor);
      case Construction::linear_forms:
        return multiply_cert(linear_forms_route(vars, reduced), cofactor);
      case Construction::grouping_xy2:
        return multiply_cert(grouping_route(vars, reduced), cofactor);
      case Construction::x04x1x2_route:
        return x04_route(vars, inst.monomial);
      case Construction::product_linear:
        return multiply_cert(product_route(vars, reduced, inst.k), cofactor);
      case Construction::none:
        break;
    }
    throw Error("decompose: rule '" + rule.rule + "' has no construction");
  }();

  if (cert.summands.size() != bounds.upper) {
    throw Error("decompose: certificate size " + std::to_string(cert.summands.size()) +
                " differs from upper bound " + std::to_string(bounds.upper));
  }
  cert.provenance = bounds.trace;
  return cert;
}

}  // namespace waring
