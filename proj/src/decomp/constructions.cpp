#include "waring/constructions.hpp"

#include <algorithm>
#include <set>

#include "waring/cyclotomic.hpp"
#include "waring/error.hpp"

namespace waring {

namespace {

Certificate finish(Certificate cert, const char* who) {
  if (!verify(cert)) throw Error(std::string(who) + ": constructed certificate failed verification");
  return cert;
}

Polynomial monomial_form(const Variables& vars, const Tower& tower, const Monomial& m) {
  return Polynomial::term(vars, m, RingElement(tower, 1));
}

}  // namespace

Certificate pure_power_cert(const Variables& vars, const Monomial& target, unsigned k) {
  if (k == 0) throw InvalidArgument("pure_power_cert: k must be positive");
  std::vector<unsigned> root;
  for (unsigned e : target.exponents()) {
    if (e % k != 0) throw InvalidArgument("pure_power_cert: target is not a k-th power");
    root.push_back(e / k);
  }
  const Tower q = ExtensionTower::rationals();
  Certificate cert{vars, k, target, q, {}, false, {}};
  cert.summands.push_back({RingElement(q, 1), monomial_form(vars, q, Monomial(root))});
  return finish(std::move(cert), "pure_power_cert");
}

std::pair<Monomial, Monomial> greedy_split(const Monomial& m) {
  if (m.degree() % 2 != 0) throw InvalidArgument("greedy_split: odd degree");
  unsigned need = m.degree() / 2;
  std::vector<unsigned> first(m.size(), 0);
  std::vector<unsigned> second = m.exponents();
  for (std::size_t i = 0; i < m.size() && need > 0; ++i) {
    const unsigned take = std::min(need, second[i]);
    first[i] = take;
    second[i] -= take;
    need -= take;
  }
  return {Monomial(std::move(first)), Monomial(std::move(second))};
}

Certificate two_square(const Variables& vars, const Monomial& m,
                       std::optional<std::pair<Monomial, Monomial>> split) {
  if (m.size() != vars->size()) throw InvalidArgument("two_square: variable count mismatch");
  if (m.degree() % 2 != 0) throw InvalidArgument("two_square: odd degree");
  // Without a split a square has rank 1 and gets the trivial certificate;
  // an explicit split is rejected only when it is X * X.
  const bool square = std::all_of(m.exponents().begin(), m.exponents().end(),
                                  [](unsigned e) { return e % 2 == 0; });
  if (square && !split) throw InvalidArgument("two_square: " + to_text(m) + " is a perfect square (rank 1)");
  const auto [x, y] = split ? *split : greedy_split(m);
  if (x.size() != m.size() || y.size() != m.size() || x * y != m || x.degree() != y.degree()) {
    throw InvalidArgument("two_square: split does not factor the monomial into equal-degree halves");
  }
  if (x == y) throw InvalidArgument("two_square: split " + to_text(x) + " squared is a perfect square (rank 1)");
  const Tower q = ExtensionTower::rationals();
  const Tower gauss = ExtensionTower::extend(q, "i", lift(q, {Rational(1), Rational(0), Rational(1)}));
  const Polynomial px = monomial_form(vars, gauss, x);
  const Polynomial py = monomial_form(vars, gauss, y);
  Certificate cert{vars, 2, m, gauss, {}, false, {}};
  cert.summands.push_back({RingElement(gauss, Rational(1, 4)), px + py});
  cert.summands.push_back({RingElement(gauss, Rational(-1, 4)), px - py});
  return finish(std::move(cert), "two_square");
}

Certificate two_square(const Monomial& m, std::optional<std::pair<Monomial, Monomial>> split) {
  return two_square(make_variables(m.size()), m, std::move(split));
}

Certificate product_linear(unsigned k) {
  if (k < 2) throw InvalidArgument("product_linear: k must be at least 2");
  if (k > 20) throw InvalidArgument("product_linear: k too large");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
  const Variables vars = make_variables(std::move(names));
  const Tower q = ExtensionTower::rationals();
  const Rational norm(Integer(1), factorial(k) * (Integer(1) << (k - 1)));

  Certificate cert{vars, k, Monomial(std::vector<unsigned>(k, 1)), q, {}, false, {}};
  for (unsigned mask = 0; mask < (1U << (k - 1)); ++mask) {
    Polynomial form = Polynomial::variable(vars, q, 0);
    int sign = 1;
    for (unsigned i = 1; i < k; ++i) {
      const bool minus = (mask >> (i - 1)) & 1U;
      const Polynomial xi = Polynomial::variable(vars, q, i);
      if (minus) {
        form -= xi;
        sign = -sign;
      } else {
        form += xi;
      }
    }
    cert.summands.push_back({RingElement(q, sign > 0 ? norm : Rational(-norm)), std::move(form)});
  }
  return finish(std::move(cert), "product_linear");
}

Certificate ccg_linear_decomp(std::span<const unsigned> exponents) {
  return ccg_linear_decomp(make_variables(exponents.size()), exponents);
}

Certificate ccg_linear_decomp(const Variables& vars, std::span<const unsigned> exponents) {
  const std::size_t n = exponents.size();
  if (n == 0 || n != vars->size()) throw InvalidArgument("ccg_linear_decomp: exponent count mismatch");
  for (unsigned a : exponents) {
    if (a == 0) throw InvalidArgument("ccg_linear_decomp: zero exponent");
  }
  const std::size_t pivot =
      static_cast<std::size_t>(std::min_element(exponents.begin(), exponents.end()) - exponents.begin());
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != pivot) others.push_back(i);
  }

  std::set<unsigned> orders;
  for (std::size_t i : others) {
    if (exponents[i] + 1 >= 3) orders.insert(exponents[i] + 1);
  }
  Tower tower = ExtensionTower::rationals();
  for (unsigned m : orders) tower = adjoin_root_of_unity(tower, m, "z" + std::to_string(m));

  std::vector<RingElement> root;
  std::vector<unsigned> order;
  for (std::size_t i : others) {
    const unsigned m = exponents[i] + 1;
    order.push_back(m);
    root.push_back(m == 2 ? RingElement(tower, -1)
                          : RingElement::generator(tower, *tower->index_of("z" + std::to_string(m))));
  }

  unsigned degree = 0;
  for (unsigned a : exponents) degree += a;
  Integer c = factorial(degree);
  for (unsigned a : exponents) c /= factorial(a);
  for (unsigned m : order) c *= m;
  const Rational inv_c(Integer(1), c);

  Certificate cert{vars, degree, Monomial(std::vector<unsigned>(exponents.begin(), exponents.end())),
                   tower, {}, false, {}};
  std::vector<unsigned> j(others.size(), 0);
  while (true) {
    Polynomial form = Polynomial::variable(vars, tower, pivot);
    RingElement scalar(tower, inv_c);
    for (std::size_t t = 0; t < others.size(); ++t) {
      const unsigned m = order[t];
      const unsigned a = exponents[others[t]];
      form += Polynomial::variable(vars, tower, others[t]).scaled(root[t].pow(j[t]));
      scalar *= root[t].pow((m - (j[t] * a) % m) % m);
    }
    cert.summands.push_back({std::move(scalar), std::move(form)});
    std::size_t t = 0;
    while (t < j.size() && ++j[t] == order[t]) j[t++] = 0;
    if (t == j.size()) break;
  }
  cert.provenance.push_back(RuleRecord{
      "averaging", (*vars)[pivot] + " carries the smallest exponent and coefficient 1", BoundKind::upper,
      static_cast<unsigned>(cert.summands.size()), Construction::linear_forms});
  return finish(std::move(cert), "ccg_linear_decomp");
}

Certificate group_substitute(const Certificate& cert, const Variables& new_vars,
                             const std::vector<Monomial>& images) {
  if (images.size() != cert.variables->size()) throw InvalidArgument("group_substitute: one image per variable");
  const unsigned l = images.empty() ? 0 : images.front().degree();
  if (l == 0) throw InvalidArgument("group_substitute: images must have degree >= 1");
  Monomial target = Monomial::one(new_vars->size());
  std::map<std::string, Polynomial> subst;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != l) throw InvalidArgument("group_substitute: images of unequal degree");
    if (images[i].size() != new_vars->size()) throw InvalidArgument("group_substitute: image over wrong variables");
    target = target * images[i].pow(cert.target[i]);
    subst.emplace((*cert.variables)[i], monomial_form(new_vars, cert.tower, images[i]));
  }
  Certificate out{new_vars, cert.k, target, cert.tower, {}, false, cert.provenance};
  for (const auto& s : cert.summands) {
    out.summands.push_back({s.scalar, s.form.is_zero() ? Polynomial(new_vars, cert.tower)
                                                       : substitute(s.form, subst)});
  }
  return finish(std::move(out), "group_substitute");
}

Certificate specialize_cert(const Certificate& cert,
                            const std::map<std::size_t, std::size_t>& identifications) {
  Certificate out{cert.variables, cert.k, specialize(cert.target, identifications), cert.tower, {}, false,
                  cert.provenance};
  for (const auto& s : cert.summands) out.summands.push_back({s.scalar, specialize(s.form, identifications)});
  return finish(std::move(out), "specialize_cert");
}

Certificate multiply_cert(const Certificate& cert, const Monomial& n) {
  if (n.size() != cert.variables->size()) throw InvalidArgument("multiply_cert: monomial over wrong variables");
  Certificate out{cert.variables, cert.k, cert.target * n.pow(cert.k), cert.tower, {}, false, cert.provenance};
  for (const auto& s : cert.summands) out.summands.push_back({s.scalar, s.form.times_monomial(n)});
  return finish(std::move(out), "multiply_cert");
}

Tower x04x1x2_tower() {
  const Tower q = ExtensionTower::rationals();
  const Tower with_u = ExtensionTower::extend(q, "u", lift(q, {Rational(-1, 6), Rational(0), Rational(1)}));
  return ExtensionTower::extend(with_u, "v",
                                lift(with_u, {Rational(2), Rational(0), Rational(0), Rational(1)}));
}

Certificate x04x1x2_candidate(const Tower& tower, const RingElement& a, const RingElement& b,
                              const RingElement& c) {
  const Variables vars = make_variables(3);
  const Polynomial x0sq = Polynomial::term(vars, Monomial{2, 0, 0}, RingElement(tower, 1));
  const Polynomial x1x2 = Polynomial::term(vars, Monomial{0, 1, 1}, RingElement(tower, 1));
  Certificate cert{vars, 3, Monomial{4, 1, 1}, tower, {}, false, {}};
  const RingElement one(tower, 1);
  cert.summands.push_back({one, x0sq.scaled(a) + x1x2});
  cert.summands.push_back({one, x0sq.scaled(b) + x1x2});
  cert.summands.push_back({one, x1x2.scaled(c)});
  return cert;
}

Certificate special_x04x1x2() {
  const Tower t = x04x1x2_tower();
  const RingElement u = RingElement::generator(t, 0);
  const RingElement v = RingElement::generator(t, 1);
  Certificate cert = x04x1x2_candidate(t, u, -u, v);
  cert.provenance.push_back(RuleRecord{"three-cubes",
                                       "(u x0^2 + x1x2)^3 + (-u x0^2 + x1x2)^3 + (v x1x2)^3, u^2 = 1/6, v^3 = -2",
                                       BoundKind::upper, 3, Construction::x04x1x2_route});
  return finish(std::move(cert), "special_x04x1x2");
}

}  // namespace waring
