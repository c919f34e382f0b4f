#include "waring/polynomial.hpp"

#include "waring/error.hpp"

namespace waring {

namespace {

void require_compatible(const Polynomial& p, const Polynomial& q, const char* op) {
  if (!same_variables(p.variables(), q.variables())) {
    throw VariableMismatch(std::string(op) + ": polynomials over different variable sets");
  }
  if (!same_tower(p.tower(), q.tower())) {
    throw TowerMismatch(std::string(op) + ": polynomials over different towers");
  }
}

}  // namespace

Polynomial::Polynomial(Variables vars, Tower tower) : vars_(std::move(vars)), tower_(std::move(tower)) {
  if (!vars_ || !tower_) throw InvalidArgument("Polynomial: null variable set or tower");
}

Polynomial Polynomial::constant(const Variables& vars, const RingElement& c) {
  return term(vars, Monomial::one(vars->size()), c);
}

Polynomial Polynomial::term(const Variables& vars, const Monomial& m, const RingElement& c) {
  Polynomial p(vars, c.tower());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(const Variables& vars, const Tower& tower, std::size_t index) {
  return term(vars, Monomial::variable(vars->size(), index), RingElement(tower, 1));
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

RingElement Polynomial::coefficient(const Monomial& m) const {
  if (auto it = terms_.find(m); it != terms_.end()) return it->second;
  return RingElement(tower_);
}

void Polynomial::add_term(const Monomial& m, const RingElement& c) {
  if (m.size() != vars_->size()) throw VariableMismatch("add_term: monomial has wrong variable count");
  if (!same_tower(c.tower(), tower_)) throw TowerMismatch("add_term: coefficient over a different tower");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_compatible(*this, rhs, "poly_add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_compatible(*this, rhs, "poly_sub");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_compatible(lhs, rhs, "poly_mul");
  Polynomial out(lhs.vars_, lhs.tower_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const RingElement prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return same_variables(lhs.vars_, rhs.vars_) && same_tower(lhs.tower_, rhs.tower_) &&
         lhs.terms_ == rhs.terms_;
}

Polynomial Polynomial::scaled(const RingElement& c) const {
  Polynomial out(vars_, tower_);
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.add_term(m, coef * c);
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& mono) const {
  Polynomial out(vars_, tower_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m * mono, c);
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, RingElement(tower_, 1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(const Tower& larger) const {
  Polynomial out(vars_, larger);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.embed(larger));
  return out;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point,
                                          std::span<const std::complex<double>> generator_values) const {
  if (point.size() != vars_->size()) throw InvalidArgument("evaluate: point has wrong dimension");
  std::complex<double> sum = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.evaluate(generator_values);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t *= std::pow(point[i], static_cast<double>(m[i]));
    }
    sum += t;
  }
  return sum;
}

RingElement Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw InvalidArgument("evaluate: point has wrong dimension");
  RingElement sum(tower_);
  for (const auto& [m, c] : terms_) {
    Rational v = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) v *= point[i];
    }
    sum += c.scaled(v);
  }
  return sum;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += '[' + c.to_string() + ']';
    for (std::size_t i = 0; i < m.size(); ++i) {
      out += '*' + (*vars_)[i] + '^' + std::to_string(m[i]);
    }
  }
  return out.empty() ? "0" : out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_pow(const Polynomial& p, unsigned k) { return p.pow(k); }

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& images) {
  if (images.empty()) throw InvalidArgument("substitute: no images given");
  const Polynomial& first = images.begin()->second;
  const Variables& target_vars = first.variables();
  for (const auto& [name, img] : images) {
    if (!same_variables(img.variables(), target_vars)) {
      throw VariableMismatch("substitute: images over different variable sets");
    }
    if (!same_tower(img.tower(), p.tower())) throw TowerMismatch("substitute: image over a different tower");
  }
  const auto& names = *p.variables();
  std::vector<const Polynomial*> image_of(names.size(), nullptr);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (auto it = images.find(names[i]); it != images.end()) image_of[i] = &it->second;
  }
  // Powers of each image, computed on demand.
  std::vector<std::vector<Polynomial>> powers(names.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_vars, RingElement(p.tower(), 1)));
    while (cache.size() <= e) cache.push_back(cache.back() * *image_of[var]);
    return cache[e];
  };
  Polynomial out(target_vars, p.tower());
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target_vars, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (image_of[i] == nullptr) throw InvalidArgument("substitute: no image for variable '" + names[i] + "'");
      t = t * power(i, m[i]);
    }
    out += t;
  }
  return out;
}

Monomial specialize(const Monomial& m, const std::map<std::size_t, std::size_t>& identifications) {
  std::vector<unsigned> e = m.exponents();
  for (const auto& [from, to] : identifications) {
    if (from >= e.size() || to >= e.size()) throw InvalidArgument("specialize: variable index out of range");
    if (identifications.count(to) != 0 && identifications.at(to) != to) {
      throw InvalidArgument("specialize: identification target is itself identified away");
    }
    if (from == to) continue;
    e[to] += e[from];
    e[from] = 0;
  }
  return Monomial(std::move(e));
}

Polynomial specialize(const Polynomial& p, const std::map<std::size_t, std::size_t>& identifications) {
  Polynomial out(p.variables(), p.tower());
  for (const auto& [m, c] : p.terms()) out.add_term(specialize(m, identifications), c);
  return out;
}

}  // namespace waring
