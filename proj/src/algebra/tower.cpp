#include "waring/tower.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "waring/error.hpp"

namespace waring {

namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name.front())) || name.front() == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool all_zero(const Rational* p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(p[i]) != 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionTower

Tower ExtensionTower::rationals() {
  static const Tower q{new ExtensionTower()};
  return q;
}

Tower ExtensionTower::extend(const Tower& base, std::string name,
                             const std::vector<RingElement>& defining) {
  if (!base) throw InvalidArgument("tower_extend: null base tower");
  if (!valid_identifier(name)) throw InvalidArgument("tower_extend: bad generator name '" + name + "'");
  if (base->index_of(name)) throw InvalidArgument("tower_extend: generator '" + name + "' already present");
  if (defining.size() < 3) throw InvalidArgument("tower_extend: defining polynomial must have degree >= 2");
  for (const auto& c : defining) {
    if (!same_tower(c.tower(), base)) {
      throw InvalidArgument("tower_extend: coefficient not over the base tower");
    }
  }
  if (!defining.back().is_one()) throw InvalidArgument("tower_extend: defining polynomial must be monic");

  std::shared_ptr<ExtensionTower> t{new ExtensionTower()};
  t->parent_ = base;
  t->names_ = base->names_;
  t->names_.push_back(std::move(name));
  t->degrees_ = base->degrees_;
  t->degrees_.push_back(static_cast<unsigned>(defining.size() - 1));
  t->strides_ = base->strides_;
  t->strides_.push_back(base->dimension_);
  t->dimension_ = base->dimension_ * t->degrees_.back();
  t->lower_.reserve(defining.size() - 1);
  for (std::size_t i = 0; i + 1 < defining.size(); ++i) {
    // Re-anchor on `base` so structurally equal copies share one pointer.
    t->lower_.push_back(RingElement(base, defining[i].dense()));
  }
  t->level_lower_ = base->level_lower_;
  t->level_lower_.push_back(&t->lower_);
  return t;
}

std::optional<std::size_t> ExtensionTower::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Tower ExtensionTower::prefix(std::size_t count) const {
  if (count > generator_count()) throw InvalidArgument("prefix: count exceeds tower size");
  Tower node = shared_from_this();
  while (node->generator_count() > count) node = node->parent_;
  return node;
}

const std::vector<RingElement>& ExtensionTower::defining_lower(std::size_t index) const {
  if (index >= generator_count()) throw InvalidArgument("defining_lower: index out of range");
  return *level_lower_[index];
}

std::vector<std::complex<double>> ExtensionTower::numeric_roots(
    std::span<const std::size_t> choice) const {
  std::vector<std::complex<double>> values;
  values.reserve(generator_count());
  for (std::size_t level = 0; level < generator_count(); ++level) {
    const auto& lower = *level_lower_[level];
    const auto deg = static_cast<Eigen::Index>(degrees_[level]);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
    for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < deg; ++i) {
      companion(i, deg - 1) = -lower[static_cast<std::size_t>(i)].evaluate(values);
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<std::complex<double>> roots(solver.eigenvalues().begin(), solver.eigenvalues().end());
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      return std::arg(a) < std::arg(b);
    });
    const std::size_t pick = level < choice.size() ? choice[level] % roots.size() : 0;
    values.push_back(roots[pick]);
  }
  return values;
}

bool ExtensionTower::structurally_equal(const ExtensionTower& other) const {
  if (this == &other) return true;
  if (names_ != other.names_ || degrees_ != other.degrees_) return false;
  for (std::size_t level = 0; level < generator_count(); ++level) {
    const auto& a = *level_lower_[level];
    const auto& b = *other.level_lower_[level];
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].dense() != b[i].dense()) return false;
    }
  }
  return true;
}

bool same_tower(const Tower& a, const Tower& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->structurally_equal(*b);
}

// ---------------------------------------------------------------------------
// Normal-form multiplication

namespace {

// Product of two blocks of dimension dim(level) in the sub-tower made of the
// first `level` generators, reduced innermost-first.
void multiply_level(const ExtensionTower& tower,
                    const std::vector<const std::vector<RingElement>*>& lower_by_level,
                    std::size_t level, const Rational* a, const Rational* b, Rational* out,
                    std::size_t dim) {
  if (level == 0) {
    out[0] += a[0] * b[0];
    return;
  }
  const std::size_t deg = tower.degrees()[level - 1];
  const std::size_t block = dim / deg;
  // Unreduced product in powers of the top generator, exponents < 2 deg - 1.
  std::vector<Rational> wide((2 * deg - 1) * block);
  std::vector<bool> live(2 * deg - 1, false);
  for (std::size_t i = 0; i < deg; ++i) {
    if (all_zero(a + i * block, block)) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (all_zero(b + j * block, block)) continue;
      multiply_level(tower, lower_by_level, level - 1, a + i * block, b + j * block,
                     wide.data() + (i + j) * block, block);
      live[i + j] = true;
    }
  }
  // g^deg = -(c_0 + c_1 g + ... + c_{deg-1} g^{deg-1})
  const auto& lower = *lower_by_level[level - 1];
  std::vector<Rational> scratch(block);
  for (std::size_t t = 2 * deg - 2; t >= deg; --t) {
    if (!live[t] || all_zero(wide.data() + t * block, block)) continue;
    for (std::size_t i = 0; i < deg; ++i) {
      const auto& c = lower[i].dense();
      if (all_zero(c.data(), block)) continue;
      std::fill(scratch.begin(), scratch.end(), Rational(0));
      multiply_level(tower, lower_by_level, level - 1, c.data(), wide.data() + t * block,
                     scratch.data(), block);
      Rational* dst = wide.data() + (t - deg + i) * block;
      for (std::size_t e = 0; e < block; ++e) dst[e] -= scratch[e];
      live[t - deg + i] = true;
    }
  }
  for (std::size_t e = 0; e < dim; ++e) out[e] += wide[e];
}

void require_same(const RingElement& a, const RingElement& b, const char* op) {
  if (!same_tower(a.tower(), b.tower())) {
    throw TowerMismatch(std::string(op) + ": operands over different towers");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(Tower tower) : tower_(std::move(tower)) {
  if (!tower_) throw InvalidArgument("RingElement: null tower");
  coeffs_.assign(tower_->dimension(), Rational(0));
}

RingElement::RingElement(Tower tower, const Rational& value) : RingElement(std::move(tower)) {
  coeffs_[0] = value;
}

RingElement RingElement::generator(const Tower& tower, std::size_t index) {
  if (index >= tower->generator_count()) throw InvalidArgument("generator: index out of range");
  RingElement g(tower);
  g.coeffs_[tower->strides_[index]] = 1;
  return g;
}

RingElement RingElement::from_terms(const Tower& tower, const std::map<Exponents, Rational>& terms) {
  RingElement out(tower);
  for (const auto& [exps, c] : terms) {
    if (exps.size() != tower->generator_count()) {
      throw InvalidArgument("from_terms: exponent tuple has wrong length");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] >= tower->degrees()[i]) throw InvalidArgument("from_terms: exponent not reduced");
      idx += exps[i] * tower->strides_[i];
    }
    out.coeffs_[idx] += c;
  }
  return out;
}

bool RingElement::is_zero() const { return all_zero(coeffs_.data(), coeffs_.size()); }

bool RingElement::is_one() const {
  return coeffs_[0] == 1 && all_zero(coeffs_.data() + 1, coeffs_.size() - 1);
}

std::optional<Rational> RingElement::as_rational() const {
  if (!all_zero(coeffs_.data() + 1, coeffs_.size() - 1)) return std::nullopt;
  return coeffs_[0];
}

std::map<RingElement::Exponents, Rational> RingElement::terms() const {
  std::map<Exponents, Rational> out;
  const auto& degs = tower_->degrees();
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    Exponents e(degs.size());
    std::size_t rest = idx;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      e[i] = static_cast<unsigned>(rest % degs[i]);
      rest /= degs[i];
    }
    out.emplace(std::move(e), coeffs_[idx]);
  }
  return out;
}

RingElement RingElement::operator-() const {
  RingElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same(*this, rhs, "ring_add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same(*this, rhs, "ring_sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

RingElement operator*(const RingElement& lhs, const RingElement& rhs) {
  require_same(lhs, rhs, "ring_mul");
  const std::size_t dim = lhs.coeffs_.size();
  if (dim == 1) return RingElement(lhs.tower_, std::vector<Rational>{lhs.coeffs_[0] * rhs.coeffs_[0]});
  std::vector<Rational> out(dim);
  multiply_level(*lhs.tower_, lhs.tower_->level_lower_, lhs.tower_->generator_count(),
                 lhs.coeffs_.data(), rhs.coeffs_.data(), out.data(), dim);
  return RingElement(lhs.tower_, std::move(out));
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const RingElement& lhs, const RingElement& rhs) {
  return same_tower(lhs.tower_, rhs.tower_) && lhs.coeffs_ == rhs.coeffs_;
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result(tower_, 1);
  RingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

RingElement RingElement::scaled(const Rational& factor) const {
  RingElement out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

RingElement RingElement::embed(const Tower& larger) const {
  if (!larger || larger->generator_count() < tower_->generator_count() ||
      !same_tower(larger->prefix(tower_->generator_count()), tower_)) {
    throw TowerMismatch("embed: target tower does not extend the source tower");
  }
  std::vector<Rational> coeffs = coeffs_;
  coeffs.resize(larger->dimension(), Rational(0));
  return RingElement(larger, std::move(coeffs));
}

std::complex<double> RingElement::evaluate(std::span<const std::complex<double>> generator_values) const {
  const auto& degs = tower_->degrees();
  if (generator_values.size() < degs.size()) throw InvalidArgument("evaluate: missing generator values");
  std::complex<double> sum = 0.0;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    std::complex<double> term = coeffs_[idx].get_d();
    std::size_t rest = idx;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      const unsigned e = static_cast<unsigned>(rest % degs[i]);
      rest /= degs[i];
      if (e > 0) term *= std::pow(generator_values[i], static_cast<double>(e));
    }
    sum += term;
  }
  return sum;
}

std::string RingElement::to_string() const {
  std::string out;
  const auto& names = tower_->names();
  const auto& degs = tower_->degrees();
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (sgn(coeffs_[idx]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += '(';
    out += waring::to_string(coeffs_[idx]);
    out += ')';
    std::size_t rest = idx;
    for (std::size_t i = 0; i < degs.size(); ++i) {
      out += '*';
      out += names[i];
      out += '^';
      out += std::to_string(rest % degs[i]);
      rest /= degs[i];
    }
  }
  return out.empty() ? "0" : out;
}

RingElement RingElement::parse(const Tower& tower, std::string_view text) {
  RingElement out(tower);
  if (text == "0") return out;
  const auto& names = tower->names();
  const auto& degs = tower->degrees();
  std::size_t pos = 0;
  std::optional<std::size_t> previous;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("ring element '" + std::string(text) + "': " + why);
  };
  while (true) {
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw fail("unterminated coefficient");
    const Rational c = parse_rational(text.substr(pos + 1, close - pos - 1));
    if (sgn(c) == 0) throw fail("zero coefficient stored");
    pos = close + 1;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      const std::string head = "*" + names[i] + "^";
      if (text.substr(pos, head.size()) != head) throw fail("expected '" + head + "'");
      pos += head.size();
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      const auto digits = text.substr(pos, end - pos);
      if (digits.empty() || digits.size() > 6 || (digits.size() > 1 && digits[0] == '0')) {
        throw fail("malformed exponent");
      }
      const auto e = static_cast<std::size_t>(std::stoul(std::string(digits)));
      if (e >= degs[i]) throw fail("exponent not reduced");
      idx += e * tower->strides_[i];
      pos = end;
    }
    if (previous && idx <= *previous) throw fail("terms out of canonical order");
    previous = idx;
    out.coeffs_[idx] = c;
    if (pos == text.size()) break;
    if (text.substr(pos, 3) != " + ") throw fail("expected ' + '");
    pos += 3;
  }
  return out;
}

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement ring_neg(const RingElement& a) { return -a; }
RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }
bool ring_eq(const RingElement& a, const RingElement& b) {
  require_same(a, b, "ring_eq");
  return a == b;
}

}  // namespace waring
