#include "waring/monomial.hpp"

#include <numeric>

#include "waring/error.hpp"

namespace waring {

Monomial Monomial::variable(std::size_t variable_count, std::size_t index) {
  if (index >= variable_count) throw InvalidArgument("Monomial::variable: index out of range");
  std::vector<unsigned> e(variable_count, 0);
  e[index] = 1;
  return Monomial(std::move(e));
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0U); }

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (size() != rhs.size()) throw VariableMismatch("monomial product over different variable counts");
  std::vector<unsigned> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(unsigned k) const {
  std::vector<unsigned> e(exps_);
  for (auto& x : e) x *= k;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  if (!divides(other)) throw InvalidArgument("monomial quotient: not divisible");
  std::vector<unsigned> e(other.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
  return Monomial(std::move(e));
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

namespace {

void fill_degree(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
                 std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    fill_degree(pos + 1, remaining - e, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t variable_count, unsigned degree) {
  std::vector<Monomial> out;
  if (variable_count == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(variable_count, 0);
  fill_degree(0, degree, cur, out);
  return out;
}

Variables make_variables(std::size_t count, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  return a == b || (a && b && *a == *b);
}

std::string to_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const Monomial& m) {
  return to_text(m, *make_variables(m.size()));
}

}  // namespace waring
