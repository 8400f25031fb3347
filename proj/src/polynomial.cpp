#include "parkseq/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace parkseq {

Variable Variable::y(std::uint32_t j) {
  if (j == 0) {
    throw InvalidInput("y_j needs j >= 1");
  }
  return Variable(Kind::Y, j, 0);
}

Variable Variable::x(std::uint32_t i, std::uint32_t j) {
  if (i == 0 || i >= j) {
    throw InvalidInput("x_{i,j} needs 1 <= i < j, got i=" + std::to_string(i) + " j=" + std::to_string(j));
  }
  return Variable(Kind::X, i, j);
}

std::string Variable::to_string() const {
  switch (kind_) {
    case Kind::Z:
      return "z";
    case Kind::W:
      return "w";
    case Kind::Y:
      return "y" + std::to_string(first_);
    case Kind::X:
      return "x" + std::to_string(first_) + "_" + std::to_string(second_);
  }
  return "?";
}

Monomial::Monomial(Variable v, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

std::uint32_t Monomial::exponent_of(Variable v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& var) { return f.first < var; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::total_degree() const noexcept {
  std::uint32_t degree = 0;
  for (const auto& [v, e] : factors_) degree += e;
  return degree;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      out.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.to_string();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

const BigInt& ParameterAssignment::value_of(Variable v) const {
  switch (v.kind()) {
    case Variable::Kind::Z:
      return z_val;
    case Variable::Kind::W:
      return w_val;
    case Variable::Kind::Y:
      if (auto it = y_vals.find(v.first()); it != y_vals.end()) return it->second;
      break;
    case Variable::Kind::X:
      if (auto it = x_vals.find({v.first(), v.second()}); it != x_vals.end()) return it->second;
      break;
  }
  throw InvalidInput("no value assigned to " + v.to_string());
}

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial(v), BigInt(1)); }

Polynomial::Polynomial(const BigInt& coefficient, Monomial monomial) {
  if (coefficient != 0) terms_.emplace(std::move(monomial), coefficient);
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t Polynomial::degree_in(Variable v) const noexcept {
  std::uint32_t degree = 0;
  for (const auto& [m, c] : terms_) degree = std::max(degree, m.exponent_of(v));
  return degree;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

BigInt Polynomial::constant_value() const {
  if (!is_constant()) {
    throw InvalidInput("polynomial " + to_string() + " is not constant");
  }
  return terms_.empty() ? BigInt(0) : terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

BigInt Polynomial::evaluate(const ParameterAssignment& at) const {
  BigInt sum = 0;
  for (const auto& [m, c] : terms_) {
    BigInt term = c;
    for (const auto& [v, e] : m.factors()) term *= boost::multiprecision::pow(at.value_of(v), e);
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude << '*';
      out << m.to_string();
    }
  }
  return out.str();
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
  Polynomial result(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const SubstitutionRules& rules) {
  if (rules.empty()) return p;

  std::map<Monomial::Factor, Polynomial> powers;
  auto power_of = [&](const Monomial::Factor& factor) -> const Polynomial& {
    auto it = powers.find(factor);
    if (it == powers.end()) {
      auto rule = rules.find(factor.first);
      Polynomial image = rule == rules.end() ? Polynomial(factor.first) : rule->second;
      it = powers.emplace(factor, pow(image, factor.second)).first;
    }
    return it->second;
  };

  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    for (const auto& factor : m.factors()) term *= power_of(factor);
    out += term;
  }
  return out;
}

}  // namespace parkseq
