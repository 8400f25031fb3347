#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkseq/big_integer.hpp"
#include "parkseq/errors.hpp"

namespace parkseq {

/// One indeterminate: z, w, y_j or x_{i,j} with i < j.
///
/// Variables are totally ordered z < w < y_1 < y_2 < ... < x_{1,2} < x_{1,3} < ...
/// and that order fixes the canonical form of monomials.
class Variable {
 public:
  enum class Kind : std::uint8_t { Z = 0, W = 1, Y = 2, X = 3 };

  static constexpr Variable z() noexcept { return Variable(Kind::Z, 0, 0); }
  static constexpr Variable w() noexcept { return Variable(Kind::W, 0, 0); }
  /// Throws InvalidInput for j = 0.
  static Variable y(std::uint32_t j);
  /// Throws InvalidInput unless 1 <= i < j.
  static Variable x(std::uint32_t i, std::uint32_t j);

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr std::uint32_t first() const noexcept { return first_; }
  constexpr std::uint32_t second() const noexcept { return second_; }

  std::string to_string() const;

  friend constexpr auto operator<=>(const Variable&, const Variable&) = default;

 private:
  constexpr Variable(Kind kind, std::uint32_t first, std::uint32_t second) noexcept
      : kind_(kind), first_(first), second_(second) {}

  Kind kind_;
  std::uint32_t first_;
  std::uint32_t second_;
};

/// A product of variable powers, stored sorted by variable with positive
/// exponents only. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<Variable, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Variable v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t exponent_of(Variable v) const noexcept;
  std::uint32_t total_degree() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Values for every variable a polynomial may mention. Evaluating a
/// polynomial that uses an unassigned variable throws InvalidInput.
struct ParameterAssignment {
  BigInt z_val = 0;
  BigInt w_val = 0;
  std::map<std::uint32_t, BigInt> y_vals;
  std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt> x_vals;

  const BigInt& value_of(Variable v) const;
};

/// Exact multivariate polynomial with integer coefficients.
///
/// The term map never holds a zero coefficient, so two polynomials are equal
/// exactly when their term maps are.
class Polynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  Polynomial() = default;
  Polynomial(BigInt constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(BigInt(constant)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(Variable v);  // NOLINT(google-explicit-constructor)
  Polynomial(const BigInt& coefficient, Monomial monomial);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of `m`, 0 when absent.
  BigInt coefficient(const Monomial& m) const;
  std::uint32_t degree_in(Variable v) const noexcept;
  /// True when no variable occurs; constant_value() is then the value.
  bool is_constant() const noexcept;
  BigInt constant_value() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  BigInt evaluate(const ParameterAssignment& at) const;

  /// "z^2 + 2*z*w + w^2"; terms follow the canonical monomial order.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  Terms terms_;
};

Polynomial pow(const Polynomial& base, std::uint32_t exponent);

using SubstitutionRules = std::map<Variable, Polynomial>;

/// Replaces every variable named in `rules` simultaneously and expands.
Polynomial substitute(const Polynomial& p, const SubstitutionRules& rules);

}  // namespace parkseq
