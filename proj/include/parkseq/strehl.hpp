#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkseq/big_integer.hpp"
#include "parkseq/core.hpp"
#include "parkseq/counting.hpp"
#include "parkseq/polynomial.hpp"

namespace parkseq {

/// sum_{j in A, j > a} x_{a,j}. Throws InvalidInput when a is not in A.
Polynomial x_upper_sum(const IndexSet& A, std::uint32_t a);

/// sum_{j in A, j <= a} y_j. Throws InvalidInput when a is not in A.
Polynomial y_lower_sum(const IndexSet& A, std::uint32_t a);

/// The linear forms z + y^A_{<=a} + x^A_{>a}, one per a in A, ascending in a.
/// Every partial sum is taken relative to A itself.
std::vector<Polynomial> strehl_factors(const IndexSet& A);

/// t_A(x, y; z) = z * prod_{a in A - max A} (z + y^A_{<=a} + x^A_{>a}); 1 for the empty set.
Polynomial t_poly(const IndexSet& A);

/// s_A(x, y; z) = prod_{a in A} (z + y^A_{<=a} + x^A_{>a}); 1 for the empty set.
Polynomial s_poly(const IndexSet& A);

enum class StrehlFamily { T, S };

/// Largest |A| for which the convolution identities are expanded symbolically.
inline constexpr std::size_t kSymbolicBudget = 5;

class SymbolicBudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Left and right hand side of an identity, both fully expanded.
struct IdentitySides {
  Polynomial lhs;
  Polynomial rhs;
  bool holds() const { return lhs == rhs; }
};

/// (z + y^A_{<=max A}) * t_A(z)  versus  z * s_A(z). A must be nonempty.
IdentitySides easy_identity_sides(const IndexSet& A);
bool check_easy_identity(const IndexSet& A);

/// s_A(z + w)  versus  sum_{L u R = A} s_L(z) * t_R(w), with the partial sums
/// inside s_L and t_R taken relative to L and R.
IdentitySides sheffer_convolution_sides(const IndexSet& A, std::size_t budget = kSymbolicBudget);
bool check_sheffer_convolution(const IndexSet& A, std::size_t budget = kSymbolicBudget);

/// t_A(z + w)  versus  sum_{B u C = A} t_B(z) * t_C(w).
IdentitySides binomial_convolution_sides(const IndexSet& A, std::size_t budget = kSymbolicBudget);
bool check_binomial_convolution(const IndexSet& A, std::size_t budget = kSymbolicBudget);

enum class Identity { Easy, Sheffer, Binomial };

std::string to_string(Identity identity);

struct RandomCheckOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  /// Drops the decomposition term whose left block has this characteristic
  /// mask over A. Used for mutation testing; ignored for Identity::Easy.
  std::optional<std::uint64_t> omit_term;
};

struct RandomCheckReport {
  bool agrees = true;
  std::size_t trials_run = 0;
  /// Both sides at the last evaluated point (the first disagreeing one, if any).
  BigInt lhs;
  BigInt rhs;
};

/// Inclusive range for randomly drawn parameter values.
inline constexpr std::int64_t kRandomValueBound = 1'000'000;

/// Draws z, w, y_j and x_{i,j} (i < j in A) uniformly from [-10^6, 10^6].
/// The draw order is fixed, so equal engine states give equal assignments.
ParameterAssignment random_assignment(const IndexSet& A, std::mt19937_64& engine);

/// Evaluates both sides of `identity` at `trials` seeded random points with
/// exact integers; stops at the first disagreement.
RandomCheckReport random_identity_check_report(Identity identity, const IndexSet& A, const RandomCheckOptions& options);

bool random_identity_check(Identity identity, const IndexSet& A, std::size_t trials, std::uint64_t seed);

/// t_{1..n} with every x_{i,j} = 1, y_j = sizes_j and z = z_val, evaluated exactly.
BigInt f_as_t_specialization(const CarSizes& sizes, std::uint32_t z_val);

/// t_A or s_A with every x_{i,j} = xi and every y_j = eta; a polynomial in z alone.
Polynomial abel_rothe_specialize(const IndexSet& A, StrehlFamily which, const BigInt& xi, const BigInt& eta);

}  // namespace parkseq
