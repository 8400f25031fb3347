#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "parkseq/strehl.hpp"

using namespace parkseq;

namespace {

const Polynomial z = Variable::z();
const Polynomial w = Variable::w();
Polynomial y(std::uint32_t j) { return Variable::y(j); }
Polynomial x(std::uint32_t i, std::uint32_t j) { return Variable::x(i, j); }

std::vector<IndexSet> subsets_of_initial_segment(std::uint32_t n) {
  std::vector<IndexSet> out;
  for (const Split& s : partitions_into_two(IndexSet::initial_segment(n))) out.push_back(s.left);
  return out;
}

// Renames y_{a_k} -> y_k and x_{a_i,a_j} -> x_{i,j} for A = {a_1 < ... < a_k}.
Polynomial relabel_to_initial_segment(const Polynomial& p, const IndexSet& A) {
  SubstitutionRules rules;
  const auto elements = A.elements();
  for (std::uint32_t j = 0; j < elements.size(); ++j) {
    rules.emplace(Variable::y(elements[j]), Polynomial(Variable::y(j + 1)));
    for (std::uint32_t i = 0; i < j; ++i) {
      rules.emplace(Variable::x(elements[i], elements[j]), Polynomial(Variable::x(i + 1, j + 1)));
    }
  }
  return substitute(p, rules);
}

}  // namespace

TEST_CASE("x_upper_sum") {
  CHECK(x_upper_sum({1, 2, 3}, 1) == x(1, 2) + x(1, 3));
  CHECK(x_upper_sum({1, 2, 3}, 3).is_zero());
  CHECK(x_upper_sum({2, 5}, 2) == x(2, 5));
  CHECK_THROWS_AS(x_upper_sum({1, 2, 3}, 4), InvalidInput);
}

TEST_CASE("y_lower_sum") {
  CHECK(y_lower_sum({1, 2, 3}, 2) == y(1) + y(2));
  CHECK(y_lower_sum({1}, 1) == y(1));
  CHECK(y_lower_sum({2, 5}, 5) == y(2) + y(5));
  CHECK_THROWS_AS(y_lower_sum({2, 5}, 3), InvalidInput);
}

TEST_CASE("t_poly") {
  CHECK(t_poly({}) == Polynomial(1));
  CHECK(t_poly({1}) == z);
  CHECK(t_poly({1, 2}) == z * z + y(1) * z + x(1, 2) * z);
  CHECK(t_poly({4}) == z);
}

TEST_CASE("s_poly") {
  CHECK(s_poly({}) == Polynomial(1));
  CHECK(s_poly({1}) == z + y(1));
  CHECK(s_poly({1, 2}) == (z + y(1) + x(1, 2)) * (z + y(1) + y(2)));
}

TEST_CASE("factor counts and z-degrees equal |A|") {
  for (const IndexSet& A : subsets_of_initial_segment(5)) {
    CHECK(strehl_factors(A).size() == A.size());
    CHECK(t_poly(A).degree_in(Variable::z()) == A.size());
    CHECK(s_poly(A).degree_in(Variable::z()) == A.size());
  }
}

TEST_CASE("t and s agree with a direct numeric evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> value(-50, 50);
  for (int round = 0; round < 40; ++round) {
    std::vector<std::uint32_t> raw;
    for (std::uint32_t a = 1; a <= 7; ++a) {
      if (rng() % 2) raw.push_back(a);
    }
    const IndexSet A(raw);
    const std::vector<int> labels(raw.begin(), raw.end());

    ParameterAssignment at;
    at.z_val = value(rng);
    for (std::uint32_t j : A) at.y_vals[j] = value(rng);
    for (std::uint32_t i : A) {
      for (std::uint32_t j : A) {
        if (i < j) at.x_vals[{i, j}] = value(rng);
      }
    }
    oracle::Parameters params{[&](int i, int j) { return at.x_vals.at({i, j}); },
                              [&](int j) { return at.y_vals.at(j); }};
    REQUIRE(t_poly(A).evaluate(at) == oracle::t_value(labels, params, at.z_val));
    REQUIRE(s_poly(A).evaluate(at) == oracle::s_value(labels, params, at.z_val));
  }
}

TEST_CASE("(z + y_{<=max A}) t_A = z s_A") {
  CHECK(check_easy_identity({1}));
  CHECK(check_easy_identity({1, 2}));
  CHECK(check_easy_identity({1, 2, 3}));
  CHECK(check_easy_identity({3, 8, 11}));
  const IdentitySides sides = easy_identity_sides({1});
  CHECK(sides.lhs == (z + y(1)) * z);
  CHECK_THROWS_AS(check_easy_identity({}), InvalidInput);
}

TEST_CASE("Sheffer-type convolution, small cases") {
  CHECK(check_sheffer_convolution({}));
  const IdentitySides one = sheffer_convolution_sides({1});
  CHECK(one.lhs == z + w + y(1));
  CHECK(one.rhs == w + (z + y(1)));
  CHECK(one.holds());
  const IdentitySides two = sheffer_convolution_sides({1, 2});
  CHECK(two.lhs == (z + w + y(1) + x(1, 2)) * (z + w + y(1) + y(2)));
  CHECK(two.holds());
  CHECK(check_sheffer_convolution({2, 4, 9}));
}

TEST_CASE("Sheffer-type convolution fails when the blocks reuse A's partial sums") {
  // s_L and t_R built from the sums x^A and y^A instead of x^L, y^R.
  const IndexSet A{1, 2};
  const std::vector<Polynomial> factors = strehl_factors(A);
  auto factor_of = [&](std::uint32_t a) { return factors[a - 1]; };
  Polynomial rhs;
  for (const Split& split : partitions_into_two(A)) {
    Polynomial left(1);
    for (std::uint32_t a : split.left) left *= factor_of(a);
    Polynomial right(1);
    if (!split.right.empty()) {
      right = z;
      for (std::uint32_t a : split.right) {
        if (a != split.right.max()) right *= factor_of(a);
      }
      right = substitute(right, {{Variable::z(), w}});
    }
    rhs += left * right;
  }
  CHECK(rhs != sheffer_convolution_sides(A).lhs);
}

TEST_CASE("symbolic checks enforce their budget") {
  CHECK_THROWS_AS(check_sheffer_convolution(IndexSet::initial_segment(6)), SymbolicBudgetExceeded);
  CHECK_THROWS_AS(check_binomial_convolution(IndexSet::initial_segment(6)), SymbolicBudgetExceeded);
  CHECK(check_binomial_convolution(IndexSet::initial_segment(2), 2));
}

TEST_CASE("binomial-type convolution, small cases") {
  CHECK(check_binomial_convolution({}));
  const IdentitySides one = binomial_convolution_sides({1});
  CHECK(one.lhs == z + w);
  CHECK(one.holds());
  CHECK(check_binomial_convolution({1, 2}));
  CHECK(check_binomial_convolution({1, 2, 3}));
  CHECK(check_binomial_convolution({5, 6, 10}));
}

TEST_CASE("random assignments are seeded and bounded") {
  const IndexSet A{1, 3, 4};
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  const ParameterAssignment first = random_assignment(A, a);
  const ParameterAssignment second = random_assignment(A, b);
  CHECK(first.z_val == second.z_val);
  CHECK(first.y_vals == second.y_vals);
  CHECK(first.x_vals == second.x_vals);
  CHECK(first.x_vals.size() == 3);
  CHECK(first.y_vals.size() == 3);
  for (const auto& [j, v] : first.y_vals) {
    CHECK(v >= -kRandomValueBound);
    CHECK(v <= kRandomValueBound);
  }
}

TEST_CASE("randomized identity checks") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 987654321ULL}) {
    CHECK(random_identity_check(Identity::Easy, {}, 3, seed));
    CHECK(random_identity_check(Identity::Sheffer, {}, 3, seed));
    CHECK(random_identity_check(Identity::Binomial, {}, 3, seed));
  }
  const IndexSet eight = IndexSet::initial_segment(8);
  CHECK(random_identity_check(Identity::Sheffer, eight, 20, 42));
  CHECK(random_identity_check(Identity::Binomial, eight, 20, 42));
  CHECK(random_identity_check(Identity::Easy, eight, 20, 42));

  const RandomCheckReport report = random_identity_check_report(Identity::Sheffer, eight, {5, 7, std::nullopt});
  CHECK(report.agrees);
  CHECK(report.trials_run == 5);
  CHECK(report.lhs == report.rhs);
  CHECK_THROWS_AS(random_identity_check(Identity::Sheffer, eight, 0, 1), InvalidInput);
}

TEST_CASE("randomized evaluation matches the symbolic sides") {
  const IndexSet A{1, 2, 4};
  std::mt19937_64 engine(3);
  const ParameterAssignment at = random_assignment(A, engine);
  const IdentitySides sides = sheffer_convolution_sides(A);
  const RandomCheckReport report = random_identity_check_report(Identity::Sheffer, A, {1, 3, std::nullopt});
  CHECK(report.lhs == sides.lhs.evaluate(at));
  CHECK(report.rhs == sides.rhs.evaluate(at));
}

TEST_CASE("dropping any decomposition term breaks the randomized check") {
  const IndexSet A = IndexSet::initial_segment(5);
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    for (Identity identity : {Identity::Sheffer, Identity::Binomial}) {
      const RandomCheckReport report = random_identity_check_report(identity, A, {20, 11, mask});
      REQUIRE_FALSE(report.agrees);
    }
  }
}

TEST_CASE("t over any index set is t over {1..k} after relabeling") {
  for (const IndexSet& A : {IndexSet{2, 5}, IndexSet{1, 3, 4}, IndexSet{2, 6, 7, 9}, IndexSet{4}}) {
    const IndexSet segment = IndexSet::initial_segment(static_cast<std::uint32_t>(A.size()));
    CHECK(relabel_to_initial_segment(t_poly(A), A) == t_poly(segment));
    CHECK(relabel_to_initial_segment(s_poly(A), A) == s_poly(segment));
  }
}

TEST_CASE("f_as_t_specialization") {
  CHECK(f_as_t_specialization({}, 1) == 1);
  CHECK(f_as_t_specialization({}, 7) == 1);
  CHECK(f_as_t_specialization({1, 1, 1}, 1) == 16);
  CHECK(f_as_t_specialization({2, 2, 1}, 4) == 288);
  CHECK(f_as_t_specialization({3, 1, 2, 2}, 3) == count_by_formula({3, 1, 2, 2}, 3));
}

TEST_CASE("Abel-Rothe specialization") {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    CHECK(abel_rothe_specialize(IndexSet::initial_segment(n), StrehlFamily::T, 0, 0) == pow(z, n));
  }
  for (int xi : {-2, 0, 3}) {
    for (int eta : {-1, 1, 5}) {
      CHECK(abel_rothe_specialize({1, 2}, StrehlFamily::T, xi, eta) == z * (z + eta + xi));
    }
  }
  CHECK(abel_rothe_specialize({1, 2, 3}, StrehlFamily::T, 1, 1) == z * pow(z + 3, 2));

  for (std::uint32_t n = 1; n <= 6; ++n) {
    for (int xi : {-3, 0, 2, 7}) {
      for (int eta : {-4, 1, 3}) {
        Polynomial t_closed = z;
        Polynomial s_closed(1);
        for (std::uint32_t a = 1; a <= n; ++a) {
          const Polynomial factor = z + static_cast<int>(a) * eta + static_cast<int>(n - a) * xi;
          if (a < n) t_closed *= factor;
          s_closed *= factor;
        }
        const IndexSet A = IndexSet::initial_segment(n);
        REQUIRE(abel_rothe_specialize(A, StrehlFamily::T, xi, eta) == t_closed);
        REQUIRE(abel_rothe_specialize(A, StrehlFamily::S, xi, eta) == s_closed);
      }
    }
  }
}
