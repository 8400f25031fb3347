#include "parkseq/strehl.hpp"

namespace parkseq {

namespace {

void require_member(const IndexSet& A, std::uint32_t a) {
  if (!A.contains(a)) {
    throw InvalidInput(std::to_string(a) + " is not an element of " + A.to_string());
  }
}

void require_within_budget(const IndexSet& A, std::size_t budget) {
  if (A.size() > budget) {
    throw SymbolicBudgetExceeded("symbolic expansion over " + A.to_string() + " exceeds the budget of " +
                                 std::to_string(budget) + " elements");
  }
}

Polynomial product(const std::vector<Polynomial>& factors, std::size_t count) {
  Polynomial out(1);
  for (std::size_t k = 0; k < count; ++k) out *= factors[k];
  return out;
}

Polynomial with_z_replaced(const Polynomial& p, const Polynomial& image) {
  return substitute(p, {{Variable::z(), image}});
}

}  // namespace

Polynomial x_upper_sum(const IndexSet& A, std::uint32_t a) {
  require_member(A, a);
  Polynomial sum;
  for (std::uint32_t j : A) {
    if (j > a) sum += Variable::x(a, j);
  }
  return sum;
}

Polynomial y_lower_sum(const IndexSet& A, std::uint32_t a) {
  require_member(A, a);
  Polynomial sum;
  for (std::uint32_t j : A) {
    if (j <= a) sum += Variable::y(j);
  }
  return sum;
}

std::vector<Polynomial> strehl_factors(const IndexSet& A) {
  std::vector<Polynomial> factors;
  factors.reserve(A.size());
  for (std::uint32_t a : A) {
    factors.push_back(Polynomial(Variable::z()) + y_lower_sum(A, a) + x_upper_sum(A, a));
  }
  return factors;
}

Polynomial t_poly(const IndexSet& A) {
  if (A.empty()) return 1;
  const std::vector<Polynomial> factors = strehl_factors(A);
  return Polynomial(Variable::z()) * product(factors, factors.size() - 1);
}

Polynomial s_poly(const IndexSet& A) {
  const std::vector<Polynomial> factors = strehl_factors(A);
  return product(factors, factors.size());
}

IdentitySides easy_identity_sides(const IndexSet& A) {
  if (A.empty()) {
    throw InvalidInput("the identity (z + y_{<=max A}) t_A = z s_A needs a nonempty A");
  }
  const Polynomial leading = Polynomial(Variable::z()) + y_lower_sum(A, A.max());
  return {leading * t_poly(A), Polynomial(Variable::z()) * s_poly(A)};
}

bool check_easy_identity(const IndexSet& A) { return easy_identity_sides(A).holds(); }

IdentitySides sheffer_convolution_sides(const IndexSet& A, std::size_t budget) {
  require_within_budget(A, budget);
  const Polynomial z_plus_w = Polynomial(Variable::z()) + Variable::w();
  IdentitySides sides{with_z_replaced(s_poly(A), z_plus_w), Polynomial()};
  for_each_split(A, [&](std::uint64_t, const Split& split) {
    sides.rhs += s_poly(split.left) * with_z_replaced(t_poly(split.right), Variable::w());
  });
  return sides;
}

bool check_sheffer_convolution(const IndexSet& A, std::size_t budget) {
  return sheffer_convolution_sides(A, budget).holds();
}

IdentitySides binomial_convolution_sides(const IndexSet& A, std::size_t budget) {
  require_within_budget(A, budget);
  const Polynomial z_plus_w = Polynomial(Variable::z()) + Variable::w();
  IdentitySides sides{with_z_replaced(t_poly(A), z_plus_w), Polynomial()};
  for_each_split(A, [&](std::uint64_t, const Split& split) {
    sides.rhs += t_poly(split.left) * with_z_replaced(t_poly(split.right), Variable::w());
  });
  return sides;
}

bool check_binomial_convolution(const IndexSet& A, std::size_t budget) {
  return binomial_convolution_sides(A, budget).holds();
}

std::string to_string(Identity identity) {
  switch (identity) {
    case Identity::Easy:
      return "easy";
    case Identity::Sheffer:
      return "sheffer";
    case Identity::Binomial:
      return "binomial";
  }
  return "?";
}

ParameterAssignment random_assignment(const IndexSet& A, std::mt19937_64& engine) {
  constexpr std::uint64_t span = 2 * kRandomValueBound + 1;
  // Plain modular reduction keeps the stream identical across standard
  // libraries; the bias is below 2^-40.
  auto draw = [&] { return BigInt(static_cast<std::int64_t>(engine() % span) - kRandomValueBound); };

  ParameterAssignment at;
  at.z_val = draw();
  at.w_val = draw();
  for (std::uint32_t j : A) at.y_vals[j] = draw();
  for (std::uint32_t i : A) {
    for (std::uint32_t j : A) {
      if (i < j) at.x_vals[{i, j}] = draw();
    }
  }
  return at;
}

namespace {

// Linear factors of one block, evaluated numerically per trial.
struct Block {
  std::vector<Polynomial> factors;

  BigInt s_value(ParameterAssignment& at, const BigInt& z) const {
    at.z_val = z;
    BigInt value = 1;
    for (const Polynomial& f : factors) value *= f.evaluate(at);
    return value;
  }

  BigInt t_value(ParameterAssignment& at, const BigInt& z) const {
    if (factors.empty()) return 1;
    at.z_val = z;
    BigInt value = z;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) value *= factors[k].evaluate(at);
    return value;
  }
};

struct SplitBlocks {
  std::uint64_t mask;
  Block left;
  Block right;
};

}  // namespace

RandomCheckReport random_identity_check_report(Identity identity, const IndexSet& A,
                                               const RandomCheckOptions& options) {
  if (options.trials < 1) {
    throw InvalidInput("a randomized identity check needs at least one trial");
  }
  RandomCheckReport report;
  if (A.empty() && identity == Identity::Easy) {
    // No maximum to pair with; both sides are vacuous.
    return report;
  }

  const Block whole{strehl_factors(A)};
  std::vector<SplitBlocks> splits;
  Polynomial easy_leading;
  if (identity == Identity::Easy) {
    easy_leading = Polynomial(Variable::z()) + y_lower_sum(A, A.max());
  } else {
    for_each_split(A, [&](std::uint64_t mask, const Split& split) {
      if (options.omit_term && *options.omit_term == mask) return;
      splits.push_back({mask, Block{strehl_factors(split.left)}, Block{strehl_factors(split.right)}});
    });
  }

  std::mt19937_64 engine(options.seed);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    ParameterAssignment at = random_assignment(A, engine);
    const BigInt z = at.z_val;
    const BigInt w = at.w_val;

    BigInt lhs;
    BigInt rhs = 0;
    switch (identity) {
      case Identity::Easy:
        lhs = easy_leading.evaluate(at) * whole.t_value(at, z);
        rhs = z * whole.s_value(at, z);
        break;
      case Identity::Sheffer:
        lhs = whole.s_value(at, z + w);
        for (const SplitBlocks& s : splits) rhs += s.left.s_value(at, z) * s.right.t_value(at, w);
        break;
      case Identity::Binomial:
        lhs = whole.t_value(at, z + w);
        for (const SplitBlocks& s : splits) rhs += s.left.t_value(at, z) * s.right.t_value(at, w);
        break;
    }

    ++report.trials_run;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    if (report.lhs != report.rhs) {
      report.agrees = false;
      break;
    }
  }
  return report;
}

bool random_identity_check(Identity identity, const IndexSet& A, std::size_t trials, std::uint64_t seed) {
  return random_identity_check_report(identity, A, {trials, seed, std::nullopt}).agrees;
}

BigInt f_as_t_specialization(const CarSizes& sizes, std::uint32_t z_val) {
  const auto n = static_cast<std::uint32_t>(sizes.count());
  SubstitutionRules rules{{Variable::z(), Polynomial(BigInt(z_val))}};
  for (std::uint32_t j = 1; j <= n; ++j) {
    rules.emplace(Variable::y(j), Polynomial(BigInt(sizes.car(j))));
    for (std::uint32_t i = 1; i < j; ++i) rules.emplace(Variable::x(i, j), Polynomial(1));
  }
  return substitute(t_poly(IndexSet::initial_segment(n)), rules).constant_value();
}

Polynomial abel_rothe_specialize(const IndexSet& A, StrehlFamily which, const BigInt& xi, const BigInt& eta) {
  SubstitutionRules rules;
  for (std::uint32_t j : A) {
    rules.emplace(Variable::y(j), Polynomial(eta));
    for (std::uint32_t i : A) {
      if (i < j) rules.emplace(Variable::x(i, j), Polynomial(xi));
    }
  }
  return substitute(which == StrehlFamily::T ? t_poly(A) : s_poly(A), rules);
}

}  // namespace parkseq
