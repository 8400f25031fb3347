#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "parkseq/big_integer.hpp"
#include "parkseq/core.hpp"

namespace parkseq {

/// A finite set of positive integers, kept strictly increasing.
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws InvalidInput if `elements` is not strictly increasing or holds 0.
  explicit IndexSet(std::vector<std::uint32_t> elements);
  IndexSet(std::initializer_list<std::uint32_t> elements)
      : IndexSet(std::vector<std::uint32_t>(elements)) {}

  /// {1, ..., n}
  static IndexSet initial_segment(std::uint32_t n);

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(std::uint32_t a) const noexcept;
  /// Largest element; throws InvalidInput when empty.
  std::uint32_t max() const;
  std::span<const std::uint32_t> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// Elements whose position (0-based, ascending order) has its bit set in mask.
  IndexSet select(std::uint64_t mask) const;

  /// "{1,2,3}"
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::uint32_t> elements_;
};

/// An ordered pair (L, R) with L and R disjoint and L u R the ground set.
struct Split {
  IndexSet left;
  IndexSet right;
  friend bool operator==(const Split&, const Split&) = default;
};

inline constexpr std::size_t kMaxSplitGround = 30;

/// Calls fn(mask, split) for every ordered split of `ground`, where bit k of
/// mask says the k-th smallest element goes to L. Masks run 0 .. 2^|ground|-1.
template <typename Fn>
void for_each_split(const IndexSet& ground, Fn&& fn) {
  if (ground.size() > kMaxSplitGround) {
    throw InvalidInput("cannot split a ground set of " + std::to_string(ground.size()) + " elements (limit " +
                       std::to_string(kMaxSplitGround) + ")");
  }
  const std::uint64_t full = (std::uint64_t{1} << ground.size()) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    fn(mask, Split{ground.select(mask), ground.select(full & ~mask)});
  }
}

/// All 2^|ground| splits, ordered by the characteristic mask of L.
std::vector<Split> partitions_into_two(const IndexSet& ground);

/// y_S: the sizes of the cars in S, in increasing index order.
CarSizes restrict_sizes(const CarSizes& sizes, const IndexSet& subset);

/// z * (z + y_1 + n - 1) * (z + y_1 + y_2 + n - 2) * ... * (z + y_1 + ... + y_{n-1} + 1).
/// Equals 1 when there are no cars.
BigInt count_by_formula(const CarSizes& sizes, std::uint32_t z);

/// (y_1 + n) * (y_1 + y_2 + n - 1) * ... * (y_1 + ... + y_{n-1} + 2), the
/// trailer-free count.
BigInt count_no_trailer(const CarSizes& sizes);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Thrown when m^n preference tuples exceed the enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t lot_length, std::size_t cars, BigInt tuples, std::uint64_t budget);

  std::size_t lot_length() const noexcept { return lot_length_; }
  std::size_t cars() const noexcept { return cars_; }
  const BigInt& tuples() const noexcept { return tuples_; }

 private:
  std::size_t lot_length_;
  std::size_t cars_;
  BigInt tuples_;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// When false the budget is ignored.
  bool enforce_budget = true;
  /// Shards the first preference coordinate across this many threads.
  unsigned workers = 1;
};

struct EnumerationResult {
  BigInt parked;
  BigInt tuples_scanned;
};

/// Runs the simulator over every preference tuple in [1, m]^n, odometer order
/// (last coordinate fastest).
EnumerationResult enumerate_parking_sequences(const CarSizes& sizes, std::uint32_t z,
                                              const EnumerationOptions& options = {});

BigInt count_by_enumeration(const CarSizes& sizes, std::uint32_t z, const EnumerationOptions& options = {});

struct CountReport {
  BigInt enumerated;
  BigInt formula;
  bool match = false;
  BigInt tuples_scanned;
};

/// Formula against brute force for one instance.
CountReport compare_with_enumeration(const CarSizes& sizes, std::uint32_t z, const EnumerationOptions& options = {});

/// Both sides of the last-car recurrence for sizes extended by next_size.
struct RecurrenceReport {
  /// count_by_formula(sizes ++ (next_size), z)
  BigInt direct;
  /// sum over L u R = {1..n} of (z + sum_{l in L} y_l) * f(y_L; z) * f(y_R; 1)
  BigInt decomposed;
  bool match = false;
  std::size_t terms = 0;
};

RecurrenceReport verify_recurrence(const CarSizes& sizes, std::uint32_t next_size, std::uint32_t z);

}  // namespace parkseq
