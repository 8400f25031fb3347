#include "parkseq/counting.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace parkseq {

IndexSet::IndexSet(std::vector<std::uint32_t> elements) : elements_(std::move(elements)) {
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k] == 0) {
      throw InvalidInput("index sets hold positive integers only");
    }
    if (k > 0 && elements_[k - 1] >= elements_[k]) {
      throw InvalidInput("index set elements must be strictly increasing");
    }
  }
}

IndexSet IndexSet::initial_segment(std::uint32_t n) {
  std::vector<std::uint32_t> elements(n);
  for (std::uint32_t k = 0; k < n; ++k) elements[k] = k + 1;
  return IndexSet(std::move(elements));
}

bool IndexSet::contains(std::uint32_t a) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::uint32_t IndexSet::max() const {
  if (elements_.empty()) {
    throw InvalidInput("the empty index set has no maximum");
  }
  return elements_.back();
}

IndexSet IndexSet::select(std::uint64_t mask) const {
  IndexSet out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if ((mask >> k) & 1U) out.elements_.push_back(elements_[k]);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k > 0) out << ',';
    out << elements_[k];
  }
  out << '}';
  return out.str();
}

std::vector<Split> partitions_into_two(const IndexSet& ground) {
  std::vector<Split> splits;
  for_each_split(ground, [&](std::uint64_t, Split split) { splits.push_back(std::move(split)); });
  return splits;
}

CarSizes restrict_sizes(const CarSizes& sizes, const IndexSet& subset) {
  std::vector<std::uint32_t> picked;
  picked.reserve(subset.size());
  for (std::uint32_t s : subset) {
    if (s > sizes.count()) {
      throw InvalidInput("index " + std::to_string(s) + " exceeds the " + std::to_string(sizes.count()) + " cars");
    }
    picked.push_back(sizes.car(s));
  }
  return CarSizes(std::move(picked));
}

BigInt count_by_formula(const CarSizes& sizes, std::uint32_t z) {
  if (z < 1) {
    throw InvalidInput("trailer parameter z must be at least 1");
  }
  const std::size_t n = sizes.count();
  if (n == 0) return 1;

  BigInt product = z;
  BigInt prefix = 0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += sizes.car(k);
    product *= BigInt(z) + prefix + (n - k);
  }
  return product;
}

BigInt count_no_trailer(const CarSizes& sizes) {
  const std::size_t n = sizes.count();
  BigInt product = 1;
  BigInt prefix = 0;
  for (std::size_t k = 1; k < n; ++k) {
    prefix += sizes.car(k);
    product *= prefix + (n - k + 1);
  }
  return product;
}

BudgetExceeded::BudgetExceeded(std::size_t lot_length, std::size_t cars, BigInt tuples, std::uint64_t budget)
    : std::runtime_error("enumeration of m^n = " + std::to_string(lot_length) + "^" + std::to_string(cars) + " = " +
                         tuples.str() + " tuples exceeds the budget of " + std::to_string(budget)),
      lot_length_(lot_length),
      cars_(cars),
      tuples_(std::move(tuples)) {}

namespace {

struct ShardCount {
  std::uint64_t parked = 0;
  std::uint64_t scanned = 0;
};

// Every tuple whose first coordinate lies in [first_lo, first_hi].
ShardCount enumerate_shard(const CarSizes& sizes, std::uint32_t z, std::uint32_t first_lo, std::uint32_t first_hi) {
  ParkingSimulator simulator(sizes, z);
  const std::size_t n = sizes.count();
  const auto m = static_cast<std::uint32_t>(simulator.lot().length());

  ShardCount count;
  std::vector<std::uint32_t> prefs(n, 1);
  prefs[0] = first_lo;
  while (true) {
    ++count.scanned;
    if (simulator.parks(prefs)) ++count.parked;

    std::size_t pos = n;
    while (pos > 1 && prefs[pos - 1] == m) {
      prefs[pos - 1] = 1;
      --pos;
    }
    if (pos == 1) {
      if (prefs[0] == first_hi) break;
      ++prefs[0];
    } else {
      ++prefs[pos - 1];
    }
  }
  return count;
}

}  // namespace

EnumerationResult enumerate_parking_sequences(const CarSizes& sizes, std::uint32_t z,
                                              const EnumerationOptions& options) {
  const TrailerLot lot(z, sizes);
  const std::size_t n = sizes.count();
  const std::size_t m = lot.length();

  BigInt tuples = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n));
  if (options.enforce_budget && tuples > options.budget) {
    throw BudgetExceeded(m, n, tuples, options.budget);
  }
  if (n == 0) {
    // The empty tuple is the only preference vector and it parks.
    return {1, 1};
  }

  const unsigned workers = std::clamp<unsigned>(options.workers, 1, static_cast<unsigned>(m));
  std::vector<ShardCount> shards(workers);
  auto range_of = [&](unsigned w) {
    const auto lo = static_cast<std::uint32_t>(1 + (m * w) / workers);
    const auto hi = static_cast<std::uint32_t>((m * (w + 1)) / workers);
    return std::pair{lo, hi};
  };

  if (workers == 1) {
    shards[0] = enumerate_shard(sizes, z, 1, static_cast<std::uint32_t>(m));
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        const auto [lo, hi] = range_of(w);
        shards[w] = enumerate_shard(sizes, z, lo, hi);
      });
    }
  }

  EnumerationResult result{0, 0};
  for (const ShardCount& shard : shards) {
    result.parked += shard.parked;
    result.tuples_scanned += shard.scanned;
  }
  return result;
}

BigInt count_by_enumeration(const CarSizes& sizes, std::uint32_t z, const EnumerationOptions& options) {
  return enumerate_parking_sequences(sizes, z, options).parked;
}

CountReport compare_with_enumeration(const CarSizes& sizes, std::uint32_t z, const EnumerationOptions& options) {
  EnumerationResult enumerated = enumerate_parking_sequences(sizes, z, options);
  CountReport report;
  report.formula = count_by_formula(sizes, z);
  report.enumerated = std::move(enumerated.parked);
  report.tuples_scanned = std::move(enumerated.tuples_scanned);
  report.match = report.formula == report.enumerated;
  return report;
}

RecurrenceReport verify_recurrence(const CarSizes& sizes, std::uint32_t next_size, std::uint32_t z) {
  RecurrenceReport report;
  report.direct = count_by_formula(sizes.with_appended(next_size), z);
  report.decomposed = 0;

  const IndexSet ground = IndexSet::initial_segment(static_cast<std::uint32_t>(sizes.count()));
  for_each_split(ground, [&](std::uint64_t, const Split& split) {
    const CarSizes left = restrict_sizes(sizes, split.left);
    const CarSizes right = restrict_sizes(sizes, split.right);
    BigInt slot_choices = BigInt(z) + left.total();
    report.decomposed += slot_choices * count_by_formula(left, z) * count_by_formula(right, 1);
    ++report.terms;
  });
  report.match = report.direct == report.decomposed;
  return report;
}

}  // namespace parkseq
