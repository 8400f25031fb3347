#include "parkseq/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace parkseq {

CarSizes::CarSizes(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] == 0) {
      throw InvalidInput("car " + std::to_string(i + 1) + " has size 0; sizes must be positive");
    }
  }
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
}

CarSizes CarSizes::with_appended(std::uint32_t size) const {
  std::vector<std::uint32_t> next(sizes_);
  next.push_back(size);
  return CarSizes(std::move(next));
}

TrailerLot::TrailerLot(std::uint32_t z, const CarSizes& sizes) : z_(z) {
  if (z < 1) {
    throw InvalidInput("trailer parameter z must be at least 1");
  }
  length_ = static_cast<std::size_t>(z - 1) + static_cast<std::size_t>(sizes.total());
}

void validate_preferences(const CarSizes& sizes, const TrailerLot& lot, std::span<const std::uint32_t> prefs) {
  if (prefs.size() != sizes.count()) {
    throw InvalidInput("got " + std::to_string(prefs.size()) + " preferences for " + std::to_string(sizes.count()) +
                       " cars");
  }
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (prefs[i] < 1 || prefs[i] > lot.length()) {
      throw InvalidInput("preference of car " + std::to_string(i + 1) + " is " + std::to_string(prefs[i]) +
                         ", outside [1, " + std::to_string(lot.length()) + "]");
    }
  }
}

std::string Cell::label() const {
  switch (kind_) {
    case Kind::Trailer:
      return "T";
    case Kind::Car:
      return "C" + std::to_string(car_);
    case Kind::Empty:
      break;
  }
  return ".";
}

std::string LotLayout::to_string() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (k > 0) out << ' ';
    out << cells_[k].label();
  }
  return out.str();
}

namespace {

enum class FailureKind { None, Collision, Overflow };

struct Failure {
  FailureKind kind = FailureKind::None;
  std::size_t car = 0;
  std::size_t first_empty = 0;
  std::size_t blocked_at = 0;
};

// The parking rule over a 0-based buffer holding cells 1..m. `is_free(k)` and
// `occupy(k, car)` take 1-based cell numbers.
template <typename IsFree, typename Occupy>
Failure park_in_order(std::span<const std::uint32_t> sizes, std::size_t m, std::span<const std::uint32_t> prefs,
                      IsFree is_free, Occupy occupy) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t car = i + 1;
    std::size_t j = prefs[i];
    while (j <= m && !is_free(j)) ++j;
    if (j > m) {
      return {FailureKind::Overflow, car, m + 1, 0};
    }
    const std::size_t last = j + sizes[i] - 1;
    for (std::size_t k = j + 1; k <= std::min(last, m); ++k) {
      if (!is_free(k)) {
        return {FailureKind::Collision, car, j, k};
      }
    }
    if (last > m) {
      return {FailureKind::Overflow, car, j, 0};
    }
    for (std::size_t k = j; k <= last; ++k) occupy(k, car);
  }
  return {};
}

}  // namespace

ParkingOutcome simulate_parking(const CarSizes& sizes, std::uint32_t z, const Preferences& prefs) {
  const TrailerLot lot(z, sizes);
  validate_preferences(sizes, lot, prefs.values());

  std::vector<Cell> cells(lot.length(), Cell::empty());
  std::fill_n(cells.begin(), lot.trailer_cells(), Cell::trailer());

  const Failure failure = park_in_order(
      sizes.values(), lot.length(), prefs.values(), [&](std::size_t k) { return cells[k - 1].is_empty(); },
      [&](std::size_t k, std::size_t car) { cells[k - 1] = Cell::car(car); });

  LotLayout layout(std::move(cells));
  switch (failure.kind) {
    case FailureKind::Collision:
      return Collision{failure.car, failure.first_empty, failure.blocked_at, std::move(layout)};
    case FailureKind::Overflow:
      return Overflow{failure.car, failure.first_empty, std::move(layout)};
    case FailureKind::None:
      break;
  }
  return Parked{std::move(layout)};
}

bool is_parking_sequence(const CarSizes& sizes, std::uint32_t z, const Preferences& prefs) {
  return is_parked(simulate_parking(sizes, z, prefs));
}

ParkingSimulator::ParkingSimulator(CarSizes sizes, std::uint32_t z)
    : sizes_(std::move(sizes)), lot_(z, sizes_), occupied_(lot_.length() + 1, 0) {}

bool ParkingSimulator::parks(std::span<const std::uint32_t> prefs) {
  const std::size_t trailer = lot_.trailer_cells();
  std::fill(occupied_.begin(), occupied_.end(), std::uint8_t{0});
  std::fill_n(occupied_.begin() + 1, trailer, std::uint8_t{1});
  const Failure failure = park_in_order(
      sizes_.values(), lot_.length(), prefs, [&](std::size_t k) { return occupied_[k] == 0; },
      [&](std::size_t k, std::size_t) { occupied_[k] = 1; });
  return failure.kind == FailureKind::None;
}

}  // namespace parkseq
