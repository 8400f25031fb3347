#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "parkseq/errors.hpp"

namespace parkseq {

/// Ordered car lengths y_1..y_n, all positive. n = 0 is allowed.
class CarSizes {
 public:
  CarSizes() = default;
  explicit CarSizes(std::vector<std::uint32_t> sizes);
  CarSizes(std::initializer_list<std::uint32_t> sizes)
      : CarSizes(std::vector<std::uint32_t>(sizes)) {}

  std::size_t count() const noexcept { return sizes_.size(); }
  bool empty() const noexcept { return sizes_.empty(); }
  std::uint64_t total() const noexcept { return total_; }

  /// Size of car i, 1-based.
  std::uint32_t car(std::size_t i) const { return sizes_.at(i - 1); }
  std::span<const std::uint32_t> values() const noexcept { return sizes_; }

  /// The vector with one more car appended at the end.
  CarSizes with_appended(std::uint32_t size) const;

  friend bool operator==(const CarSizes&, const CarSizes&) = default;

 private:
  std::vector<std::uint32_t> sizes_;
  std::uint64_t total_ = 0;
};

/// A row of m = z - 1 + sum(y) cells whose first z - 1 cells hold the trailer.
class TrailerLot {
 public:
  TrailerLot(std::uint32_t z, const CarSizes& sizes);

  std::uint32_t z() const noexcept { return z_; }
  std::size_t trailer_cells() const noexcept { return z_ - 1; }
  std::size_t length() const noexcept { return length_; }

 private:
  std::uint32_t z_;
  std::size_t length_;
};

/// Preferred spots c_1..c_n. Range checks happen against a concrete lot, see
/// validate_preferences().
class Preferences {
 public:
  Preferences() = default;
  explicit Preferences(std::vector<std::uint32_t> prefs) : prefs_(std::move(prefs)) {}
  Preferences(std::initializer_list<std::uint32_t> prefs) : prefs_(prefs) {}

  std::size_t count() const noexcept { return prefs_.size(); }
  std::uint32_t car(std::size_t i) const { return prefs_.at(i - 1); }
  std::span<const std::uint32_t> values() const noexcept { return prefs_; }

  friend bool operator==(const Preferences&, const Preferences&) = default;

 private:
  std::vector<std::uint32_t> prefs_;
};

/// Throws InvalidInput unless prefs has one entry per car, each in [1, m].
void validate_preferences(const CarSizes& sizes, const TrailerLot& lot, std::span<const std::uint32_t> prefs);

/// Contents of one lot cell.
class Cell {
 public:
  enum class Kind : std::uint8_t { Empty, Trailer, Car };

  static constexpr Cell empty() noexcept { return Cell(Kind::Empty, 0); }
  static constexpr Cell trailer() noexcept { return Cell(Kind::Trailer, 0); }
  static constexpr Cell car(std::size_t index) noexcept { return Cell(Kind::Car, index); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_empty() const noexcept { return kind_ == Kind::Empty; }
  /// 1-based car index; 0 unless kind() == Car.
  constexpr std::size_t car_index() const noexcept { return car_; }

  /// "T", "C<i>" or ".".
  std::string label() const;

  friend constexpr bool operator==(const Cell&, const Cell&) = default;

 private:
  constexpr Cell(Kind kind, std::size_t car) noexcept : kind_(kind), car_(car) {}

  Kind kind_;
  std::size_t car_;
};

/// Cells 1..m of a lot. cell(k) is 1-based.
class LotLayout {
 public:
  LotLayout() = default;
  explicit LotLayout(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  std::size_t length() const noexcept { return cells_.size(); }
  const Cell& cell(std::size_t k) const { return cells_.at(k - 1); }
  std::span<const Cell> cells() const noexcept { return cells_; }

  /// Space-separated cell labels, e.g. "T T T C3 C1 C1 C2 C2".
  std::string to_string() const;

  friend bool operator==(const LotLayout&, const LotLayout&) = default;

 private:
  std::vector<Cell> cells_;
};

struct Parked {
  LotLayout layout;
  friend bool operator==(const Parked&, const Parked&) = default;
};

/// Car `car` found its first empty cell at `first_empty`, but `blocked_at`
/// (inside its block) was already taken. `layout` is the lot before the car.
struct Collision {
  std::size_t car;
  std::size_t first_empty;
  std::size_t blocked_at;
  LotLayout layout;
  friend bool operator==(const Collision&, const Collision&) = default;
};

/// Car `car` ran past the end of the lot. When no empty cell >= c_i exists,
/// first_empty is m + 1.
struct Overflow {
  std::size_t car;
  std::size_t first_empty;
  LotLayout layout;
  friend bool operator==(const Overflow&, const Overflow&) = default;
};

using ParkingOutcome = std::variant<Parked, Collision, Overflow>;

inline bool is_parked(const ParkingOutcome& outcome) noexcept {
  return std::holds_alternative<Parked>(outcome);
}

/// Runs the greedy parking rule for cars 1..n in order and reports the first
/// failure, if any.
ParkingOutcome simulate_parking(const CarSizes& sizes, std::uint32_t z, const Preferences& prefs);

bool is_parking_sequence(const CarSizes& sizes, std::uint32_t z, const Preferences& prefs);

/// Reusable simulator for hot loops: keeps one scratch lot and never
/// allocates after construction.
class ParkingSimulator {
 public:
  ParkingSimulator(CarSizes sizes, std::uint32_t z);

  const CarSizes& sizes() const noexcept { return sizes_; }
  const TrailerLot& lot() const noexcept { return lot_; }

  /// Same answer as is_parking_sequence(); prefs must already be valid.
  bool parks(std::span<const std::uint32_t> prefs);

 private:
  CarSizes sizes_;
  TrailerLot lot_;
  std::vector<std::uint8_t> occupied_;
};

}  // namespace parkseq
