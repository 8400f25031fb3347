#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parkseq/counting.hpp"

namespace parkseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

inline constexpr const char* kBudgetEnvVar = "PARKSEQ_BUDGET";

enum class OutputFormat { Plain, Tsv, Json };

enum class TableFamily { Ones, Constant, Pattern };

/// Everything a subcommand needs, after flag parsing.
struct RunConfig {
  std::string subcommand;
  std::vector<std::uint32_t> sizes;
  std::uint32_t z = 1;
  std::optional<std::vector<std::uint32_t>> prefs;

  // verify / table sweeps
  std::string suite = "all";
  std::uint32_t n_max = 3;
  std::uint32_t y_max = 3;
  std::uint32_t z_max = 4;
  std::optional<IndexSet> set;
  TableFamily family = TableFamily::Ones;
  std::uint32_t constant_size = 1;
  std::vector<std::uint32_t> pattern;
  bool single_z = false;

  bool enumerate = false;
  bool force = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned workers = 1;
  std::size_t trials = 20;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::Plain;
};

/// Parses "2,2,1" into {2, 2, 1}. The empty string is the empty list.
/// Throws InvalidInput on anything but comma-separated positive integers.
std::vector<std::uint32_t> parse_positive_list(std::string_view text);

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 parking or verification failure, 2 invalid
/// input or exceeded budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parkseq::cli
