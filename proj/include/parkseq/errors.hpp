#pragma once

#include <stdexcept>

namespace parkseq {

/// Raised for malformed input: zero car sizes, z < 1, preferences outside the
/// lot, mismatched lengths. Distinct from a failed parking attempt.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace parkseq
