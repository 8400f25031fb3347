#pragma once

// Test-only reference implementations. They share no code with the library:
// parking uses a std::set of free cells, counting recurses over tuples, and
// the Strehl products are evaluated numerically straight from the definition.

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "parkseq/big_integer.hpp"

namespace oracle {

inline bool parks(const std::vector<int>& sizes, int z, const std::vector<int>& prefs) {
  const int m = z - 1 + std::accumulate(sizes.begin(), sizes.end(), 0);
  std::set<int> free_cells;
  for (int k = z; k <= m; ++k) free_cells.insert(k);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    auto first = free_cells.lower_bound(prefs[i]);
    if (first == free_cells.end()) return false;
    const int start = *first;
    for (int k = start; k < start + sizes[i]; ++k) {
      if (free_cells.erase(k) == 0) return false;
    }
  }
  return true;
}

inline std::uint64_t count_parking_sequences(const std::vector<int>& sizes, int z) {
  const int m = z - 1 + std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> prefs;
  std::function<std::uint64_t()> recurse = [&]() -> std::uint64_t {
    if (prefs.size() == sizes.size()) return parks(sizes, z, prefs) ? 1 : 0;
    std::uint64_t total = 0;
    for (int c = 1; c <= m; ++c) {
      prefs.push_back(c);
      total += recurse();
      prefs.pop_back();
    }
    return total;
  };
  return recurse();
}

/// Values for x_{i,j} and y_j as plain functions of the labels.
struct Parameters {
  std::function<parkseq::BigInt(int, int)> x;
  std::function<parkseq::BigInt(int)> y;
};

/// z + sum_{j in A, j <= a} y_j + sum_{j in A, j > a} x_{a,j}
inline parkseq::BigInt linear_form(const std::vector<int>& A, int a, const Parameters& p, const parkseq::BigInt& z) {
  parkseq::BigInt v = z;
  for (int j : A) {
    if (j <= a) v += p.y(j);
    if (j > a) v += p.x(a, j);
  }
  return v;
}

inline parkseq::BigInt t_value(const std::vector<int>& A, const Parameters& p, const parkseq::BigInt& z) {
  if (A.empty()) return 1;
  parkseq::BigInt v = z;
  for (std::size_t k = 0; k + 1 < A.size(); ++k) v *= linear_form(A, A[k], p, z);
  return v;
}

inline parkseq::BigInt s_value(const std::vector<int>& A, const Parameters& p, const parkseq::BigInt& z) {
  parkseq::BigInt v = 1;
  for (int a : A) v *= linear_form(A, a, p, z);
  return v;
}

}  // namespace oracle
