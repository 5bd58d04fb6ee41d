#pragma once

// Test-side oracles, independent of the library paths they check.

#include <cstdint>
#include <string>

namespace oracle {

/// Length of the n-th substitution image of "x" under x -> xyx, y -> x,
/// computed by literal string rewriting.
inline std::string substitute_once(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (c == 'x')
      out += "xyx";
    else
      out += "x";
  }
  return out;
}

inline std::string substituted(int n) {
  std::string w = "x";
  for (int i = 0; i < n; ++i) w = substitute_once(w);
  return w;
}

/// Cell count of the full commutation diamond between two palindromes of
/// odd length m: anti-diagonal bands of 1, 2, ..., m-1 squares rise to the
/// central band of m and fall back, every square split in two.
inline std::uint64_t diamond_cells(std::uint64_t m) {
  std::uint64_t squares = 0;
  for (std::uint64_t band = 1; band < m; ++band) squares += band;  // rising
  squares += m;                                                    // central
  for (std::uint64_t band = m; band-- > 1;) squares += band;       // falling
  return 2 * squares;
}

/// Transposition count moving each right-block letter past the left block
/// one step at a time (plain bubble shuffle, no subdivision bookkeeping).
inline std::uint64_t bubble_transpositions(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < m; ++i) count += m - 1 - i;
  return count;
}

}  // namespace oracle
